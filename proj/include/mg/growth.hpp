#ifndef MG_GROWTH_HPP
#define MG_GROWTH_HPP

#include <optional>
#include <string>
#include <vector>

#include "mg/hn.hpp"
#include "mg/spectral.hpp"
#include "mg/twist.hpp"

namespace mg {

struct GrowthSeries {
    std::vector<std::pair<int, double>> samples;  // (n, value), n strictly increasing, value > 0
    std::string label;
};

// Numeric surrogate for limsup (1/n) log a_n: least-squares slope of log a_n
// over the last half of the samples, and the mean log-increment over the same
// window. The two agree on convergent series; the gap is the diagnostic.
struct GrowthEstimate {
    double slope = 0.0;  // primary estimate (tail regression)
    double slope_regression = 0.0;
    double slope_increment = 0.0;
    double method_gap = 0.0;
    double residual_variance = 0.0;
    int tail_begin = 0;
    int tail_end = 0;
};

GrowthEstimate estimate_growth_rate(const GrowthSeries& series);

// m_{sigma,t}(Phi_i^n G) for n = 0..n_max, G the sum of the simples, computed
// through the exact cohomology profiles of the twist powers.
GrowthSeries twist_mass_series(const StabilityCondition& sigma, int cy_n, int i, double t, int n_max,
                               int p = 2, int cap = kDefaultEnumerationCap);

// Closed-form twist entropy max(0, (1-N) t). Defined for connected quivers
// other than the one-vertex quiver with no arrows.
double entropy_twist_power(const Quiver& quiver, int cy_n, double t);

// Two-sided entropy data for a twist word at t = 0: log spectral radius from
// the K-theory matrix below, the no-cancellation profile growth above, the
// closed form in between when the word is a single twist (or a pure shift).
struct EntropyReport {
    double lower_log_rho = 0.0;
    bool spectral_exact = true;
    std::optional<double> exact;
    double upper_bound = 0.0;
    GrowthEstimate upper_estimate;
    std::optional<GrowthEstimate> mass_growth;  // only for single-twist words
};

EntropyReport spectral_bound_report(const Quiver& quiver, int cy_n, const TwistWord& word,
                                    const StabilityCondition& sigma, int n_max,
                                    double tolerance = 0.05);

// Two-sided bounds for the complexity delta_t(G, E): mass ratio from below,
// the Poincare value e^{-t/2} m_{sigma_0,t}(E) from above.
struct DeltaBounds {
    double lower = 0.0;
    double upper = 0.0;
};

DeltaBounds delta_bounds(const StabilityCondition& sigma, const Representation& rep, double t,
                         int cap = kDefaultEnumerationCap);
DeltaBounds delta_bounds(const StabilityCondition& sigma, const CohomologyProfile& profile, double t,
                         int cap = kDefaultEnumerationCap);

// Mass-growth slopes of one twist generator under several stability
// conditions; passes when all pairwise slope gaps stay below the tolerance.
struct DeformationCheck {
    bool pass = false;
    std::vector<double> slopes;
    double max_gap = 0.0;
    double tolerance = 0.0;
};

DeformationCheck deformation_invariance_check(int cy_n, int i, double t,
                                              const std::vector<StabilityCondition>& charges,
                                              int n_max, double tolerance = 0.02);

}  // namespace mg

#endif
