#ifndef MG_HN_HPP
#define MG_HN_HPP

#include <optional>
#include <vector>

#include "mg/charge_geometry.hpp"
#include "mg/rational.hpp"
#include "mg/rep.hpp"

namespace mg {

// An algebraic stability condition on the standard heart of a quiver: one
// Gaussian-rational charge per simple, each in the semi-closed upper
// half-plane. Phase comparisons between heart objects are exact.
class StabilityCondition {
public:
    StabilityCondition(Quiver quiver, std::vector<GaussianRational> z);

    // z_i = i for every vertex: the special condition whose mass is
    // dim E * e^{t/2} on heart objects
    static StabilityCondition sigma0(const Quiver& quiver);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<GaussianRational>& charges() const { return z_; }

    GaussianRational charge_of(const DimVector& d) const;
    double phase_of(const DimVector& d) const;

private:
    Quiver quiver_;
    std::vector<GaussianRational> z_;
};

// every nonzero subobject has phase <= the phase of the object (exact)
bool is_semistable(const StabilityCondition& sigma, const Representation& rep,
                   int cap = kDefaultEnumerationCap);

struct HNFiltration {
    std::vector<Subrep> steps;  // E_1 subset ... subset E_m = rep, inside rep
    std::vector<Representation> factors;
    std::vector<GaussianRational> factor_charges;
    std::vector<double> factor_phases;

    std::size_t length() const { return factors.size(); }
};

// Greedy extraction of the maximal destabilizing subobject: maximal phase,
// then maximal dimension, asserted unique at every step. Factor phases
// strictly decrease and the factor charges telescope to Z(rep).
HNFiltration hn_filtration(const StabilityCondition& sigma, const Representation& rep,
                           int cap = kDefaultEnumerationCap);

// sum over HN factors of |Z(A_i)| e^{phi_i t}; 0 for the zero representation
double mass(const StabilityCondition& sigma, const Representation& rep, double t,
            int cap = kDefaultEnumerationCap);

// mass of a formal sum of simples (no enumeration; factors grouped by exact
// phase class)
double mass_semisimple(const StabilityCondition& sigma, const DimVector& multiplicities, double t);

struct PolygonOracle {
    HNPolygon hull;                           // left hull of all subobject charges
    std::vector<GaussianRational> hn_points;  // 0, Z(E_1), ..., Z(E_m)
    bool agreement;                           // exact coincidence of the two
};

// The two independent routes to the HN data: brute-force hull of subobject
// charges versus the greedy filtration.
PolygonOracle hn_polygon_oracle(const StabilityCondition& sigma, const Representation& rep,
                                int cap = kDefaultEnumerationCap);

// An object of the derived category presented by its cohomology: either an
// explicit module or a formal sum of simples, placed in a degree.
struct ProfileEntry {
    int degree = 0;
    std::optional<Representation> module;
    DimVector simple_multiplicities;  // used when module is absent

    std::int64_t dim(const Quiver& quiver) const;
};

struct CohomologyProfile {
    std::vector<ProfileEntry> entries;  // degrees pairwise distinct

    std::int64_t dim_at(int degree, const Quiver& quiver) const;
};

// sum_k mass(H^k) e^{-kt}. Formal simple sums avoid the enumeration cap; the
// phase windows of distinct degrees are disjoint, so the sum matches the mass
// of the underlying object.
double mass_of_complex(const StabilityCondition& sigma, const CohomologyProfile& profile, double t,
                       int cap = kDefaultEnumerationCap);

enum class Norm { Euclidean, L1, Linf };

// sampled support-property witness: min |Z(E)| / norm([E]) over a corpus of
// semistable objects
double support_constant_sample(const StabilityCondition& sigma,
                               const std::vector<Representation>& semistables,
                               Norm norm = Norm::Euclidean);

struct StabDistanceSample {
    double phase_gap;   // sup of |phi^+- difference| over the corpus
    double charge_gap;  // sup |Z - W| / |Z| over sigma-semistable corpus members
    double ratio_min;   // range of mass_{sigma,t} / mass_{tau,t}
    double ratio_max;
};

StabDistanceSample stab_distance_sample(const StabilityCondition& sigma,
                                        const StabilityCondition& tau,
                                        const std::vector<Representation>& corpus, double t,
                                        int cap = kDefaultEnumerationCap);

}  // namespace mg

#endif
