#include "mg/growth.hpp"

#include <cmath>
#include <stdexcept>

namespace mg {

GrowthEstimate estimate_growth_rate(const GrowthSeries& series) {
    const auto& s = series.samples;
    if (s.size() < 8) throw std::invalid_argument("estimate_growth_rate: at least 8 samples required");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!(s[i].second > 0.0))
            throw std::invalid_argument("estimate_growth_rate: values must be positive");
        if (i > 0 && s[i].first <= s[i - 1].first)
            throw std::invalid_argument("estimate_growth_rate: sample indices must strictly increase");
    }

    const std::size_t begin = s.size() / 2;  // tail window = last half
    const std::size_t m = s.size() - begin;

    double nbar = 0.0, ybar = 0.0;
    for (std::size_t i = begin; i < s.size(); ++i) {
        nbar += s[i].first;
        ybar += std::log(s[i].second);
    }
    nbar /= static_cast<double>(m);
    ybar /= static_cast<double>(m);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = begin; i < s.size(); ++i) {
        const double dx = s[i].first - nbar;
        sxx += dx * dx;
        sxy += dx * (std::log(s[i].second) - ybar);
    }
    const double slope_reg = sxy / sxx;

    double res = 0.0;
    for (std::size_t i = begin; i < s.size(); ++i) {
        const double fit = ybar + slope_reg * (s[i].first - nbar);
        const double r = std::log(s[i].second) - fit;
        res += r * r;
    }
    res /= static_cast<double>(m);

    double inc = 0.0;
    for (std::size_t i = begin; i + 1 < s.size(); ++i)
        inc += (std::log(s[i + 1].second) - std::log(s[i].second)) /
               static_cast<double>(s[i + 1].first - s[i].first);
    inc /= static_cast<double>(m - 1);

    GrowthEstimate est;
    est.slope = slope_reg;
    est.slope_regression = slope_reg;
    est.slope_increment = inc;
    est.method_gap = std::fabs(slope_reg - inc);
    est.residual_variance = res;
    est.tail_begin = s[begin].first;
    est.tail_end = s.back().first;
    return est;
}

GrowthSeries twist_mass_series(const StabilityCondition& sigma, int cy_n, int i, double t, int n_max,
                               int p, int cap) {
    require_cy_dimension(cy_n);
    const Quiver& quiver = sigma.quiver();
    if (i < 0 || i >= quiver.vertex_count())
        throw std::invalid_argument("twist_mass_series: vertex out of range");
    if (n_max < 8) throw std::invalid_argument("twist_mass_series: n_max must be at least 8");

    GrowthSeries series;
    series.label = "mass(T" + std::to_string(i + 1) + "^n G), t=" + std::to_string(t);
    for (int n = 0; n <= n_max; ++n) {
        double value = 0.0;
        for (int j = 0; j < quiver.vertex_count(); ++j) {
            const TwistPowerProfile prof = twist_power_profile(quiver, cy_n, i, n, j, p);
            value += mass_of_complex(sigma, prof.profile, t, cap);
        }
        if (!std::isfinite(value))
            throw std::overflow_error("twist_mass_series: values exceed double range; lower n_max");
        series.samples.emplace_back(n, value);
    }
    return series;
}

double entropy_twist_power(const Quiver& quiver, int cy_n, double t) {
    require_cy_dimension(cy_n);
    if (quiver.vertex_count() == 1 && quiver.arrows().empty())
        throw std::invalid_argument(
            "entropy_twist_power: undefined for the one-vertex quiver with no arrows");
    if (!quiver.connected()) throw std::invalid_argument("entropy_twist_power: quiver must be connected");
    return std::max(0.0, (1.0 - static_cast<double>(cy_n)) * t);
}

EntropyReport spectral_bound_report(const Quiver& quiver, int cy_n, const TwistWord& word,
                                    const StabilityCondition& sigma, int n_max, double tolerance) {
    require_cy_dimension(cy_n);
    EntropyReport report;

    const SpectralRadius rho = spectral_radius(twist_k_matrix(quiver, cy_n, word));
    report.lower_log_rho = std::log(rho.value);
    report.spectral_exact = rho.exact;

    GrowthSeries upper;
    upper.label = "upper profile, t=0";
    const std::vector<double> values = upper_profile_series(quiver, cy_n, word, 0.0, n_max);
    for (int n = 0; n < static_cast<int>(values.size()); ++n) upper.samples.emplace_back(n, values[n]);
    report.upper_estimate = estimate_growth_rate(upper);
    report.upper_bound = report.upper_estimate.slope;

    if (word.single_twist()) {
        report.exact = entropy_twist_power(quiver, cy_n, 0.0);
        GrowthSeries ms = twist_mass_series(sigma, cy_n, word.gens[0].vertex, 0.0, n_max);
        report.mass_growth = estimate_growth_rate(ms);
    } else if (word.pure_shift() || word.empty()) {
        report.exact = 0.0;  // shifts scale masses by e^{nmt}, invisible at t = 0
    }

    if (report.lower_log_rho > report.upper_bound + tolerance)
        throw std::logic_error("spectral_bound_report: spectral lower bound exceeds the upper estimate");
    if (report.exact &&
        (report.lower_log_rho > *report.exact + tolerance ||
         *report.exact > report.upper_bound + tolerance))
        throw std::logic_error("spectral_bound_report: closed form escapes the two-sided bounds");
    return report;
}

namespace {

DeltaBounds delta_bounds_impl(const StabilityCondition& sigma, double mass_e, double sigma0_mass,
                              double t) {
    const DimVector ones(sigma.quiver().vertex_count(), 1);
    DeltaBounds db;
    db.lower = mass_e / mass_semisimple(sigma, ones, t);
    db.upper = std::exp(-0.5 * t) * sigma0_mass;
    return db;
}

}  // namespace

DeltaBounds delta_bounds(const StabilityCondition& sigma, const Representation& rep, double t,
                         int cap) {
    if (rep.is_zero()) throw std::invalid_argument("delta_bounds: zero object");
    const StabilityCondition s0 = StabilityCondition::sigma0(sigma.quiver());
    return delta_bounds_impl(sigma, mass(sigma, rep, t, cap), mass(s0, rep, t, cap), t);
}

DeltaBounds delta_bounds(const StabilityCondition& sigma, const CohomologyProfile& profile, double t,
                         int cap) {
    if (profile.entries.empty()) throw std::invalid_argument("delta_bounds: zero object");
    const StabilityCondition s0 = StabilityCondition::sigma0(sigma.quiver());
    return delta_bounds_impl(sigma, mass_of_complex(sigma, profile, t, cap),
                             mass_of_complex(s0, profile, t, cap), t);
}

DeformationCheck deformation_invariance_check(int cy_n, int i, double t,
                                              const std::vector<StabilityCondition>& charges,
                                              int n_max, double tolerance) {
    if (charges.empty()) throw std::invalid_argument("deformation_invariance_check: no charges");
    for (const auto& sigma : charges)
        if (sigma.quiver() != charges.front().quiver())
            throw std::invalid_argument("deformation_invariance_check: charges on different quivers");

    DeformationCheck out;
    out.tolerance = tolerance;
    for (const auto& sigma : charges) {
        const GrowthSeries series = twist_mass_series(sigma, cy_n, i, t, n_max);
        out.slopes.push_back(estimate_growth_rate(series).slope);
    }
    for (std::size_t a = 0; a < out.slopes.size(); ++a)
        for (std::size_t b = a + 1; b < out.slopes.size(); ++b)
            out.max_gap = std::max(out.max_gap, std::fabs(out.slopes[a] - out.slopes[b]));
    out.pass = out.max_gap < tolerance;
    return out;
}

}  // namespace mg
