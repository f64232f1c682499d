// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances are pinned here, next to the assertions they gate.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mg/checks.hpp"
#include "mg/growth.hpp"
#include "mg/rng.hpp"
#include "mg/spectral.hpp"
#include "mg/twist.hpp"

using namespace mg;

namespace {

GaussianRational gr(std::int64_t re, std::int64_t im) { return {Rational(re), Rational(im)}; }

struct Criterion {
    std::string name;
    std::function<std::string()> body;  // returns detail text; throws on failure
};

struct Failure {
    std::string detail;
};

void expect(bool cond, const std::string& detail) {
    if (!cond) throw Failure{detail};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------

std::string criterion_twist_entropy() {
    const auto start = std::chrono::steady_clock::now();
    const Quiver a2 = quiver_a2();
    const std::vector<StabilityCondition> charges{
        StabilityCondition::sigma0(a2), StabilityCondition(a2, {gr(0, 1), gr(-1, 1)})};
    const double targets[3] = {2.0, 0.0, 0.0};
    const double ts[3] = {-1.0, 0.0, 1.0};
    double worst = 0.0;
    for (const auto& sigma : charges) {
        for (int k = 0; k < 3; ++k) {
            const double slope =
                estimate_growth_rate(twist_mass_series(sigma, 3, 0, ts[k], 200)).slope;
            const double err = std::fabs(slope - targets[k]);
            worst = std::max(worst, err);
            expect(err <= 0.05, "slope " + std::to_string(slope) + " at t=" + std::to_string(ts[k]) +
                                    " misses " + std::to_string(targets[k]));
        }
    }
    const double elapsed = seconds_since(start);
    expect(elapsed < 5.0, "runtime " + std::to_string(elapsed) + "s exceeds 5s");
    char buf[128];
    std::snprintf(buf, sizeof buf, "slopes within %.4f of {2,0,0}; %.2fs", worst, elapsed);
    return buf;
}

std::string criterion_closed_form() {
    long long cases = 0;
    for (const Quiver& q : {quiver_a2(), quiver_a3(), quiver_kronecker(3)}) {
        for (int n : {3, 4}) {
            for (int i = 0; i < q.vertex_count(); ++i)
                for (int j = 0; j < q.vertex_count(); ++j)
                    for (int k = 0; k <= 50; ++k) {
                        expect(poincare_recursion_check(q, n, i, k, j),
                               "recursion mismatch at N=" + std::to_string(n) + " i=" +
                                   std::to_string(i) + " j=" + std::to_string(j) +
                                   " k=" + std::to_string(k));
                        ++cases;
                    }
        }
    }
    return std::to_string(cases) + " exact Laurent identities";
}

std::string criterion_polygon_oracle() {
    const auto start = std::chrono::steady_clock::now();
    const Corpus corpus = build_corpus(42);
    expect(corpus.reps.size() >= 200, "corpus too small");
    long long pairs = 0;
    for (const auto& rep : corpus.reps) {
        const auto& charges = corpus.charges_for(rep);
        expect(charges.size() >= 5, "fewer than 5 charges");
        for (const auto& sigma : charges) {
            expect(hn_polygon_oracle(sigma, rep).agreement,
                   "hull/filtration disagreement on a corpus pair");
            ++pairs;
        }
    }
    const double elapsed = seconds_since(start);
    expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + "s exceeds 60s");
    char buf[128];
    std::snprintf(buf, sizeof buf, "%lld rep/charge pairs, 100%% agreement; %.2fs", pairs, elapsed);
    return buf;
}

std::string criterion_mass_triangle() {
    const Corpus corpus = build_corpus(42);
    const double ts[3] = {-1.0, 0.0, 1.0};
    long long ses_count = 0, refined = 0;
    for (const auto& rep : corpus.reps) {
        if (rep.dim() < 2) continue;
        const auto seqs = short_exact_sequences(rep);
        ses_count += static_cast<long long>(seqs.size());
        for (const auto& sigma : corpus.charges_for(rep)) {
            for (const auto& ses : seqs) {
                for (double t : ts) {
                    const double lhs = mass(sigma, rep, t);
                    const double rhs = mass(sigma, ses.sub_rep, t) + mass(sigma, ses.quotient_rep, t);
                    expect(lhs <= rhs + 1e-9, "triangle violation " + std::to_string(lhs - rhs));
                }
            }
        }
    }
    expect(ses_count >= 1000, "only " + std::to_string(ses_count) + " sequences");

    // refined inequality with phase-one quotients
    const StabilityCondition a2_p1(quiver_a2(), {gr(-1, 0), gr(0, 1)});
    const StabilityCondition a3_p1(quiver_a3(), {gr(-1, 0), gr(-1, 0), gr(0, 1)});
    for (const auto& rep : corpus.reps) {
        if (rep.dim() < 2) continue;
        const StabilityCondition& sigma = rep.quiver.vertex_count() == 2 ? a2_p1 : a3_p1;
        for (const auto& ses : short_exact_sequences(rep)) {
            if (ses.quotient_rep.dims[rep.quiver.vertex_count() - 1] != 0) continue;
            expect(is_semistable(sigma, ses.quotient_rep), "engineered quotient not semistable");
            for (double t : ts) {
                const double lhs = mass(sigma, ses.sub_rep, t);
                const double rhs =
                    mass(sigma, rep, t) + std::exp(-t) * mass(sigma, ses.quotient_rep, t);
                expect(lhs <= rhs + 1e-9, "refined violation " + std::to_string(lhs - rhs));
            }
            ++refined;
        }
    }
    expect(refined >= 50, "only " + std::to_string(refined) + " refined cases");
    return std::to_string(ses_count) + " sequences, " + std::to_string(refined) +
           " phase-one refinements, zero violations";
}

std::string criterion_spectral_bound() {
    const Quiver k3 = quiver_kronecker(3);
    const StabilityCondition s0 = StabilityCondition::sigma0(k3);

    const TwistWord word = parse_word("T1 T2", 2);
    const IntMatrix m = twist_k_matrix(k3, 3, word);
    const auto coeffs = char_poly(m);
    expect(coeffs == std::vector<std::int64_t>{1, 7, 1}, "characteristic polynomial mismatch");

    const SpectralRadius rho = spectral_radius(m);
    const double expected = (7.0 + std::sqrt(45.0)) / 2.0;  // quadratic-formula oracle
    expect(std::fabs(rho.value - expected) <= 1e-10,
           "rho " + std::to_string(rho.value) + " vs " + std::to_string(expected));

    const EntropyReport report = spectral_bound_report(k3, 3, word, s0, 150);
    expect(report.lower_log_rho <= report.upper_bound + 0.05, "lower bound exceeds upper estimate");

    const EntropyReport single = spectral_bound_report(k3, 3, parse_word("T1", 2), s0, 150);
    expect(std::fabs(single.lower_log_rho) <= 1e-9, "log rho of a transvection is not 0");
    expect(single.exact.has_value() && std::fabs(*single.exact - single.lower_log_rho) <= 1e-9,
           "closed form disagrees with log rho for a single twist");

    char buf[160];
    std::snprintf(buf, sizeof buf, "log rho = %.6f <= upper %.6f; single twist exact 0",
                  report.lower_log_rho, report.upper_bound);
    return buf;
}

std::string criterion_gt_properties() {
    Rng rng(977);
    double worst = 1e300;
    for (int s = 0; s < 100000; ++s) {
        auto draw = [&]() -> std::complex<double> {
            if (rng.below(20) == 0) return {rng.uniform(-3.0, -0.01), 0.0};
            return {rng.uniform(-3.0, 3.0), rng.uniform(1e-6, 3.0)};
        };
        const double defect = gt_triangle_defect(draw(), draw(), rng.uniform(-3.0, 3.0));
        worst = std::min(worst, defect);
        expect(defect >= -1e-12, "triangle defect " + std::to_string(defect));
    }

    const double pi = 3.14159265358979323846;
    for (double t : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        for (int side = 0; side < 2; ++side) {
            double prev = 0.0;
            for (int k = 0; k < 1000; ++k) {
                const double x = (side == 0 ? -1.0 : 0.0) + (k + 1) / 1001.0;
                const double v = slope_defect_function(x, t);
                if (k > 0) expect(v > prev, "monotonicity failure at x=" + std::to_string(x));
                prev = v;
            }
        }
        expect(std::fabs(slope_defect_function(1e-6, t) - t / pi) < 1e-4, "limit failure at 0+");
        expect(std::fabs(slope_defect_function(-1e-6, t) - t / pi) < 1e-4, "limit failure at 0-");
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "100000 samples, min defect %.3e; monotone grids pass", worst);
    return buf;
}

std::string criterion_sigma0_closed_form() {
    const Corpus corpus = build_corpus(42);
    double worst = 0.0;
    long long used = 0;
    for (const auto& rep : corpus.reps) {
        if (used >= 100) break;
        ++used;
        const StabilityCondition s0 = StabilityCondition::sigma0(rep.quiver);
        for (double t : {-1.0, 0.0, 1.0}) {
            const double expected = static_cast<double>(rep.dim()) * std::exp(0.5 * t);
            const double rel = std::fabs(mass(s0, rep, t) - expected) / expected;
            worst = std::max(worst, rel);
            expect(rel <= 1e-12, "sigma_0 relative error " + std::to_string(rel));

            for (const auto& sigma : corpus.charges_for(rep)) {
                const DeltaBounds db = delta_bounds(sigma, rep, t);
                expect(db.lower <= db.upper + 1e-12,
                       "delta bounds inverted: " + std::to_string(db.lower) + " > " +
                           std::to_string(db.upper));
            }
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%lld reps, max relative error %.2e; bounds ordered", used, worst);
    return buf;
}

std::string criterion_deformation_invariance() {
    const Quiver a2 = quiver_a2();
    const std::vector<StabilityCondition> charges{
        StabilityCondition(a2, {gr(0, 1), gr(-1, 1)}),
        StabilityCondition::sigma0(a2),
        StabilityCondition(a2, {gr(0, 2), gr(-3, 1)}),
        StabilityCondition(a2, {gr(1, 3), gr(1, 1)}),
        StabilityCondition(a2, {gr(-2, 1), gr(-1, 2)}),
    };
    double worst = 0.0;
    for (double t : {-1.0, 0.0, 1.0}) {
        const DeformationCheck dc = deformation_invariance_check(3, 0, t, charges, 200, 0.02);
        worst = std::max(worst, dc.max_gap);
        expect(dc.pass, "slope gap " + std::to_string(dc.max_gap) + " at t=" + std::to_string(t));
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "5 charges, max pairwise gap %.5f < 0.02", worst);
    return buf;
}

std::string criterion_determinism() {
    const SuiteReport a = run_suite("all", 42);
    const SuiteReport b = run_suite("all", 42);
    expect(a.passed, "check-all failed");
    expect(a.to_json() == b.to_json(), "reports differ between runs");
    return "check-all passes and reruns byte-identically (" + std::to_string(a.items.size()) +
           " checks)";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"twist entropy reproduction (A2, N=3, T1, n_max=200)", criterion_twist_entropy},
        {"closed-form Poincare identities (k <= 50, exact)", criterion_closed_form},
        {"HN polygon oracle (200 reps x 5 charges)", criterion_polygon_oracle},
        {"mass triangle inequality (>= 1000 sequences)", criterion_mass_triangle},
        {"spectral radius bounds (3-Kronecker T1 T2)", criterion_spectral_bound},
        {"g_t property suite (1e5 samples)", criterion_gt_properties},
        {"sigma_0 closed form and delta bounds (100 reps)", criterion_sigma0_closed_form},
        {"deformation invariance (5 charges)", criterion_deformation_invariance},
        {"deterministic check-all reports", criterion_determinism},
    };

    int passed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        std::string status = "PASS", detail;
        try {
            detail = criteria[k].body();
            ++passed;
        } catch (const Failure& f) {
            status = "FAIL";
            detail = f.detail;
        } catch (const std::exception& e) {
            status = "FAIL";
            detail = e.what();
        }
        std::printf("[%s] criterion %zu: %s — %s\n", status.c_str(), k + 1, criteria[k].name.c_str(),
                    detail.c_str());
    }
    std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
