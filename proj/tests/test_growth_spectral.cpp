#include <cmath>
#include <doctest.h>

#include "mg/growth.hpp"
#include "mg/spectral.hpp"

using namespace mg;

namespace {
GaussianRational gr(std::int64_t re, std::int64_t im) { return {Rational(re), Rational(im)}; }
}  // namespace

TEST_CASE("growth rate estimation") {
    SUBCASE("pure exponential is recovered exactly") {
        GrowthSeries s;
        for (int n = 0; n < 64; ++n) s.samples.emplace_back(n, std::exp(0.5 * n));
        const GrowthEstimate est = estimate_growth_rate(s);
        CHECK(est.slope_regression == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(est.slope_increment == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(est.method_gap < 1e-9);
        CHECK(est.residual_variance < 1e-18);
    }
    SUBCASE("subexponential series estimate near zero") {
        GrowthSeries s;
        for (int n = 0; n <= 200; ++n) s.samples.emplace_back(n, n + 2.0);
        const GrowthEstimate est = estimate_growth_rate(s);
        CHECK(std::fabs(est.slope) < 0.03);
        CHECK(est.tail_begin == 100);
        CHECK(est.tail_end == 200);
    }
    SUBCASE("input validation") {
        GrowthSeries s;
        for (int n = 0; n < 7; ++n) s.samples.emplace_back(n, 1.0);
        CHECK_THROWS_AS(estimate_growth_rate(s), std::invalid_argument);
        s.samples.emplace_back(7, -1.0);
        CHECK_THROWS_AS(estimate_growth_rate(s), std::invalid_argument);
    }
}

TEST_CASE("twist mass series") {
    const Quiver a2 = quiver_a2();
    const StabilityCondition s0 = StabilityCondition::sigma0(a2);

    SUBCASE("sigma_0 at t = 0 counts dimensions: n + 2") {
        const GrowthSeries s = twist_mass_series(s0, 3, 0, 0.0, 20);
        REQUIRE(s.samples.size() == 21);
        for (int n = 0; n <= 20; ++n)
            CHECK(s.samples[n].second == doctest::Approx(n + 2.0).epsilon(1e-12));
    }
    SUBCASE("generic charge, first step") {
        const StabilityCondition sigma(a2, {gr(0, 1), gr(-1, 1)});
        const GrowthSeries s = twist_mass_series(sigma, 3, 0, 0.0, 8);
        CHECK(s.samples[0].second == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
        CHECK(s.samples[1].second == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-12));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(twist_mass_series(s0, 3, 5, 0.0, 20), std::invalid_argument);
        CHECK_THROWS_AS(twist_mass_series(s0, 3, 0, 0.0, 4), std::invalid_argument);
    }
}

TEST_CASE("closed-form twist entropy") {
    const Quiver a2 = quiver_a2();
    CHECK(entropy_twist_power(a2, 3, -1.0) == doctest::Approx(2.0));
    CHECK(entropy_twist_power(a2, 3, 0.0) == 0.0);
    CHECK(entropy_twist_power(a2, 5, 2.0) == 0.0);
    CHECK(entropy_twist_power(a2, 4, -0.5) == doctest::Approx(1.5));

    CHECK_THROWS_AS(entropy_twist_power(Quiver::validate({{0}}), 3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(entropy_twist_power(Quiver::validate({{0, 0}, {0, 0}}), 3, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(entropy_twist_power(a2, 2, 1.0), std::invalid_argument);
}

TEST_CASE("exact characteristic polynomials") {
    CHECK(char_poly(int_identity(2)) == std::vector<std::int64_t>{1, -2, 1});
    CHECK(char_poly(IntMatrix{{-8, 3}, {-3, 1}}) == std::vector<std::int64_t>{1, 7, 1});
    CHECK(char_poly(IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}) ==
          std::vector<std::int64_t>{-1, 0, 0, 1});

    IntMatrix big(9, std::vector<std::int64_t>(9, 0));
    CHECK_THROWS_AS(char_poly(big), std::invalid_argument);
}

TEST_CASE("spectral radius") {
    SUBCASE("unipotent and identity matrices are exactly 1") {
        CHECK(spectral_radius(int_identity(3)).value == 1.0);
        CHECK(spectral_radius(IntMatrix{{1, 1}, {0, 1}}).value == 1.0);
        CHECK(spectral_radius(IntMatrix{{-1, 0}, {0, -1}}).value == 1.0);
        CHECK(spectral_radius(int_identity(3)).exact);
    }
    SUBCASE("Kronecker word radius against the quadratic formula") {
        const IntMatrix m = twist_k_matrix(quiver_kronecker(3), 3, parse_word("T1 T2", 2));
        REQUIRE(m == IntMatrix{{-8, 3}, {-3, 1}});
        const double expected = (7.0 + std::sqrt(45.0)) / 2.0;
        const SpectralRadius sr = spectral_radius(m);
        CHECK(sr.exact);
        CHECK(std::fabs(sr.value - expected) <= 1e-10);
        CHECK(std::log(sr.value) == doctest::Approx(1.924847).epsilon(1e-6));
    }
    SUBCASE("zero and nilpotent matrices") {
        CHECK(spectral_radius(IntMatrix{{0, 1}, {0, 0}}).value == 0.0);
    }
    SUBCASE("large matrices fall back to the absolute-value power iteration") {
        IntMatrix big(9, std::vector<std::int64_t>(9, 0));
        for (int i = 0; i < 9; ++i) big[i][i] = (i == 0) ? -3 : 1;
        const SpectralRadius sr = spectral_radius(big);
        CHECK_FALSE(sr.exact);
        CHECK(sr.method == "power_iteration_abs");
        CHECK(sr.value == doctest::Approx(3.0).epsilon(1e-9));
    }
}

TEST_CASE("entropy reports for twist words") {
    const Quiver a2 = quiver_a2();
    const StabilityCondition s0 = StabilityCondition::sigma0(a2);

    SUBCASE("single twist: transvection below, flat growth overall") {
        const EntropyReport r = spectral_bound_report(a2, 3, parse_word("T1", 2), s0, 120);
        CHECK(r.lower_log_rho == 0.0);  // rho = 1 exactly
        REQUIRE(r.exact.has_value());
        CHECK(*r.exact == 0.0);
        CHECK(r.upper_bound >= 0.0);
        CHECK(r.mass_growth.has_value());
        CHECK(std::fabs(r.mass_growth->slope) < 0.05);
    }
    SUBCASE("Kronecker word: strict spectral gap below the upper bound") {
        const Quiver k3 = quiver_kronecker(3);
        const StabilityCondition k0 = StabilityCondition::sigma0(k3);
        const EntropyReport r = spectral_bound_report(k3, 3, parse_word("T1 T2", 2), k0, 120);
        CHECK(r.lower_log_rho == doctest::Approx(1.924847).epsilon(1e-6));
        CHECK_FALSE(r.exact.has_value());
        CHECK(r.lower_log_rho <= r.upper_bound + 0.05);
    }
    SUBCASE("pure shifts have entropy 0 at t = 0") {
        const EntropyReport r = spectral_bound_report(a2, 3, parse_word("S[1]", 2), s0, 60);
        CHECK(r.lower_log_rho == 0.0);  // rho(-I) = 1
        REQUIRE(r.exact.has_value());
        CHECK(*r.exact == 0.0);
    }
}

TEST_CASE("two-sided complexity bounds") {
    const Quiver a2 = quiver_a2();
    const StabilityCondition s0 = StabilityCondition::sigma0(a2);
    const Representation m = universal_extension(a2, 2, 0, 1);

    SUBCASE("the A2 indecomposable under sigma_0") {
        const DeltaBounds db = delta_bounds(s0, m, 0.0);
        CHECK(db.lower == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(db.upper == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("the generator itself") {
        const DeltaBounds db = delta_bounds(s0, semisimple_rep(a2, 2, {1, 1}), 0.0);
        CHECK(db.lower == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(db.upper == doctest::Approx(2.0).epsilon(1e-12));  // dim G = n = 2
    }
    SUBCASE("a single simple") {
        const DeltaBounds db = delta_bounds(s0, simple_rep(a2, 2, 0), 0.0);
        CHECK(db.lower == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(db.upper == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("profiles and errors") {
        CohomologyProfile shifted;
        shifted.entries.push_back(ProfileEntry{2, std::nullopt, {1, 0}});
        const DeltaBounds db = delta_bounds(s0, shifted, 1.0);
        CHECK(db.lower <= db.upper + 1e-12);
        CHECK_THROWS_AS(delta_bounds(s0, zero_rep(a2, 2), 0.0), std::invalid_argument);
    }
}

TEST_CASE("deformation invariance of the growth slope") {
    const Quiver a2 = quiver_a2();
    const std::vector<StabilityCondition> charges{
        StabilityCondition::sigma0(a2),
        StabilityCondition(a2, {gr(0, 1), gr(-1, 1)}),
        StabilityCondition(a2, {gr(0, 2), gr(-3, 1)}),
    };
    SUBCASE("slopes agree at t = -1 where the entropy is 2") {
        const DeformationCheck dc = deformation_invariance_check(3, 0, -1.0, charges, 200);
        CHECK(dc.pass);
        CHECK(dc.max_gap < 0.02);
        for (double s : dc.slopes) CHECK(s == doctest::Approx(2.0).epsilon(0.05));
    }
    SUBCASE("slopes agree at t = 0") {
        const DeformationCheck dc = deformation_invariance_check(3, 0, 0.0, charges, 200);
        CHECK(dc.pass);
    }
    SUBCASE("a single charge is vacuously invariant") {
        const DeformationCheck dc =
            deformation_invariance_check(3, 0, 1.0, {charges.front()}, 100);
        CHECK(dc.pass);
        CHECK(dc.max_gap == 0.0);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(deformation_invariance_check(3, 0, 0.0, {}, 100), std::invalid_argument);
    }
}
