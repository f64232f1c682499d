#include <cmath>
#include <complex>
#include <doctest.h>

#include "mg/charge_geometry.hpp"
#include "mg/rng.hpp"

using namespace mg;

namespace {
GaussianRational gr(std::int64_t re, std::int64_t im) { return {Rational(re), Rational(im)}; }
const double kPi = 3.14159265358979323846;
}  // namespace

TEST_CASE("phase on the semi-closed upper half-plane") {
    CHECK(phase(std::complex<double>(0, 1)) == 0.5);
    CHECK(phase(std::complex<double>(-1, 0)) == 1.0);

    // independent arithmetic oracle for a generic point
    const double oracle = std::atan2(2.0, -1.0) / kPi;
    CHECK(phase(std::complex<double>(-1, 2)) == doctest::Approx(oracle).epsilon(1e-15));
    CHECK(phase(std::complex<double>(-1, 2)) == doctest::Approx(0.647584).epsilon(1e-6));

    CHECK(phase(gr(0, 1)) == 0.5);
    CHECK(phase(gr(-1, 0)) == 1.0);

    CHECK_THROWS_AS(phase(std::complex<double>(0, 0)), std::domain_error);
    CHECK_THROWS_AS(phase(std::complex<double>(1, 0)), std::domain_error);
    CHECK_THROWS_AS(phase(std::complex<double>(1, -1)), std::domain_error);
    CHECK_THROWS_AS(phase(gr(0, 0)), std::domain_error);
}

TEST_CASE("g_t weight") {
    CHECK(g_t(std::complex<double>(0, 3), 0.0) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(g_t(std::complex<double>(0, 1), 2.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    for (double t : {-2.0, 0.5, 3.0})
        CHECK(g_t(std::complex<double>(-1, 0), t) == doctest::Approx(std::exp(t)).epsilon(1e-15));
    CHECK_THROWS_AS(g_t(std::complex<double>(2, 0), 1.0), std::domain_error);
}

TEST_CASE("triangle defect of g_t") {
    // |i| + |-1| - |i - 1| = 2 - sqrt(2)
    CHECK(gt_triangle_defect({0, 1}, {-1, 0}, 0.0) ==
          doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-14));
    // equal phases: the inequality is an equality
    for (double t : {-1.0, 0.0, 2.0})
        CHECK(std::fabs(gt_triangle_defect({0, 1}, {0, 2}, t)) < 1e-14);
    CHECK(gt_triangle_defect({-1, 1}, {1, 1}, 1.0) > 0.0);

    Rng rng(2024);
    double worst = 1e300;
    for (int s = 0; s < 10000; ++s) {
        const std::complex<double> z1(rng.uniform(-3, 3), rng.uniform(1e-6, 3));
        const std::complex<double> z2 =
            rng.below(10) == 0 ? std::complex<double>(rng.uniform(-3, -0.01), 0.0)
                               : std::complex<double>(rng.uniform(-3, 3), rng.uniform(1e-6, 3));
        worst = std::min(worst, gt_triangle_defect(z1, z2, rng.uniform(-3, 3)));
    }
    CHECK(worst >= -1e-12);
}

TEST_CASE("slope defect function") {
    CHECK(slope_defect_function(0.5, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(slope_defect_function(-0.5, 0.0) == doctest::Approx(-1.0).epsilon(1e-15));
    // limit at zero is t/pi; at t = pi that limit is 1
    CHECK(slope_defect_function(1e-8, kPi) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS(slope_defect_function(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(slope_defect_function(1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(slope_defect_function(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(slope_defect_function(1.5, 1.0), std::domain_error);
}

TEST_CASE("left hull of charge sets") {
    SUBCASE("three point example") {
        const std::vector<GaussianRational> pts{gr(0, 0), gr(-1, 1), gr(-1, 2)};
        const HNPolygon poly = left_hull(pts, gr(-1, 2));
        REQUIRE(poly.points.size() == 3);
        CHECK(poly.points[0] == gr(0, 0));
        CHECK(poly.points[1] == gr(-1, 1));
        CHECK(poly.points[2] == gr(-1, 2));
    }
    SUBCASE("two point degenerate polygon") {
        const HNPolygon poly = left_hull({gr(0, 0), gr(1, 2)}, gr(1, 2));
        REQUIRE(poly.points.size() == 2);
        CHECK(poly.points[1] == gr(1, 2));
    }
    SUBCASE("collinear points collapse to one edge") {
        const HNPolygon poly = left_hull({gr(0, 0), gr(0, 1), gr(0, 2), gr(0, 3)}, gr(0, 3));
        REQUIRE(poly.points.size() == 2);
        CHECK(poly.points[1] == gr(0, 3));
    }
    SUBCASE("points on the right of the line do not contribute") {
        const std::vector<GaussianRational> pts{gr(0, 0), gr(-1, 1), gr(-1, 2), gr(1, 1)};
        const HNPolygon poly = left_hull(pts, gr(-1, 2));
        REQUIRE(poly.points.size() == 3);
        CHECK(poly.points[1] == gr(-1, 1));
        // every input point on or right of every edge
        for (std::size_t e = 0; e < poly.edge_count(); ++e)
            for (const auto& p : pts) CHECK(cross(poly.edge(e), p - poly.points[e]).sign() <= 0);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(left_hull({}, gr(0, 0)), std::invalid_argument);
        CHECK_THROWS_AS(left_hull({gr(0, 0), gr(0, 1)}, gr(0, 2)), std::invalid_argument);
        CHECK_THROWS_AS(left_hull({gr(0, 1), gr(0, 2)}, gr(0, 2)), std::invalid_argument);
        CHECK_THROWS_AS(left_hull({gr(0, 0), gr(1, 0), gr(0, 1)}, gr(0, 1)), std::domain_error);
    }
}

TEST_CASE("polygon containment is monotone under charge subsets") {
    const std::vector<GaussianRational> big{gr(0, 0), gr(-2, 1), gr(-2, 3), gr(-1, 1), gr(0, 2)};
    const HNPolygon outer = left_hull(big, gr(0, 2));
    const HNPolygon inner = left_hull({gr(0, 0), gr(-1, 1), gr(0, 2)}, gr(0, 2));
    for (const auto& v : inner.points) CHECK(polygon_contains(outer, v));
    CHECK_FALSE(polygon_contains(outer, gr(-5, 1)));
}

TEST_CASE("mass from HN factor data") {
    // the A2 indecomposable under z = (i, -1+i): factors S2, S1
    const std::vector<MassFactor> factors{{{-1.0, 1.0}, 0.75}, {{0.0, 1.0}, 0.5}};
    CHECK(mass_from_factors(factors, 0.0) ==
          doctest::Approx(std::sqrt(2.0) + 1.0).epsilon(1e-14));
    CHECK(mass_from_factors({}, 1.7) == 0.0);
    CHECK(mass_from_factors({{{0.0, 1.0}, 0.5}}, 2.0) == doctest::Approx(std::exp(1.0)));
    CHECK_THROWS_AS(mass_from_factors({{{0.0, 1.0}, 0.5}, {{0.0, 2.0}, 0.5}}, 0.0),
                    std::invalid_argument);

    // a single factor equals g_t of the normalized charge, scaled by the shift
    const std::complex<double> z(-1.0, 1.0);
    for (int m : {-2, 0, 3})
        CHECK(mass_from_factors({{z, phase(z) + m}}, 1.3) ==
              doctest::Approx(g_t(z, 1.3) * std::exp(m * 1.3)).epsilon(1e-12));
}

TEST_CASE("polygon svg rendering") {
    const HNPolygon poly = left_hull({gr(0, 0), gr(-1, 1), gr(-1, 2)}, gr(-1, 2));
    const std::string svg = polygon_svg(poly, {gr(0, 0), gr(-1, 1), gr(-1, 2)});
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<path d=\"M") != std::string::npos);
    CHECK(svg.find("circle") != std::string::npos);
    CHECK(svg == polygon_svg(poly, {gr(0, 0), gr(-1, 1), gr(-1, 2)}));
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

    CHECK(phase_less(gr(1, 1), gr(0, 1)));   // pi/4 < pi/2
    CHECK(phase_less(gr(0, 1), gr(-1, 0)));  // pi/2 < pi
    CHECK(phase_equal(gr(1, 1), gr(2, 2)));
    CHECK(gr(-1, 0).in_upper_half());
    CHECK_FALSE(gr(1, 0).in_upper_half());
    CHECK_FALSE(gr(0, 0).in_upper_half());
}
