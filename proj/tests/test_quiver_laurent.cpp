#include <cmath>
#include <doctest.h>

#include "mg/quiver.hpp"
#include "mg/rng.hpp"

using namespace mg;

TEST_CASE("quiver validation") {
    const Quiver a2 = Quiver::validate({{0, 1}, {0, 0}});
    CHECK(a2.vertex_count() == 2);
    CHECK(a2.topological_order() == std::vector<int>{0, 1});
    CHECK(a2.arrows().size() == 1);

    const Quiver k3 = Quiver::validate({{0, 3}, {0, 0}});
    CHECK(k3.arrows().size() == 3);

    CHECK_THROWS_AS(Quiver::validate({{0, 1}, {1, 0}}), std::invalid_argument);   // 2-cycle
    CHECK_THROWS_AS(Quiver::validate({{1}}), std::invalid_argument);              // loop
    CHECK_THROWS_AS(Quiver::validate({{0, -1}, {0, 0}}), std::invalid_argument);  // negative
    CHECK_THROWS_AS(Quiver::validate({{0, 1}, {0}}), std::invalid_argument);      // ragged

    CHECK(quiver_a3().connected());
    CHECK_FALSE(Quiver::validate({{0, 0}, {0, 0}}).connected());
}

TEST_CASE("CY-N Euler matrix") {
    const Quiver a2 = quiver_a2();
    CHECK(cyn_euler_matrix(a2, 3) ==
          std::vector<std::vector<std::int64_t>>{{0, -1}, {1, 0}});
    CHECK(cyn_euler_matrix(quiver_kronecker(3), 3) ==
          std::vector<std::vector<std::int64_t>>{{0, -3}, {3, 0}});

    // even N: diagonal 2, symmetric; odd N: antisymmetric
    for (const Quiver& q : {quiver_a2(), quiver_a3(), quiver_kronecker(3)}) {
        for (int n : {3, 4, 5, 6}) {
            const auto chi = cyn_euler_matrix(q, n);
            for (int i = 0; i < q.vertex_count(); ++i) {
                CHECK(chi[i][i] == (n % 2 == 0 ? 2 : 0));
                for (int j = 0; j < q.vertex_count(); ++j)
                    CHECK(chi[i][j] == (n % 2 == 0 ? chi[j][i] : -chi[j][i]));
            }
        }
    }
    CHECK_THROWS_AS(cyn_euler_matrix(a2, 2), std::invalid_argument);
}

TEST_CASE("graded hom table") {
    for (const Quiver& q : {quiver_a2(), quiver_a3(), quiver_kronecker(3)}) {
        for (int n : {3, 4, 5}) {
            const GradedHomTable table(q, n);
            for (int i = 0; i < q.vertex_count(); ++i) {
                CHECK(table.hom(i, i, 0) == 1);
                CHECK(table.hom(i, i, n) == 1);
                CHECK(table.hom(i, i, 1) == 0);
                for (int j = 0; j < q.vertex_count(); ++j)
                    for (int m = -1; m <= n + 1; ++m) CHECK(table.hom(i, j, m) == table.hom(j, i, n - m));
            }
            // the Euler matrix is the alternating sum of the table
            const auto chi = cyn_euler_matrix(q, n);
            for (int i = 0; i < q.vertex_count(); ++i)
                for (int j = 0; j < q.vertex_count(); ++j)
                    CHECK(chi[i][j] == table.hom_poly(i, j).evaluate_at_minus_one());
        }
    }
    CHECK_THROWS_AS(GradedHomTable(quiver_a2(), 2), std::invalid_argument);
}

TEST_CASE("laurent polynomial arithmetic") {
    const LaurentPoly u2 = LaurentPoly::monomial(1, 2);
    CHECK(u2.evaluate(0.0) == doctest::Approx(1.0));
    CHECK(u2.evaluate(1.0) == doctest::Approx(std::exp(-2.0)));

    // shift functor: P(M[1]) = u^{-1} P(M)
    const LaurentPoly p = LaurentPoly::constant(2) + LaurentPoly::monomial(3, 1);
    CHECK(p.shift_degree(-1) == LaurentPoly::monomial(2, -1) + LaurentPoly::constant(3));

    const LaurentPoly gs = geometric_sum(u2, 3);
    CHECK(gs == LaurentPoly::constant(1) + LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(1, 4));
    CHECK(gs.evaluate(0.0) == doctest::Approx(3.0));
    CHECK(geometric_sum(u2, 0).is_zero());
    CHECK_THROWS_AS(geometric_sum(gs, 2), std::invalid_argument);

    CHECK((p - p).is_zero());
    CHECK(p.scaled(0).is_zero());
    CHECK(p.str() == "2 + 3u");
    CHECK((-p).coeff(0) == -2);

    // commutative ring sanity on random elements, and evaluation as a ring map
    Rng rng(7);
    auto random_poly = [&] {
        LaurentPoly r;
        for (int k = 0; k < 4; ++k)
            r = r + LaurentPoly::monomial(static_cast<std::int64_t>(rng.below(9)) - 4,
                                          static_cast<int>(rng.below(7)) - 3);
        return r;
    };
    for (int s = 0; s < 50; ++s) {
        const LaurentPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        const double t = rng.uniform(-1.5, 1.5);
        CHECK((a * b).evaluate(t) ==
              doctest::Approx(a.evaluate(t) * b.evaluate(t)).epsilon(1e-9));
        CHECK((a + b).evaluate_at_minus_one() ==
              a.evaluate_at_minus_one() + b.evaluate_at_minus_one());
    }
}

TEST_CASE("hereditary Euler form") {
    const Quiver a2 = quiver_a2();
    CHECK(euler_form_hereditary(a2, {1, 1}, {1, 1}) == 1);
    CHECK(euler_form_hereditary(a2, {4, 7}, {0, 0}) == 0);
    CHECK(euler_form_hereditary(quiver_kronecker(3), {1, 0}, {0, 1}) == -3);
    CHECK_THROWS_AS(euler_form_hereditary(a2, {1}, {1, 1}), std::invalid_argument);
}
