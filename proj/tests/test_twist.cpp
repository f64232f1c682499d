#include <doctest.h>

#include "mg/rng.hpp"
#include "mg/twist.hpp"

using namespace mg;

TEST_CASE("word grammar") {
    const TwistWord w = parse_word("T1 T2' S[-3] T1", 2);
    REQUIRE(w.gens.size() == 4);
    CHECK(w.gens[0].kind == GenKind::Twist);
    CHECK(w.gens[0].vertex == 0);
    CHECK(w.gens[1].kind == GenKind::InverseTwist);
    CHECK(w.gens[1].vertex == 1);
    CHECK(w.gens[2].kind == GenKind::Shift);
    CHECK(w.gens[2].shift == -3);
    CHECK(w.gens[3].kind == GenKind::Twist);
    CHECK(word_to_string(w) == "T1 T2' S[-3] T1");

    CHECK(parse_word("", 2).empty());
    CHECK(parse_word("S[2]", 2).gens[0].shift == 2);
    CHECK(parse_word("T1", 3).single_twist());
    CHECK_FALSE(parse_word("T1'", 3).single_twist());
    CHECK(parse_word("S[1] S[-4]", 2).pure_shift());
    CHECK(parse_word("S[1] S[-4]", 2).total_shift() == -3);

    CHECK_THROWS_AS(parse_word("T0", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("T3", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("X1", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("T", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("S[3", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("S[]", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("T1x", 2), std::invalid_argument);
}

TEST_CASE("K-theory matrices of twist words") {
    const Quiver a2 = quiver_a2();
    CHECK(twist_k_matrix(a2, 3, parse_word("T1", 2)) == IntMatrix{{1, 1}, {0, 1}});
    CHECK(twist_k_matrix(a2, 3, parse_word("", 2)) == int_identity(2));
    CHECK(twist_k_matrix(a2, 3, parse_word("S[1]", 2)) == IntMatrix{{-1, 0}, {0, -1}});
    CHECK(twist_k_matrix(a2, 3, parse_word("S[-3]", 2)) == IntMatrix{{-1, 0}, {0, -1}});
    CHECK(twist_k_matrix(a2, 3, parse_word("S[2]", 2)) == int_identity(2));

    const Quiver k3 = quiver_kronecker(3);
    CHECK(twist_k_matrix(k3, 3, parse_word("T1 T2", 2)) == IntMatrix{{-8, 3}, {-3, 1}});

    for (int n : {3, 4}) {
        for (int v = 1; v <= 2; ++v) {
            const std::string t = "T" + std::to_string(v);
            CHECK(twist_k_matrix(k3, n, parse_word(t + " " + t + "'", 2)) == int_identity(2));
            CHECK(twist_k_matrix(k3, n, parse_word(t + "' " + t, 2)) == int_identity(2));
        }
    }
}

TEST_CASE("cohomology profiles of twist powers") {
    const Quiver a2 = quiver_a2();

    SUBCASE("source-to-sink twists accumulate the spherical simple") {
        // Phi_1^3 S_2: extension in degree 0 plus S_1 copies in degrees 2 and 4
        const TwistPowerProfile p = twist_power_profile(a2, 3, 0, 3, 1);
        CHECK(p.poincare ==
              LaurentPoly::constant(2) + LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(1, 4));
        CHECK(p.poincare.evaluate(0.0) == doctest::Approx(4.0));
        REQUIRE(!p.profile.entries.empty());
        CHECK(p.profile.entries[0].degree == 0);
        CHECK(p.profile.entries[0].module.has_value());
        CHECK(p.profile.entries[0].module->dims == DimVector{1, 1});
    }

    SUBCASE("a twist acts on its own simple as a pure shift") {
        for (int k : {0, 1, 5, 9}) {
            const TwistPowerProfile p = twist_power_profile(a2, 3, 0, k, 0);
            CHECK(p.poincare == LaurentPoly::monomial(1, 2 * k));
            CHECK(p.poincare.evaluate(0.0) == doctest::Approx(1.0));
        }
    }

    SUBCASE("sink-to-source twists shift into degree N-2") {
        // Phi_2^3 S_1: 1 + u (1 + u^2 + u^4)
        const TwistPowerProfile p = twist_power_profile(a2, 3, 1, 3, 0);
        CHECK(p.poincare == LaurentPoly::constant(1) + LaurentPoly::monomial(1, 1) +
                                LaurentPoly::monomial(1, 3) + LaurentPoly::monomial(1, 5));
    }

    SUBCASE("unrelated vertices leave the simple alone") {
        const Quiver disc = Quiver::validate({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
        const TwistPowerProfile p = twist_power_profile(disc, 3, 2, 4, 0);
        CHECK(p.poincare == LaurentPoly::constant(1));
    }

    SUBCASE("base case and errors") {
        const TwistPowerProfile p = twist_power_profile(a2, 3, 0, 0, 1);
        CHECK(p.poincare == LaurentPoly::constant(1));
        CHECK_THROWS_AS(twist_power_profile(a2, 3, 0, -1, 1), std::invalid_argument);
        CHECK_THROWS_AS(twist_power_profile(a2, 3, 0, 1, 5), std::invalid_argument);
        CHECK_THROWS_AS(twist_power_profile(a2, 2, 0, 1, 1), std::invalid_argument);
    }
}

TEST_CASE("recursion rebuilds the closed forms") {
    for (const Quiver& q : {quiver_a2(), quiver_kronecker(3)})
        for (int n : {3, 4})
            for (int i = 0; i < q.vertex_count(); ++i)
                for (int j = 0; j < q.vertex_count(); ++j)
                    for (int k : {0, 1, 2, 7, 25, 50}) CHECK(poincare_recursion_check(q, n, i, k, j));
}

TEST_CASE("word upper profiles") {
    const Quiver a2 = quiver_a2();
    const Quiver k3 = quiver_kronecker(3);

    SUBCASE("a single twist reproduces the exact one-step profile") {
        for (const Quiver& q : {a2, k3}) {
            for (int n : {3, 4}) {
                for (int i = 0; i < q.vertex_count(); ++i) {
                    TwistWord word{{TwistGen{GenKind::Twist, i, 0}}};
                    for (int j = 0; j < q.vertex_count(); ++j) {
                        const GradedClass cls =
                            word_upper_profile(q, n, word, GradedClass::simple(q, j));
                        const TwistPowerProfile exact = twist_power_profile(q, n, i, 1, j);
                        for (int v = 0; v < q.vertex_count(); ++v)
                            CHECK(cls.entries[v] == exact.graded.entries[v]);
                    }
                }
            }
        }
    }

    SUBCASE("empty word is the identity") {
        const GradedClass g = GradedClass::generator(a2);
        const GradedClass out = word_upper_profile(a2, 3, parse_word("", 2), g);
        for (int v = 0; v < 2; ++v) CHECK(out.entries[v] == g.entries[v]);
    }

    SUBCASE("K-theory class survives the bound") {
        const TwistWord word = parse_word("T1 T2' S[-1] T1", 2);
        const IntMatrix m = twist_k_matrix(k3, 3, word);
        for (int j = 0; j < 2; ++j) {
            const GradedClass cls = word_upper_profile(k3, 3, word, GradedClass::simple(k3, j));
            CHECK(cls.k_class() == std::vector<std::int64_t>{m[0][j], m[1][j]});
        }
    }

    SUBCASE("bound dominates the closed form on twist powers") {
        for (int k = 1; k <= 12; ++k) {
            TwistWord word;
            for (int s = 0; s < k; ++s) word.gens.push_back(TwistGen{GenKind::Twist, 0, 0});
            const GradedClass cls = word_upper_profile(k3, 3, word, GradedClass::simple(k3, 1));
            const LaurentPoly exact = twist_power_profile(k3, 3, 0, k, 1).poincare;
            for (double t : {-1.0, 0.0, 1.0})
                CHECK(cls.poincare().evaluate(t) >= exact.evaluate(t) - 1e-9);
        }
    }

    SUBCASE("negative coefficients are rejected") {
        GradedClass bad;
        bad.entries.assign(2, LaurentPoly::constant(-1));
        CHECK_THROWS_AS(word_upper_profile(a2, 3, parse_word("T1", 2), bad), std::invalid_argument);
    }
}

TEST_CASE("numeric orbit series match the exact classes") {
    const Quiver k3 = quiver_kronecker(3);
    const TwistWord word = parse_word("T1 T2", 2);
    const auto series = upper_profile_series(k3, 3, word, 0.0, 6);
    REQUIRE(series.size() == 7);

    GradedClass cls = GradedClass::generator(k3);
    for (int n = 0; n <= 6; ++n) {
        CHECK(series[n] ==
              doctest::Approx(cls.poincare().evaluate(0.0)).epsilon(1e-12));
        cls = word_upper_profile(k3, 3, word, cls);
    }

    // shifts scale the series by e^{mt}
    const auto shifted = upper_profile_series(k3, 3, parse_word("S[2]", 2), -1.0, 4);
    for (int n = 0; n <= 4; ++n)
        CHECK(shifted[n] == doctest::Approx(2.0 * std::exp(-2.0 * n)).epsilon(1e-12));
}
