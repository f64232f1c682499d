#include <algorithm>
#include <chrono>
#include <doctest.h>

#include "mg/rep.hpp"

using namespace mg;

namespace {

bool same_subrep(const Subrep& a, const Subrep& b) {
    for (std::size_t v = 0; v < a.basis.size(); ++v)
        if (a.basis[v] != b.basis[v]) return false;
    return true;
}

bool in_list(const std::vector<Subrep>& list, const Subrep& s) {
    return std::any_of(list.begin(), list.end(), [&](const Subrep& x) { return same_subrep(x, s); });
}

}  // namespace

TEST_CASE("subobject enumeration of the A2 indecomposable") {
    const Quiver a2 = quiver_a2();
    const Representation m = universal_extension(a2, 2, 0, 1);
    const auto subs = subrep_enumerate(m);
    REQUIRE(subs.size() == 3);
    CHECK(subs[0].dims() == DimVector{0, 0});
    CHECK(subs[1].dims() == DimVector{0, 1});  // the socle S_2
    CHECK(subs[2].dims() == DimVector{1, 1});
    // S_1 is not a subobject: the extension does not split
    for (const auto& s : subs) CHECK(s.dims() != DimVector{1, 0});
}

TEST_CASE("subobject enumeration of semisimples and simples") {
    const Quiver a2 = quiver_a2();
    CHECK(subrep_enumerate(semisimple_rep(a2, 2, {1, 1})).size() == 4);
    CHECK(subrep_enumerate(simple_rep(a2, 2, 0)).size() == 2);
    CHECK(subrep_enumerate(simple_rep(a2, 2, 1)).size() == 2);
    CHECK_THROWS_AS(subrep_enumerate(semisimple_rep(a2, 2, {5, 4})), std::invalid_argument);
}

TEST_CASE("enumerated subobjects form a lattice") {
    const Quiver a2 = quiver_a2();
    const Representation rep = random_rep(a2, 2, {2, 2}, 99);
    const auto subs = subrep_enumerate(rep);
    for (const auto& s : subs) {
        CHECK(subrep_invariant(rep, s));
        CHECK(s.dim() + quotient(rep, s).rep.dim() == rep.dim());
    }
    for (const auto& a : subs)
        for (const auto& b : subs) {
            CHECK(in_list(subs, subrep_intersection(rep, a, b)));
            CHECK(in_list(subs, subrep_sum(rep, a, b)));
        }
}

TEST_CASE("quotients, restrictions and direct sums") {
    const Quiver a2 = quiver_a2();
    const Representation m = universal_extension(a2, 2, 0, 1);
    const auto subs = subrep_enumerate(m);
    const Subrep& socle = subs[1];

    const QuotientData q = quotient(m, socle);
    CHECK(q.rep.dims == DimVector{1, 0});  // M / S_2 = S_1

    const Representation restricted = restrict_to(m, socle);
    CHECK(restricted.dims == DimVector{0, 1});

    const Representation sum = direct_sum(m, simple_rep(a2, 2, 0));
    CHECK(sum.dims == DimVector{2, 1});
    CHECK_THROWS_AS(direct_sum(m, simple_rep(a2, 3, 0)), std::invalid_argument);

    // kernel of the zero morphism is the whole source; its image is zero
    std::vector<FpMat> zero_maps{FpMat(1, 1, 2), FpMat(1, 1, 2)};
    const Morphism zero = make_morphism(m, m, zero_maps);
    CHECK(kernel(zero).dims() == m.dims);
    CHECK(image(zero).dim() == 0);

    std::vector<FpMat> id_maps{FpMat::identity(1, 2), FpMat::identity(1, 2)};
    const Morphism ident = make_morphism(m, m, id_maps);
    CHECK(kernel(ident).dim() == 0);
    CHECK(image(ident).dims() == m.dims);
}

TEST_CASE("composition series") {
    const Quiver a2 = quiver_a2();
    const Representation m = universal_extension(a2, 2, 0, 1);
    const auto factors = composition_series(m);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] == 1);  // socle S_2 first
    CHECK(factors[1] == 0);

    const Representation triple = semisimple_rep(a2, 2, {0, 3});
    CHECK(composition_series(triple) == std::vector<int>{1, 1, 1});

    const Representation r = random_rep(quiver_a3(), 2, {1, 2, 1}, 5);
    const auto cs = composition_series(r);
    CHECK(static_cast<std::int64_t>(cs.size()) == r.dim());
    DimVector mult(3, 0);
    for (int v : cs) ++mult[v];
    CHECK(mult == r.dims);

    CHECK_THROWS_AS(composition_series(zero_rep(a2, 2)), std::invalid_argument);
}

TEST_CASE("universal extension shape") {
    const Quiver k3 = quiver_kronecker(3);
    const Representation x = universal_extension(k3, 2, 0, 1);
    CHECK(x.dims == DimVector{3, 1});
    REQUIRE(x.maps.size() == 3);
    for (int c = 0; c < 3; ++c) {
        CHECK(x.maps[c].rows() == 1);
        CHECK(x.maps[c].cols() == 3);
        for (int col = 0; col < 3; ++col) CHECK(x.maps[c].at(0, col) == (col == c ? 1 : 0));
    }
    // no subobject concentrated at the source vertex
    for (const auto& s : subrep_enumerate(x)) {
        if (s.dims()[1] == 0) CHECK(s.dims()[0] == 0);
    }
    CHECK_THROWS_AS(universal_extension(k3, 2, 1, 0), std::invalid_argument);
}

TEST_CASE("seeded random representations") {
    const Quiver a2 = quiver_a2();
    const Representation r1 = random_rep(a2, 2, {2, 3}, 1234);
    const Representation r2 = random_rep(a2, 2, {2, 3}, 1234);
    CHECK(r1.maps[0] == r2.maps[0]);
    CHECK(r1.dims == DimVector{2, 3});

    const Representation r3 = random_rep(a2, 2, {2, 3}, 1235);
    CHECK(r1.maps[0] != r3.maps[0]);

    const Representation r5 = random_rep(a2, 5, {2, 2}, 77);
    for (auto v : r5.maps[0].data()) CHECK(v < 5);

    CHECK_THROWS_AS(random_rep(a2, 2, {5, 5}, 1), std::invalid_argument);

    const auto start = std::chrono::steady_clock::now();
    for (int k = 0; k < 200; ++k) (void)random_rep(a2, 2, {3, 3}, 5000 + k);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() < 1000);
}

TEST_CASE("short exact sequences enumerate proper subobjects") {
    const Representation m = universal_extension(quiver_a2(), 2, 0, 1);
    const auto seqs = short_exact_sequences(m);
    REQUIRE(seqs.size() == 1);
    CHECK(seqs[0].sub_rep.dims == DimVector{0, 1});
    CHECK(seqs[0].quotient_rep.dims == DimVector{1, 0});
}

TEST_CASE("subspace bookkeeping over other primes") {
    const Quiver a2 = quiver_a2();
    // dim vector (1,1) over F_3: arrow map is a scalar; three choices of scalar
    int with_nonzero = 0;
    for (std::uint64_t seed = 0; seed < 9; ++seed) {
        const Representation r = random_rep(a2, 3, {1, 1}, seed);
        const auto subs = subrep_enumerate(r);
        if (r.maps[0].at(0, 0) != 0) {
            CHECK(subs.size() == 3);  // nonsplit: 0, S_2, whole
            ++with_nonzero;
        } else {
            CHECK(subs.size() == 4);  // split: all four subspace pairs
        }
    }
    CHECK(with_nonzero > 0);
}
