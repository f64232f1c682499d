#ifndef MG_REP_HPP
#define MG_REP_HPP

#include <cstdint>
#include <vector>

#include "mg/fp_matrix.hpp"
#include "mg/quiver.hpp"

namespace mg {

inline constexpr int kDefaultEnumerationCap = 8;

// A finite-dimensional representation of a quiver over F_p: one space per
// vertex, one matrix per arrow (shape d_dst x d_src, acting on column
// vectors). This is the desk-scale model of the standard heart.
struct Representation {
    Quiver quiver;
    int p = 2;
    DimVector dims;
    std::vector<FpMat> maps;  // aligned with quiver.arrows()

    std::int64_t dim() const { return total_dim(dims); }
    bool is_zero() const { return dim() == 0; }
};

Representation make_rep(const Quiver& quiver, int p, const DimVector& dims,
                        const std::vector<FpMat>& maps);
Representation zero_rep(const Quiver& quiver, int p);
Representation simple_rep(const Quiver& quiver, int p, int vertex);
// direct sum of S_i^{mult_i} with zero arrow maps
Representation semisimple_rep(const Quiver& quiver, int p, const DimVector& multiplicities);
Representation direct_sum(const Representation& a, const Representation& b);

// Deterministic pseudo-random representation: same seed, same matrices.
Representation random_rep(const Quiver& quiver, int p, const DimVector& dims, std::uint64_t seed,
                          int cap = kDefaultEnumerationCap);

// The middle term of the universal extension 0 -> S_j -> X -> S_i^{q_ij} -> 0:
// dimension vector e_j + q_ij e_i, the c-th parallel arrow i -> j acting by
// the c-th coordinate projection. X has no direct summand S_i.
Representation universal_extension(const Quiver& quiver, int p, int i, int j);

// Arrow-invariant tuple of subspaces, one RREF basis per vertex.
struct Subrep {
    std::vector<FpMat> basis;
    std::vector<std::vector<int>> pivots;

    DimVector dims() const;
    std::int64_t dim() const { return total_dim(dims()); }
    bool is_zero() const { return dim() == 0; }
};

Subrep zero_subrep(const Representation& rep);
Subrep full_subrep(const Representation& rep);
bool subrep_invariant(const Representation& rep, const Subrep& sub);

// Exhaustive enumeration of all subrepresentations, vertices visited in
// topological order with pruning against the images of already-fixed sources.
// Output order: dimension vector, then canonical basis bytes. Refuses reps
// with total dimension above the cap.
std::vector<Subrep> subrep_enumerate(const Representation& rep, int cap = kDefaultEnumerationCap);

// sub as a representation in its own right (restriction of the arrow maps)
Representation restrict_to(const Representation& rep, const Subrep& sub);

// intersection and sum inside the subobject lattice
Subrep subrep_intersection(const Representation& rep, const Subrep& a, const Subrep& b);
Subrep subrep_sum(const Representation& rep, const Subrep& a, const Subrep& b);

struct QuotientData {
    Representation rep;
    std::vector<FpMat> proj;  // per-vertex matrices, ambient coords -> quotient coords
};

QuotientData quotient(const Representation& rep, const Subrep& sub);

// preimage of a subrep of the quotient under per-vertex projection matrices
Subrep preimage(const Representation& rep, const std::vector<FpMat>& proj, const Subrep& sub);

struct Morphism {
    Representation source;
    Representation target;
    std::vector<FpMat> maps;  // per vertex, shape d^target_v x d^source_v
};

Morphism make_morphism(const Representation& source, const Representation& target,
                       const std::vector<FpMat>& maps);
Subrep kernel(const Morphism& f);
Subrep image(const Morphism& f);

struct ShortExactSeq {
    Subrep sub;
    Representation sub_rep;
    Representation quotient_rep;
};

// all short exact sequences 0 -> A -> rep -> C -> 0 with A a nonzero proper
// subrepresentation
std::vector<ShortExactSeq> short_exact_sequences(const Representation& rep,
                                                 int cap = kDefaultEnumerationCap);

// Jordan-Hoelder factors, socle first; the multiplicity of S_i is dims[i].
std::vector<int> composition_series(const Representation& rep);

}  // namespace mg

#endif
