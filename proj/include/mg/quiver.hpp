#ifndef MG_QUIVER_HPP
#define MG_QUIVER_HPP

#include <cstdint>
#include <vector>

#include "mg/laurent.hpp"

namespace mg {

struct Arrow {
    int src;
    int dst;
};

// A finite acyclic quiver, stored as the matrix q with q[i][j] = number of
// arrows i -> j. Validation provides a topological order of the vertices;
// acyclicity in particular rules out loops and 2-cycles.
class Quiver {
public:
    static Quiver validate(const std::vector<std::vector<std::int64_t>>& adjacency);

    int vertex_count() const { return n_; }
    std::int64_t arrows_between(int i, int j) const {
        return q_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
    }
    const std::vector<int>& topological_order() const { return topo_; }

    // all arrows in a fixed deterministic order: (i, j) row-major, parallel
    // copies consecutive
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool connected() const;

    friend bool operator==(const Quiver& a, const Quiver& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Quiver& a, const Quiver& b) { return !(a == b); }

private:
    Quiver() = default;
    int n_ = 0;
    std::vector<std::vector<std::int64_t>> q_;
    std::vector<int> topo_;
    std::vector<Arrow> arrows_;
};

// common test quivers
Quiver quiver_a2();
Quiver quiver_a3();
Quiver quiver_kronecker(int arrow_count);

using DimVector = std::vector<std::int64_t>;

std::int64_t total_dim(const DimVector& d);

// Graded hom dimensions between the simples of the CY-N quiver category:
//   hom(i,i,m) = 1 for m in {0, N},
//   hom(i,j,1) = q_ij and hom(i,j,N-1) = q_ji for i != j,
// everything else zero. Requires N >= 3 so the four degrees stay separate.
class GradedHomTable {
public:
    GradedHomTable(const Quiver& quiver, int cy_n);

    int cy_dimension() const { return cy_n_; }
    std::int64_t hom(int i, int j, int m) const;
    // sum_m hom(i,j,m) u^m
    LaurentPoly hom_poly(int i, int j) const;

private:
    const Quiver quiver_;
    int cy_n_;
};

// Euler matrix chi[i][j] = sum_m (-1)^m hom(i,j,m) of the CY-N category;
// antisymmetric for N odd, symmetric for N even.
std::vector<std::vector<std::int64_t>> cyn_euler_matrix(const Quiver& quiver, int cy_n);

// Euler form of the path algebra itself: sum_i d_i e_i - sum_{i->j} q_ij d_i e_j.
std::int64_t euler_form_hereditary(const Quiver& quiver, const DimVector& d, const DimVector& e);

void require_cy_dimension(int cy_n);

}  // namespace mg

#endif
