#ifndef MG_FP_MATRIX_HPP
#define MG_FP_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace mg {

bool is_small_prime(int p);

// Dense matrix over the prime field F_p (p <= 251), row-major uint8 entries.
// Matrices act on column vectors; subspace bases are stored as rows in
// reduced row echelon form, which makes the representative of a subspace
// unique and comparison a byte compare.
class FpMat {
public:
    FpMat() = default;
    FpMat(int rows, int cols, int p);
    static FpMat identity(int n, int p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int field() const { return p_; }

    std::uint8_t at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, std::uint8_t v) { data_[static_cast<std::size_t>(r) * cols_ + c] = v; }
    const std::vector<std::uint8_t>& data() const { return data_; }

    std::vector<std::uint8_t> row(int r) const;
    bool is_zero() const;

    friend bool operator==(const FpMat& a, const FpMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.data_ == b.data_;
    }
    friend bool operator!=(const FpMat& a, const FpMat& b) { return !(a == b); }

private:
    int rows_ = 0;
    int cols_ = 0;
    int p_ = 2;
    std::vector<std::uint8_t> data_;
};

FpMat mat_mul(const FpMat& a, const FpMat& b);
FpMat transpose(const FpMat& a);

// image of a row vector x under the matrix a (i.e. a * x^T, returned as a row)
std::vector<std::uint8_t> map_apply(const FpMat& a, const std::vector<std::uint8_t>& x);

// In-place reduced row echelon form; returns the pivot columns. Zero rows are
// removed.
std::vector<int> rref(FpMat& m);

// Basis (RREF rows) of { x : a x^T = 0 }.
FpMat nullspace(const FpMat& a);

// Residual of x after eliminating the pivots of an RREF basis; zero iff x
// lies in the row space.
std::vector<std::uint8_t> reduce_mod_rowspace(const FpMat& basis, const std::vector<int>& pivots,
                                              std::vector<std::uint8_t> x);

bool in_rowspace(const FpMat& basis, const std::vector<int>& pivots,
                 const std::vector<std::uint8_t>& x);

// Coefficients expressing x in an RREF basis, or nullopt if x is outside.
std::optional<std::vector<std::uint8_t>> express_in_rowspace(const FpMat& basis,
                                                             const std::vector<int>& pivots,
                                                             const std::vector<std::uint8_t>& x);

// Matrix taking ambient coordinates to the coordinates of the quotient by the
// row space of an RREF basis (the non-pivot residual coordinates).
FpMat quotient_map_matrix(const FpMat& basis, const std::vector<int>& pivots, int ambient_dim, int p);

// Section of the quotient map: embeds quotient coordinates as the
// corresponding non-pivot coordinate vectors.
FpMat quotient_lift_matrix(const std::vector<int>& pivots, int ambient_dim, int p);

// All subspaces of F_p^d, each as an RREF basis, in a fixed deterministic
// order. Cached per (p, d).
const std::vector<FpMat>& all_subspaces(int p, int d);

}  // namespace mg

#endif
