#include "mg/fp_matrix.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace mg {

namespace {

int inv_mod(int a, int p) {
    // p is a small prime, so Fermat is fine
    int r = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_small_prime(int p) {
    if (p < 2 || p > 251) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

FpMat::FpMat(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p) {
    if (!is_small_prime(p)) throw std::invalid_argument("FpMat: field characteristic must be a prime <= 251");
    if (rows < 0 || cols < 0) throw std::invalid_argument("FpMat: negative shape");
    data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

FpMat FpMat::identity(int n, int p) {
    FpMat m(n, n, p);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

std::vector<std::uint8_t> FpMat::row(int r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
            data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_};
}

bool FpMat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint8_t v) { return v == 0; });
}

FpMat mat_mul(const FpMat& a, const FpMat& b) {
    if (a.cols() != b.rows() || a.field() != b.field())
        throw std::invalid_argument("mat_mul: shape or field mismatch");
    FpMat r(a.rows(), b.cols(), a.field());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const int av = a.at(i, k);
            if (av == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                r.set(i, j, static_cast<std::uint8_t>((r.at(i, j) + av * b.at(k, j)) % a.field()));
        }
    return r;
}

FpMat transpose(const FpMat& a) {
    FpMat r(a.cols(), a.rows(), a.field());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.set(j, i, a.at(i, j));
    return r;
}

std::vector<std::uint8_t> map_apply(const FpMat& a, const std::vector<std::uint8_t>& x) {
    if (static_cast<int>(x.size()) != a.cols()) throw std::invalid_argument("apply: length mismatch");
    std::vector<std::uint8_t> y(a.rows(), 0);
    for (int i = 0; i < a.rows(); ++i) {
        int acc = 0;
        for (int j = 0; j < a.cols(); ++j) acc += a.at(i, j) * x[j];
        y[i] = static_cast<std::uint8_t>(acc % a.field());
    }
    return y;
}

std::vector<int> rref(FpMat& m) {
    const int p = m.field();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot_row = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) continue;
        if (pivot_row != r)
            for (int j = 0; j < m.cols(); ++j) {
                const std::uint8_t t = m.at(r, j);
                m.set(r, j, m.at(pivot_row, j));
                m.set(pivot_row, j, t);
            }
        const int inv = inv_mod(m.at(r, c), p);
        for (int j = 0; j < m.cols(); ++j) m.set(r, j, static_cast<std::uint8_t>(m.at(r, j) * inv % p));
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const int f = m.at(i, c);
            for (int j = 0; j < m.cols(); ++j)
                m.set(i, j, static_cast<std::uint8_t>((m.at(i, j) + (p - f) * m.at(r, j)) % p));
        }
        pivots.push_back(c);
        ++r;
    }
    // drop zero rows
    FpMat out(r, m.cols(), p);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.cols(); ++j) out.set(i, j, m.at(i, j));
    m = out;
    return pivots;
}

FpMat nullspace(const FpMat& a) {
    FpMat w = a;
    const std::vector<int> pivots = rref(w);
    const int p = a.field();
    const int n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    FpMat basis(static_cast<int>(free_cols.size()), n, p);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int fc = free_cols[k];
        basis.set(static_cast<int>(k), fc, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const int v = w.at(static_cast<int>(r), fc);
            if (v != 0) basis.set(static_cast<int>(k), pivots[r], static_cast<std::uint8_t>((p - v) % p));
        }
    }
    rref(basis);
    return basis;
}

std::vector<std::uint8_t> reduce_mod_rowspace(const FpMat& basis, const std::vector<int>& pivots,
                                              std::vector<std::uint8_t> x) {
    const int p = basis.field();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const int f = x[pivots[r]];
        if (f == 0) continue;
        for (int j = 0; j < basis.cols(); ++j)
            x[j] = static_cast<std::uint8_t>((x[j] + (p - f) * basis.at(static_cast<int>(r), j)) % p);
    }
    return x;
}

bool in_rowspace(const FpMat& basis, const std::vector<int>& pivots,
                 const std::vector<std::uint8_t>& x) {
    const auto res = reduce_mod_rowspace(basis, pivots, x);
    return std::all_of(res.begin(), res.end(), [](std::uint8_t v) { return v == 0; });
}

std::optional<std::vector<std::uint8_t>> express_in_rowspace(const FpMat& basis,
                                                             const std::vector<int>& pivots,
                                                             const std::vector<std::uint8_t>& x) {
    if (!in_rowspace(basis, pivots, x)) return std::nullopt;
    std::vector<std::uint8_t> coeffs(pivots.size(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) coeffs[r] = x[pivots[r]];
    return coeffs;
}

FpMat quotient_map_matrix(const FpMat& basis, const std::vector<int>& pivots, int ambient_dim, int p) {
    std::vector<bool> is_pivot(ambient_dim, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> rest;
    for (int c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) rest.push_back(c);

    FpMat qm(static_cast<int>(rest.size()), ambient_dim, p);
    for (std::size_t t = 0; t < rest.size(); ++t) {
        qm.set(static_cast<int>(t), rest[t], 1);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const int v = basis.at(static_cast<int>(r), rest[t]);
            if (v != 0) qm.set(static_cast<int>(t), pivots[r], static_cast<std::uint8_t>((p - v) % p));
        }
    }
    return qm;
}

FpMat quotient_lift_matrix(const std::vector<int>& pivots, int ambient_dim, int p) {
    std::vector<bool> is_pivot(ambient_dim, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> rest;
    for (int c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) rest.push_back(c);
    FpMat lift(ambient_dim, static_cast<int>(rest.size()), p);
    for (std::size_t t = 0; t < rest.size(); ++t) lift.set(rest[t], static_cast<int>(t), 1);
    return lift;
}

const std::vector<FpMat>& all_subspaces(int p, int d) {
    static std::map<std::pair<int, int>, std::vector<FpMat>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({p, d});
    if (it != cache.end()) return it->second;

    std::vector<FpMat> out;
    // Enumerate RREF matrices directly: pick pivot columns, then run an
    // odometer over the free entries (non-pivot columns right of each pivot).
    for (int r = 0; r <= d; ++r) {
        std::vector<int> pivots(r);
        for (int i = 0; i < r; ++i) pivots[i] = i;
        while (true) {
            std::vector<bool> is_pivot(d, false);
            for (int c : pivots) is_pivot[c] = true;
            std::vector<std::pair<int, int>> free_pos;
            for (int i = 0; i < r; ++i)
                for (int c = pivots[i] + 1; c < d; ++c)
                    if (!is_pivot[c]) free_pos.emplace_back(i, c);

            std::vector<std::uint8_t> odo(free_pos.size(), 0);
            while (true) {
                FpMat m(r, d, p);
                for (int i = 0; i < r; ++i) m.set(i, pivots[i], 1);
                for (std::size_t k = 0; k < free_pos.size(); ++k)
                    m.set(free_pos[k].first, free_pos[k].second, odo[k]);
                out.push_back(std::move(m));

                std::size_t k = 0;
                for (; k < odo.size(); ++k) {
                    if (++odo[k] < p) break;
                    odo[k] = 0;
                }
                if (k == odo.size()) break;
            }

            // next pivot combination
            int i = r - 1;
            while (i >= 0 && pivots[i] == d - r + i) --i;
            if (i < 0) break;
            ++pivots[i];
            for (int k2 = i + 1; k2 < r; ++k2) pivots[k2] = pivots[k2 - 1] + 1;
        }
    }
    return cache.emplace(std::make_pair(p, d), std::move(out)).first->second;
}

}  // namespace mg
