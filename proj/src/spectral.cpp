#include "mg/spectral.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace mg {

namespace {

using i128 = __int128;

i128 add128(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("char_poly: 128-bit overflow");
    return r;
}

i128 mul128(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("char_poly: 128-bit overflow");
    return r;
}

std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("char_poly: coefficient overflow");
    return static_cast<std::int64_t>(v);
}

// exact evaluation of a monic integer polynomial at an integer point
bool is_integer_root(const std::vector<std::int64_t>& coeffs, std::int64_t r) {
    i128 acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = add128(mul128(acc, r), coeffs[i]);
    return acc == 0;
}

// synthetic division by (lambda - r); exact for actual roots of monic input
std::vector<std::int64_t> deflate(const std::vector<std::int64_t>& coeffs, std::int64_t r) {
    const std::size_t d = coeffs.size() - 1;
    std::vector<std::int64_t> out(d);
    i128 carry = coeffs[d];
    for (std::size_t i = d; i-- > 0;) {
        out[i] = narrow(carry);
        carry = add128(mul128(carry, r), coeffs[i]);
    }
    return out;
}

std::vector<std::complex<double>> durand_kerner(const std::vector<std::int64_t>& coeffs) {
    const std::size_t d = coeffs.size() - 1;
    std::vector<std::complex<double>> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = static_cast<double>(coeffs[i]);

    double bound = 0.0;
    for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, std::fabs(static_cast<double>(coeffs[i])));
    bound += 1.0;

    std::vector<std::complex<double>> z(d);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> w = seed;
    for (std::size_t k = 0; k < d; ++k, w *= seed) z[k] = bound * w;

    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };

    for (int iter = 0; iter < 2000; ++iter) {
        double worst = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            std::complex<double> denom = 1.0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != k) denom *= z[k] - z[j];
            const std::complex<double> delta = eval(z[k]) / denom;
            z[k] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-15 * (1.0 + bound)) break;
    }
    return z;
}

}  // namespace

std::vector<std::int64_t> char_poly(const IntMatrix& a, int cap) {
    const int n = static_cast<int>(a.size());
    if (n == 0) throw std::invalid_argument("char_poly: empty matrix");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("char_poly: matrix not square");
    if (n > cap)
        throw std::invalid_argument("char_poly: dimension " + std::to_string(n) +
                                    " exceeds the exact cap " + std::to_string(cap));

    // Faddeev-LeVerrier: B_0 = I, C_k = A B_{k-1}, a_k = -tr(C_k)/k,
    // B_k = C_k + a_k I. Every division is exact.
    std::vector<std::vector<i128>> b(n, std::vector<i128>(n, 0));
    for (int i = 0; i < n; ++i) b[i][i] = 1;

    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n) + 1, 0);
    coeffs[static_cast<std::size_t>(n)] = 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<i128>> ck(n, std::vector<i128>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (int j = 0; j < n; ++j)
                    ck[i][j] = add128(ck[i][j], mul128(a[i][l], b[l][j]));
            }
        i128 trace = 0;
        for (int i = 0; i < n; ++i) trace = add128(trace, ck[i][i]);
        if (trace % k != 0) throw std::logic_error("char_poly: non-integral Faddeev-LeVerrier step");
        const i128 ak = -(trace / k);
        coeffs[static_cast<std::size_t>(n - k)] = narrow(ak);
        for (int i = 0; i < n; ++i) ck[i][i] = add128(ck[i][i], ak);
        b = std::move(ck);
    }
    return coeffs;
}

double max_root_modulus(std::vector<std::int64_t> coeffs) {
    if (coeffs.empty() || coeffs.back() != 1)
        throw std::invalid_argument("max_root_modulus: monic polynomial expected");
    double best = 0.0;

    // zero roots
    while (coeffs.size() > 1 && coeffs[0] == 0) coeffs.erase(coeffs.begin());

    // peel exact integer roots suggested by the numeric solve; this keeps
    // unipotent and reflection cases exact and leaves only simple irrational
    // roots to the iteration
    while (coeffs.size() > 1) {
        const auto roots = durand_kerner(coeffs);
        bool deflated = false;
        for (const auto& z : roots) {
            if (std::fabs(z.imag()) > 0.5) continue;
            const double rounded = std::nearbyint(z.real());
            if (std::fabs(z.real() - rounded) > 0.5) continue;
            if (std::fabs(rounded) > 9.0e15) continue;
            const auto r = static_cast<std::int64_t>(rounded);
            if (!is_integer_root(coeffs, r)) continue;
            best = std::max(best, std::fabs(static_cast<double>(r)));
            coeffs = deflate(coeffs, r);
            deflated = true;
            break;
        }
        if (!deflated) {
            for (const auto& z : roots) best = std::max(best, std::abs(z));
            break;
        }
    }
    return best;
}

SpectralRadius spectral_radius(const IntMatrix& a, int cap) {
    const int n = static_cast<int>(a.size());
    if (n == 0) throw std::invalid_argument("spectral_radius: empty matrix");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("spectral_radius: matrix not square");

    if (n <= cap) return SpectralRadius{max_root_modulus(char_poly(a, cap)), true, "char_poly"};

    // rho(|A|) via power iteration; an upper bound for rho(A), reported as an
    // estimate
    std::vector<double> v(n, 1.0);
    double lambda = 0.0;
    for (int iter = 0; iter < 10000; ++iter) {
        std::vector<double> w(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w[i] += std::fabs(static_cast<double>(a[i][j])) * v[j];
        double norm = 0.0;
        for (double x : w) norm = std::max(norm, x);
        if (norm == 0.0) return SpectralRadius{0.0, false, "power_iteration_abs"};
        for (double& x : w) x /= norm;
        if (std::fabs(norm - lambda) < 1e-12 * std::max(1.0, norm)) {
            lambda = norm;
            break;
        }
        lambda = norm;
        v = std::move(w);
    }
    return SpectralRadius{lambda, false, "power_iteration_abs"};
}

}  // namespace mg
