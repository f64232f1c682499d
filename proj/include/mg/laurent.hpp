#ifndef MG_LAURENT_HPP
#define MG_LAURENT_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace mg {

// Integer Laurent polynomial in the formal variable u = e^{-t}. Degree m
// corresponds to cohomological degree m, so evaluation at a real t means
// substituting u = e^{-t}. Coefficient arithmetic is exact int64 with
// overflow checks.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly zero() { return {}; }
    static LaurentPoly constant(std::int64_t c) { return monomial(c, 0); }
    static LaurentPoly monomial(std::int64_t c, int degree) {
        LaurentPoly p;
        if (c != 0) p.coeffs_[degree] = c;
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t coeff(int degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? 0 : it->second;
    }
    const std::map<int, std::int64_t>& coeffs() const { return coeffs_; }

    bool nonnegative() const {
        for (const auto& [d, c] : coeffs_)
            if (c < 0) return false;
        return true;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    LaurentPoly scaled(std::int64_t c) const;

    // u^m * p: re-grades all coefficients by m. The shift functor [1] on
    // objects acts as multiplication by u^{-1}.
    LaurentPoly shift_degree(int m) const;

    // sum of c_m e^{-m t}
    double evaluate(double t) const;

    // exact integer evaluation at u = -1 (the K-theory class of a graded count)
    std::int64_t evaluate_at_minus_one() const;
    // exact integer evaluation at u = 1 (total dimension)
    std::int64_t evaluate_at_one() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string str() const;

private:
    void add_term(int degree, std::int64_t c);
    std::map<int, std::int64_t> coeffs_;
};

// sum_{l=0}^{k-1} r^l for a monomial r = c u^d.
LaurentPoly geometric_sum(const LaurentPoly& r, int k);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace mg

#endif
