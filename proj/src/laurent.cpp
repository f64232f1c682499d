#include "mg/laurent.hpp"

#include <cmath>

namespace mg {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly: coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LaurentPoly: coefficient overflow");
    return r;
}

void LaurentPoly::add_term(int degree, std::int64_t c) {
    if (c == 0) return;
    auto it = coeffs_.find(degree);
    if (it == coeffs_.end()) {
        coeffs_[degree] = c;
        return;
    }
    it->second = checked_add(it->second, c);
    if (it->second == 0) coeffs_.erase(it);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [d, c] : b.coeffs_) r.add_term(d, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [d, c] : b.coeffs_) r.add_term(d, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [da, ca] : a.coeffs_)
        for (const auto& [db, cb] : b.coeffs_) r.add_term(da + db, checked_mul(ca, cb));
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [d, c] : coeffs_) r.coeffs_[d] = -c;
    return r;
}

LaurentPoly LaurentPoly::scaled(std::int64_t s) const {
    LaurentPoly r;
    if (s == 0) return r;
    for (const auto& [d, c] : coeffs_) r.coeffs_[d] = checked_mul(c, s);
    return r;
}

LaurentPoly LaurentPoly::shift_degree(int m) const {
    LaurentPoly r;
    for (const auto& [d, c] : coeffs_) r.coeffs_[d + m] = c;
    return r;
}

double LaurentPoly::evaluate(double t) const {
    double v = 0.0;
    for (const auto& [d, c] : coeffs_) v += static_cast<double>(c) * std::exp(-static_cast<double>(d) * t);
    return v;
}

std::int64_t LaurentPoly::evaluate_at_minus_one() const {
    std::int64_t v = 0;
    for (const auto& [d, c] : coeffs_) v = checked_add(v, (d % 2 == 0) ? c : -c);
    return v;
}

std::int64_t LaurentPoly::evaluate_at_one() const {
    std::int64_t v = 0;
    for (const auto& [d, c] : coeffs_) v = checked_add(v, c);
    return v;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : coeffs_) {
        if (!s.empty()) s += c >= 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        const std::int64_t a = c < 0 ? -c : c;
        if (a != 1 || d == 0) s += std::to_string(a);
        if (d != 0) {
            s += "u";
            if (d != 1) s += "^" + std::to_string(d);
        }
    }
    return s;
}

LaurentPoly geometric_sum(const LaurentPoly& r, int k) {
    if (r.coeffs().size() > 1) throw std::invalid_argument("geometric_sum: ratio must be a monomial");
    if (k < 0) throw std::invalid_argument("geometric_sum: negative term count");
    LaurentPoly acc;
    LaurentPoly power = LaurentPoly::constant(1);
    for (int l = 0; l < k; ++l) {
        acc = acc + power;
        power = power * r;
    }
    return acc;
}

}  // namespace mg
