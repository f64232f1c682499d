#ifndef MG_SPECTRAL_HPP
#define MG_SPECTRAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mg/twist.hpp"

namespace mg {

inline constexpr int kCharPolyCap = 8;

// Characteristic polynomial det(lambda I - A) of an integer matrix, exact
// (Faddeev-LeVerrier over __int128, overflow-checked). Coefficients ascending,
// monic of degree n. Refuses matrices larger than the cap.
std::vector<std::int64_t> char_poly(const IntMatrix& a, int cap = kCharPolyCap);

// Largest root modulus of a monic integer polynomial. Integer roots are
// stripped exactly (rational roots of a monic integer polynomial are
// integers); the rest go to Durand-Kerner, simple roots converging to machine
// precision.
double max_root_modulus(std::vector<std::int64_t> monic_ascending);

struct SpectralRadius {
    double value = 0.0;
    bool exact = false;  // exact characteristic polynomial route
    std::string method;  // "char_poly" or "power_iteration_abs"
};

// Exact route for n <= cap; above the cap, power iteration on the entrywise
// absolute-value matrix, which yields rho(|A|) >= rho(A) and is flagged
// non-exact.
SpectralRadius spectral_radius(const IntMatrix& a, int cap = kCharPolyCap);

}  // namespace mg

#endif
