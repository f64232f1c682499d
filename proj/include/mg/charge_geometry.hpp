#ifndef MG_CHARGE_GEOMETRY_HPP
#define MG_CHARGE_GEOMETRY_HPP

#include <complex>
#include <string>
#include <vector>

#include "mg/rational.hpp"

namespace mg {

// Geometry of central charges in the semi-closed upper half-plane
// bH = { r e^{i pi phi} : r > 0, phi in (0, 1] }.
//
// Phases of heart objects live in (0, 1]; the weight g_t(z) = |z| e^{phi(z) t}
// is what masses are summed from. Hull construction and phase ordering are
// exact on Gaussian-rational charges; only moduli and exponentials are floats.
// Float-side inequality assertions use 1e-9 absolute tolerance throughout.

bool in_upper_half(std::complex<double> z, double tol = 0.0);

// phi(z) = (1/pi) arg z in (0, 1]; throws std::domain_error outside bH.
double phase(std::complex<double> z);
double phase(const GaussianRational& z);

// g_t(z) = |z| e^{phi(z) t}.
double g_t(std::complex<double> z, double t);
double g_t(const GaussianRational& z, double t);

// g_t(z1) + g_t(z2) - g_t(z1 + z2); nonnegative for z1, z2 in bH.
double gt_triangle_defect(std::complex<double> z1, std::complex<double> z2, double t);

// f(x) = (e^{xt} - cos pi x) / sin pi x on (-1,0) u (0,1); increasing on each
// interval with limit t/pi at 0. Evaluated via expm1 and 2 sin^2(pi x / 2) to
// avoid cancellation near 0.
double slope_defect_function(double x, double t);

// Left boundary of the convex hull of subobject charges: the extremal path
// z_0 = 0, ..., z_k = total with strictly decreasing edge phases, such that
// every input point lies on or to the right of the path.
struct HNPolygon {
    std::vector<GaussianRational> points;  // extremal chain, first = 0, last = total

    std::size_t edge_count() const { return points.empty() ? 0 : points.size() - 1; }
    GaussianRational edge(std::size_t i) const { return points[i + 1] - points[i]; }
};

HNPolygon left_hull(const std::vector<GaussianRational>& charges, const GaussianRational& total);

// True if p lies in the region bounded by the extremal chain and the segment
// from total back to 0 (boundary included). Exact.
bool polygon_contains(const HNPolygon& poly, const GaussianRational& p);

// Mass from HN factor data: sum of |Z(A_i)| e^{phi_i t}. Phases must strictly
// decrease; the empty list has mass 0.
struct MassFactor {
    std::complex<double> charge;  // charge of the shift-normalized semistable factor
    double phi;                   // phase, any real (shifted objects allowed)
};
double mass_from_factors(const std::vector<MassFactor>& factors, double t);

// SVG rendering of an HN polygon: unit-scaled viewBox, one path element for
// the extremal chain, dots for the remaining charge points.
std::string polygon_svg(const HNPolygon& poly, const std::vector<GaussianRational>& charges);

}  // namespace mg

#endif
