#include "mg/charge_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mg {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_upper_half(std::complex<double> z) {
    if (!in_upper_half(z))
        throw std::domain_error("charge must lie in the semi-closed upper half-plane");
}

// Full convex hull in counterclockwise order (strict turns, collinear points
// dropped). Input must be deduplicated.
std::vector<GaussianRational> convex_hull_ccw(std::vector<GaussianRational> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;

    std::vector<GaussianRational> hull(2 * n);
    std::size_t k = 0;
    // lower hull
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]).sign() <= 0) --k;
        hull[k++] = pts[i];
    }
    // upper hull
    for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]).sign() <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    return hull;
}

}  // namespace

bool in_upper_half(std::complex<double> z, double tol) {
    if (z.imag() > tol) return true;
    return z.imag() >= -tol && z.imag() <= tol && z.real() < -tol;
}

double phase(std::complex<double> z) {
    require_upper_half(z);
    if (z.imag() == 0.0) return 1.0;           // negative real ray
    if (z.real() == 0.0) return 0.5;           // positive imaginary ray
    return std::atan2(z.imag(), z.real()) / kPi;
}

double phase(const GaussianRational& z) {
    if (!z.in_upper_half())
        throw std::domain_error("charge must lie in the semi-closed upper half-plane");
    if (z.im.is_zero()) return 1.0;
    if (z.re.is_zero()) return 0.5;
    return std::atan2(z.im.to_double(), z.re.to_double()) / kPi;
}

double g_t(std::complex<double> z, double t) { return std::abs(z) * std::exp(phase(z) * t); }

double g_t(const GaussianRational& z, double t) { return z.abs() * std::exp(phase(z) * t); }

double gt_triangle_defect(std::complex<double> z1, std::complex<double> z2, double t) {
    require_upper_half(z1);
    require_upper_half(z2);
    return g_t(z1, t) + g_t(z2, t) - g_t(z1 + z2, t);
}

double slope_defect_function(double x, double t) {
    if (!(std::fabs(x) < 1.0) || x == 0.0)
        throw std::domain_error("slope_defect_function: x must lie in (-1,0) or (0,1)");
    const double s = std::sin(kPi * x);
    // e^{xt} - cos(pi x) = expm1(xt) + (1 - cos(pi x))
    const double half = std::sin(kPi * x / 2.0);
    return (std::expm1(x * t) + 2.0 * half * half) / s;
}

HNPolygon left_hull(const std::vector<GaussianRational>& charges, const GaussianRational& total) {
    if (charges.empty()) throw std::invalid_argument("left_hull: empty charge set");
    const GaussianRational zero{};
    bool has_zero = false, has_total = false;
    for (const auto& p : charges) {
        if (!p.is_zero() && !p.in_upper_half())
            throw std::domain_error("left_hull: charge outside the semi-closed upper half-plane");
        if (p.is_zero()) has_zero = true;
        if (p == total) has_total = true;
    }
    if (!has_zero) throw std::invalid_argument("left_hull: charge set must contain 0");
    if (!has_total) throw std::invalid_argument("left_hull: charge set must contain the total charge");

    if (total.is_zero()) return HNPolygon{{zero}};

    // Keep the closed half-plane on the left of the ray 0 -> total; the right
    // boundary of the clipped hull is then the segment [0, total] itself.
    std::vector<GaussianRational> kept;
    kept.reserve(charges.size());
    for (const auto& p : charges)
        if (cross(total, p).sign() >= 0) kept.push_back(p);

    std::vector<GaussianRational> hull = convex_hull_ccw(std::move(kept));

    if (hull.size() <= 2) {
        // All retained points are collinear with 0 and total; reject points
        // outside the segment (they cannot arise from genuine subobject data).
        for (const auto& p : hull) {
            const Rational along = p.re * total.re + p.im * total.im;
            const Rational len2 = total.re * total.re + total.im * total.im;
            if (along.sign() < 0 || along > len2)
                throw std::domain_error("left_hull: collinear charge beyond the total segment");
        }
        return HNPolygon{{zero, total}};
    }

    std::size_t i0 = hull.size(), i1 = hull.size();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        if (hull[i].is_zero()) i0 = i;
        if (hull[i] == total) i1 = i;
    }
    if (i0 == hull.size()) throw std::domain_error("left_hull: 0 is not extremal");
    if (i1 == hull.size()) throw std::domain_error("left_hull: total is not extremal");

    // The hull is counterclockwise, so walking backwards keeps the hull on the
    // right of the traversed path: that is the left boundary from 0 to total.
    HNPolygon poly;
    std::size_t i = i0;
    poly.points.push_back(hull[i]);
    while (i != i1) {
        i = (i + hull.size() - 1) % hull.size();
        poly.points.push_back(hull[i]);
    }

    // Internal consistency: successive edges must turn clockwise, which is
    // exactly the strict decrease of edge phases.
    for (std::size_t e = 0; e + 1 < poly.edge_count(); ++e)
        if (cross(poly.edge(e), poly.edge(e + 1)).sign() >= 0)
            throw std::logic_error("left_hull: edge phases fail to decrease");
    return poly;
}

bool polygon_contains(const HNPolygon& poly, const GaussianRational& p) {
    if (poly.points.size() == 1) return p == poly.points.front();
    // The chain runs clockwise around the enclosed region, the closing edge
    // total -> 0 included; inside means on or to the right of every edge.
    const std::size_t n = poly.points.size();
    for (std::size_t i = 0; i < n; ++i) {
        const GaussianRational& a = poly.points[i];
        const GaussianRational& b = poly.points[(i + 1) % n];
        if (cross(b - a, p - a).sign() > 0) return false;
    }
    return true;
}

double mass_from_factors(const std::vector<MassFactor>& factors, double t) {
    double m = 0.0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0 && !(factors[i].phi < factors[i - 1].phi))
            throw std::invalid_argument("mass_from_factors: phases must strictly decrease");
        m += std::abs(factors[i].charge) * std::exp(factors[i].phi * t);
    }
    return m;
}

std::string polygon_svg(const HNPolygon& poly, const std::vector<GaussianRational>& charges) {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    auto widen = [&](const GaussianRational& p) {
        xmin = std::min(xmin, p.re.to_double());
        xmax = std::max(xmax, p.re.to_double());
        ymin = std::min(ymin, p.im.to_double());
        ymax = std::max(ymax, p.im.to_double());
    };
    for (const auto& p : poly.points) widen(p);
    for (const auto& p : charges) widen(p);
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double margin = 0.08;
    // map to a unit viewBox with the imaginary axis pointing up
    auto sx = [&](double x) { return margin + (1 - 2 * margin) * (x - xmin) / span; };
    auto sy = [&](double y) { return 1 - margin - (1 - 2 * margin) * (y - ymin) / span; };

    char buf[160];
    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\" "
        "width=\"480\" height=\"480\">\n";
    std::string d;
    for (std::size_t i = 0; i < poly.points.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%c%.6f %.6f", i == 0 ? 'M' : 'L',
                      sx(poly.points[i].re.to_double()), sy(poly.points[i].im.to_double()));
        d += buf;
        d += ' ';
    }
    svg += "  <path d=\"" + d + "\" fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"0.008\"/>\n";
    for (const auto& p : charges) {
        std::snprintf(buf, sizeof buf,
                      "  <circle cx=\"%.6f\" cy=\"%.6f\" r=\"0.010\" fill=\"#c04040\"/>\n",
                      sx(p.re.to_double()), sy(p.im.to_double()));
        svg += buf;
    }
    for (const auto& p : poly.points) {
        std::snprintf(buf, sizeof buf,
                      "  <circle cx=\"%.6f\" cy=\"%.6f\" r=\"0.014\" fill=\"#1f4e8c\"/>\n",
                      sx(p.re.to_double()), sy(p.im.to_double()));
        svg += buf;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace mg
