#include "gfc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gfc::oracle {

NumericBarycenter numeric_dh_barycenter(const rootdata::RootDatum& datum,
                                        const exactgeom::Polygon& polygon, int subdivisions) {
    if (subdivisions < 1) throw std::invalid_argument("numeric_dh_barycenter: subdivisions < 1");

    // Density factors kappa(alpha, .) as double coefficient pairs.
    struct Lin {
        double x, y;
    };
    const double g11 = datum.gram.a.convert_to<double>();
    const double g12 = datum.gram.b.convert_to<double>();
    const double g21 = datum.gram.c.convert_to<double>();
    const double g22 = datum.gram.d.convert_to<double>();
    std::vector<Lin> forms;
    forms.reserve(datum.positive_roots.size());
    for (const auto& alpha : datum.positive_roots) {
        const double ax = alpha.x.convert_to<double>(), ay = alpha.y.convert_to<double>();
        forms.push_back({g11 * ax + g12 * ay, g21 * ax + g22 * ay});
    }

    struct Facet {
        double nx, ny, r;
    };
    std::vector<Facet> facets;
    facets.reserve(polygon.facets.size());
    for (const auto& f : polygon.facets)
        facets.push_back({static_cast<double>(f.normal.x), static_cast<double>(f.normal.y),
                          f.rhs.convert_to<double>()});

    double xmin = polygon.vertices[0].x.convert_to<double>(), xmax = xmin;
    double ymin = polygon.vertices[0].y.convert_to<double>(), ymax = ymin;
    for (const auto& v : polygon.vertices) {
        const double vx = v.x.convert_to<double>(), vy = v.y.convert_to<double>();
        xmin = std::min(xmin, vx);
        xmax = std::max(xmax, vx);
        ymin = std::min(ymin, vy);
        ymax = std::max(ymax, vy);
    }

    const int n = subdivisions;
    const double dx = (xmax - xmin) / n, dy = (ymax - ymin) / n;
    double mass = 0, mx = 0, my = 0;
    for (int j = 0; j < n; ++j) {
        const double y = ymin + (j + 0.5) * dy;
        // Clip the row to the polygon: an exact interval in x.
        double xlo = xmin, xhi = xmax;
        bool empty_row = false;
        for (const auto& f : facets) {
            const double rem = f.r - f.ny * y;
            if (f.nx == 0) {
                if (rem < 0) {
                    empty_row = true;
                    break;
                }
            } else if (f.nx > 0) {
                xhi = std::min(xhi, rem / f.nx);
            } else {
                xlo = std::max(xlo, rem / f.nx);
            }
        }
        if (empty_row || xhi <= xlo) continue;

        const int k0 = std::max(0, static_cast<int>(std::floor((xlo - xmin) / dx)));
        const int k1 = std::min(n, static_cast<int>(std::ceil((xhi - xmin) / dx)));
        for (int k = k0; k < k1; ++k) {
            const double a = std::max(xmin + k * dx, xlo);
            const double b = std::min(xmin + (k + 1) * dx, xhi);
            if (b <= a) continue;
            const double xc = 0.5 * (a + b), w = b - a;
            double density = 1;
            for (const auto& f : forms) {
                const double t = f.x * xc + f.y * y;
                density *= t * t;
            }
            const double cell = density * w * dy;
            mass += cell;
            mx += xc * cell;
            my += y * cell;
        }
    }
    if (mass <= 0) throw std::runtime_error("numeric_dh_barycenter: vanishing quadrature mass");
    return {mass, mx / mass, my / mass};
}

std::vector<Vec2Q> brute_force_hull(const std::vector<Vec2Q>& points) {
    std::vector<Vec2Q> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();

    auto on_segment = [](const Vec2Q& p, const Vec2Q& a, const Vec2Q& b) {
        return cross(b - a, p - a) == 0 && dot(p - a, p - b) <= 0;
    };
    auto in_triangle = [](const Vec2Q& p, const Vec2Q& a, const Vec2Q& b, const Vec2Q& c) {
        if (cross(b - a, c - a) == 0) return false;  // degenerate; segment test covers
        const Rat d1 = cross(b - a, p - a);
        const Rat d2 = cross(c - b, p - b);
        const Rat d3 = cross(a - c, p - c);
        return (d1 >= 0 && d2 >= 0 && d3 >= 0) || (d1 <= 0 && d2 <= 0 && d3 <= 0);
    };

    std::vector<Vec2Q> extremes;
    for (std::size_t i = 0; i < n; ++i) {
        bool inside = false;
        for (std::size_t a = 0; a < n && !inside; ++a) {
            if (a == i) continue;
            for (std::size_t b = a + 1; b < n && !inside; ++b) {
                if (b == i) continue;
                if (on_segment(pts[i], pts[a], pts[b])) inside = true;
                for (std::size_t c = b + 1; c < n && !inside; ++c) {
                    if (c == i) continue;
                    if (in_triangle(pts[i], pts[a], pts[b], pts[c])) inside = true;
                }
            }
        }
        if (!inside) extremes.push_back(pts[i]);
    }
    if (extremes.size() < 3) return extremes;

    // CCW around the centroid, then rotate the lexicographic minimum first.
    Vec2Q ctr{Rat(0), Rat(0)};
    for (const auto& v : extremes) ctr = ctr + v;
    ctr = Rat(1, static_cast<unsigned long>(extremes.size())) * ctr;
    auto half = [&](const Vec2Q& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; };
    std::sort(extremes.begin(), extremes.end(), [&](const Vec2Q& p, const Vec2Q& q) {
        const Vec2Q dp = p - ctr, dq = q - ctr;
        if (half(dp) != half(dq)) return half(dp) < half(dq);
        return cross(dp, dq) > 0;
    });
    std::size_t lo = 0;
    for (std::size_t i = 1; i < extremes.size(); ++i)
        if (extremes[i] < extremes[lo]) lo = i;
    std::rotate(extremes.begin(), extremes.begin() + static_cast<std::ptrdiff_t>(lo), extremes.end());
    return extremes;
}

}  // namespace gfc::oracle
