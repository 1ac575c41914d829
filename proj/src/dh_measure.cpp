#include "gfc/dh_measure.hpp"

#include <stdexcept>

namespace gfc::dhmeasure {

namespace {

/// p! q! / (p+q+2)! with exact integer factorials.
Rat simplex_monomial_integral(int p, int q) {
    static const std::vector<Int> factorial = [] {
        std::vector<Int> f{1};
        for (int i = 1; i <= 64; ++i) f.push_back(f.back() * i);
        return f;
    }();
    const std::size_t up = static_cast<std::size_t>(p), uq = static_cast<std::size_t>(q);
    if (up + uq + 2 >= factorial.size())
        throw std::invalid_argument("simplex_monomial_integral: degree out of range");
    return Rat(factorial[up] * factorial[uq], factorial[up + uq + 2]);
}

}  // namespace

BivarPoly BivarPoly::one() {
    BivarPoly p;
    p.terms_[{0, 0}] = 1;
    return p;
}

void BivarPoly::mul_affine(const Rat& c0, const Rat& cu, const Rat& cv) {
    std::map<std::pair<int, int>, Rat> next;
    for (const auto& [deg, coeff] : terms_) {
        const auto [i, j] = deg;
        if (c0 != 0) next[{i, j}] += coeff * c0;
        if (cu != 0) next[{i + 1, j}] += coeff * cu;
        if (cv != 0) next[{i, j + 1}] += coeff * cv;
    }
    terms_ = std::move(next);
}

Rat BivarPoly::integral_over_simplex() const {
    Rat total(0);
    for (const auto& [deg, coeff] : terms_)
        total += coeff * simplex_monomial_integral(deg.first, deg.second);
    return total;
}

std::vector<Vec2Q> linear_forms(const rootdata::RootDatum& datum) {
    std::vector<Vec2Q> forms;
    forms.reserve(datum.positive_roots.size());
    for (const auto& alpha : datum.positive_roots) forms.push_back(datum.gram.apply(alpha));
    return forms;
}

Integrals integrals(const rootdata::RootDatum& datum, const exactgeom::Polygon& polygon) {
    const std::vector<Vec2Q> forms = linear_forms(datum);
    const auto& verts = polygon.vertices;

    Integrals out{Rat(0), {Rat(0), Rat(0)}};
    for (std::size_t i = 1; i + 1 < verts.size(); ++i) {
        const Vec2Q& a = verts[0];
        const Vec2Q e1 = verts[i] - a;
        const Vec2Q e2 = verts[i + 1] - a;
        const Rat jac = cross(e1, e2);  // positive: CCW fan of a convex polygon

        // Pull the density back to the standard simplex: each linear factor
        // becomes affine in (u, v); square it by multiplying twice.
        BivarPoly density = BivarPoly::one();
        for (const auto& f : forms) {
            const Rat c0 = dot(f, a), cu = dot(f, e1), cv = dot(f, e2);
            density.mul_affine(c0, cu, cv);
            density.mul_affine(c0, cu, cv);
        }
        out.mass += jac * density.integral_over_simplex();

        BivarPoly mx = density;
        mx.mul_affine(a.x, e1.x, e2.x);
        out.moment.x += jac * mx.integral_over_simplex();

        BivarPoly my = std::move(density);
        my.mul_affine(a.y, e1.y, e2.y);
        out.moment.y += jac * my.integral_over_simplex();
    }
    return out;
}

Rat mass(const rootdata::RootDatum& datum, const exactgeom::Polygon& polygon) {
    return integrals(datum, polygon).mass;
}

Vec2Q barycenter(const rootdata::RootDatum& datum, const exactgeom::Polygon& polygon) {
    Integrals ints = integrals(datum, polygon);
    if (ints.mass == 0) throw std::domain_error("barycenter: zero Duistermaat-Heckman mass");
    Rat inv = 1 / ints.mass;
    return {ints.moment.x * inv, ints.moment.y * inv};
}

}  // namespace gfc::dhmeasure
