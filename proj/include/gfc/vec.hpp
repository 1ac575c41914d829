#ifndef GFC_VEC_HPP
#define GFC_VEC_HPP

/**
 * Small exact linear algebra: rational 2-vectors and 2x2 matrices, integer
 * 2-vectors and 2x2 matrices (lattice functionals, Weyl matrices, primitive
 * directions).  Everything is by-value and tiny; no Eigen needed at this size.
 */

#include "gfc/numeric.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gfc {

struct Vec2Q {
    Rat x{0}, y{0};

    friend Vec2Q operator+(const Vec2Q& a, const Vec2Q& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2Q operator-(const Vec2Q& a, const Vec2Q& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2Q operator*(const Rat& s, const Vec2Q& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2Q& a, const Vec2Q& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2Q& a, const Vec2Q& b) { return !(a == b); }
    /// Lexicographic by (x, y); used for canonical vertex ordering.
    friend bool operator<(const Vec2Q& a, const Vec2Q& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

struct Vec2I {
    std::int64_t x{0}, y{0};

    friend Vec2I operator+(const Vec2I& a, const Vec2I& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2I operator-(const Vec2I& a, const Vec2I& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2I operator-(const Vec2I& a) { return {-a.x, -a.y}; }
    friend bool operator==(const Vec2I& a, const Vec2I& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Vec2I& a, const Vec2I& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
    Vec2Q to_rational() const { return {Rat(x), Rat(y)}; }
};

inline Rat dot(const Vec2Q& a, const Vec2Q& b) { return a.x * b.x + a.y * b.y; }
inline Rat dot(const Vec2I& a, const Vec2Q& b) { return Rat(a.x) * b.x + Rat(a.y) * b.y; }
inline std::int64_t dot(const Vec2I& a, const Vec2I& b) { return a.x * b.x + a.y * b.y; }
inline Rat cross(const Vec2Q& a, const Vec2Q& b) { return a.x * b.y - a.y * b.x; }
inline std::int64_t cross(const Vec2I& a, const Vec2I& b) { return a.x * b.y - a.y * b.x; }

/// Outward normal of a CCW-oriented edge direction (rotate by -90 degrees).
inline Vec2I rot_minus90(const Vec2I& v) { return {v.y, -v.x}; }
/// Rotate by +90 degrees.
inline Vec2I rot_plus90(const Vec2I& v) { return {-v.y, v.x}; }

/// Primitive integer vector with the same direction as the (nonzero) rational v.
inline Vec2I primitive(const Vec2Q& v) {
    if (v.x == 0 && v.y == 0) throw std::invalid_argument("primitive: zero vector");
    Int nx = numerator(v.x) * denominator(v.y);
    Int ny = numerator(v.y) * denominator(v.x);
    Int g = gcd(abs(nx), abs(ny));
    nx /= g;
    ny /= g;
    if (nx < std::numeric_limits<std::int64_t>::min() || nx > std::numeric_limits<std::int64_t>::max() ||
        ny < std::numeric_limits<std::int64_t>::min() || ny > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("primitive: direction exceeds 64-bit range");
    return {nx.convert_to<std::int64_t>(), ny.convert_to<std::int64_t>()};
}

inline Vec2I primitive(const Vec2I& v) {
    if (v.x == 0 && v.y == 0) throw std::invalid_argument("primitive: zero vector");
    std::int64_t g = std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
    return {v.x / g, v.y / g};
}

/// Exact 2x2 matrix over the rationals.
struct Mat2Q {
    // entries a b / c d acting as (x,y) -> (a x + b y, c x + d y)
    Rat a{1}, b{0}, c{0}, d{1};

    static Mat2Q identity() { return {}; }
    static Mat2Q from_columns(const Vec2Q& col0, const Vec2Q& col1) {
        return {col0.x, col1.x, col0.y, col1.y};
    }

    Vec2Q apply(const Vec2Q& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Vec2Q column(int i) const { return i == 0 ? Vec2Q{a, c} : Vec2Q{b, d}; }
    Rat det() const { return a * d - b * c; }

    Mat2Q transpose() const { return {a, c, b, d}; }

    Mat2Q inverse() const {
        Rat dt = det();
        if (dt == 0) throw std::invalid_argument("Mat2Q::inverse: singular");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    friend Mat2Q operator*(const Mat2Q& m, const Mat2Q& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend bool operator==(const Mat2Q& m, const Mat2Q& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
};

/// Integer 2x2 matrix (lattice maps: Weyl reflections, dedup automorphisms).
struct Mat2I {
    std::int64_t a{1}, b{0}, c{0}, d{1};

    static Mat2I identity() { return {}; }

    Vec2Q apply(const Vec2Q& v) const { return {Rat(a) * v.x + Rat(b) * v.y, Rat(c) * v.x + Rat(d) * v.y}; }
    Vec2I apply(const Vec2I& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    std::int64_t det() const { return a * d - b * c; }

    Mat2Q to_rational() const { return {Rat(a), Rat(b), Rat(c), Rat(d)}; }

    friend Mat2I operator*(const Mat2I& m, const Mat2I& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend bool operator==(const Mat2I& m, const Mat2I& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
    friend bool operator<(const Mat2I& m, const Mat2I& n) {
        return std::array<std::int64_t, 4>{m.a, m.b, m.c, m.d} <
               std::array<std::int64_t, 4>{n.a, n.b, n.c, n.d};
    }
};

}  // namespace gfc

#endif
