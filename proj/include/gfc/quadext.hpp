#ifndef GFC_QUADEXT_HPP
#define GFC_QUADEXT_HPP

/**
 * Exact scalars in the quadratic extension Q(sqrt(3)), written a + b*sqrt(3).
 *
 * Only the presentation layer needs these: the A2 and G2 Euclidean
 * realizations place lattice points at coordinates involving sqrt(3), while
 * all internal geometry stays in rational lattice coordinates.  For the
 * A1xA1 and B2 families every value has b = 0.
 */

#include "gfc/numeric.hpp"

#include <string>

namespace gfc {

struct QuadExt {
    Rat a{0};  // rational part
    Rat b{0};  // coefficient of sqrt(3)

    QuadExt() = default;
    QuadExt(Rat rational_part) : a(std::move(rational_part)) {}
    QuadExt(Rat rational_part, Rat sqrt3_part) : a(std::move(rational_part)), b(std::move(sqrt3_part)) {}

    static QuadExt sqrt3(Rat coeff = Rat(1)) { return QuadExt(Rat(0), std::move(coeff)); }

    bool is_rational() const { return b == 0; }

    friend QuadExt operator+(const QuadExt& u, const QuadExt& v) { return {u.a + v.a, u.b + v.b}; }
    friend QuadExt operator-(const QuadExt& u, const QuadExt& v) { return {u.a - v.a, u.b - v.b}; }
    friend QuadExt operator-(const QuadExt& u) { return {-u.a, -u.b}; }
    friend QuadExt operator*(const QuadExt& u, const QuadExt& v) {
        return {u.a * v.a + 3 * u.b * v.b, u.a * v.b + u.b * v.a};
    }
    friend QuadExt operator*(const Rat& s, const QuadExt& v) { return {s * v.a, s * v.b}; }

    /// Field inverse; (a + b sqrt3)^-1 = (a - b sqrt3)/(a^2 - 3 b^2).
    QuadExt inverse() const {
        Rat norm = a * a - 3 * b * b;
        if (norm == 0) throw std::invalid_argument("QuadExt::inverse: zero element");
        return {a / norm, -b / norm};
    }
    friend QuadExt operator/(const QuadExt& u, const QuadExt& v) { return u * v.inverse(); }

    friend bool operator==(const QuadExt& u, const QuadExt& v) { return u.a == v.a && u.b == v.b; }
    friend bool operator!=(const QuadExt& u, const QuadExt& v) { return !(u == v); }

    double to_double() const { return a.convert_to<double>() + b.convert_to<double>() * 1.7320508075688772; }

    /// "5", "5/2", "(5/2)√3", "2+√3", ... — human-facing exact form.
    std::string str() const {
        auto coeff = [](const Rat& q) -> std::string {
            if (q == 1) return "";
            if (q == -1) return "-";
            if (rat_is_integer(q)) return q.str();
            return "(" + q.str() + ")";
        };
        if (b == 0) return a.str();
        std::string s;
        if (a != 0) s = a.str();
        std::string bs = coeff(b) + "√3";
        if (!s.empty() && b > 0) s += "+";
        return s + bs;
    }
};

/// Euclidean point, exact over Q(sqrt(3)).
struct Vec2E {
    QuadExt x, y;
    friend bool operator==(const Vec2E& u, const Vec2E& v) { return u.x == v.x && u.y == v.y; }
};

/// 2x2 matrix over Q(sqrt(3)): the lattice -> Euclidean presentation maps.
struct Mat2E {
    QuadExt a, b, c, d;  // (x,y) -> (a x + b y, c x + d y)

    Vec2E apply_rational(const Rat& x, const Rat& y) const {
        return {x * a + y * b, x * c + y * d};
    }
    QuadExt det() const { return a * d - b * c; }
    Mat2E inverse() const {
        QuadExt dt = det();
        QuadExt idt = dt.inverse();
        return {idt * d, -(idt * b), -(idt * c), idt * a};
    }
};

}  // namespace gfc

#endif
