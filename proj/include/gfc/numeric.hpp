#ifndef GFC_NUMERIC_HPP
#define GFC_NUMERIC_HPP

/**
 * Exact scalar types shared by every module.
 *
 * All geometry, measure and classification arithmetic is done over GMP-backed
 * rationals; doubles appear only in the floating-point cross-check oracle and
 * in presentation-layer approximations.
 */

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gfc {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// Exact n^k for small non-negative exponents.
inline Rat rat_pow(const Rat& base, unsigned exp) {
    Rat result(1);
    Rat b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1u;
    }
    return result;
}

/// Lowest-terms "p/q" (or plain "p" for integers); the JSON wire format.
inline std::string rat_to_string(const Rat& q) { return q.str(); }

/// Parse the wire format back; accepts "p" and "p/q".
inline Rat rat_from_string(const std::string& s) { return Rat(s); }

/// Exact conversion of an integer-valued rational; throws otherwise.
inline Int rat_to_int(const Rat& q) {
    if (denominator(q) != 1) throw std::invalid_argument("rat_to_int: not an integer: " + q.str());
    return numerator(q);
}

inline bool rat_is_integer(const Rat& q) { return denominator(q) == 1; }

/// Fixed-point decimal rendering of a rational, e.g. (1419621/1493483, 4) -> "0.9505".
/// Rounding is half-away-from-zero on the scaled integer, so the result is
/// platform-independent (no double formatting involved).
inline std::string rat_to_decimal(const Rat& q, unsigned places) {
    Int scale = 1;
    for (unsigned i = 0; i < places; ++i) scale *= 10;
    Int num = numerator(q) * scale * 2;
    Int den = denominator(q);
    bool neg = num < 0;
    if (neg) num = -num;
    Int scaled = (num / den + 1) / 2;  // round(|q|*scale) half away from zero
    Int whole = scaled / scale;
    Int frac = scaled % scale;
    std::string fs = frac.str();
    while (fs.size() < places) fs.insert(fs.begin(), '0');
    std::string out = (neg && scaled != 0 ? "-" : "") + whole.str();
    if (places > 0) out += "." + fs;
    return out;
}

}  // namespace gfc

#endif
