#ifndef POLYHODGE_RATIONAL_HPP
#define POLYHODGE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace polyhodge {

// All arithmetic in the library is exact. Rationals are GMP's canonical
// mpq_class (denominator > 0, gcd(num, den) = 1); integers are mpz_class.
using Rational = mpq_class;
using Integer = mpz_class;

using RatVec = std::vector<Rational>;
using IntVec = std::vector<Integer>;

/// Canonical fraction from numerator and denominator. mpq_class's two-value
/// constructor skips canonicalization, so always build fractions through this.
inline Rational frac(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}
inline Rational frac(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parse "p/q", plain integers, and decimal strings like "-1.25" exactly.
Rational rational_from_string(const std::string& text);

/// Render as "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational& value);

inline Rational dot(const RatVec& a, const RatVec& b) {
    Rational acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace polyhodge

#endif
