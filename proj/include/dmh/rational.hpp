#pragma once

// Arbitrary-precision integers and rationals (GMP-backed).

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dmh {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

/// Canonical "p/q" form, or "p" when q = 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Exact power for a possibly negative exponent (base must be nonzero then).
Rational pow(const Rational& base, long exponent);

}  // namespace dmh
