#pragma once

// Exact rational scalars. GMP's mpq_class keeps results canonical
// (lowest terms, positive denominator) after every arithmetic operation.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace acyclic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "-p", "p" (surrounding whitespace allowed). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

inline Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Smallest integer >= r / largest integer <= r.
Integer ceil_of(const Rational& r);
Integer floor_of(const Rational& r);

}  // namespace acyclic
