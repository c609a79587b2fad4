#pragma once

// Integer-coefficient polynomial kernels shared by gcd, Sturm sequences and
// fraction-free elimination. Not part of the public surface.

#include "acyclic/poly.hpp"

#include <vector>

namespace acyclic::detail {

/// Coefficients from degree 0 upward, trimmed (empty = zero).
using ZPoly = std::vector<Integer>;

void trim(ZPoly& p);
inline int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

/// Least common multiple of the coefficient denominators of p (1 for zero).
Integer denominator_lcm(const Poly& p);

/// Returns scale * p as an integer polynomial; scale must clear denominators.
ZPoly scaled_to_integer(const Poly& p, const Integer& scale);

/// p / denom as a rational polynomial.
Poly to_rational(const ZPoly& p, const Integer& denom = 1);

Integer content(const ZPoly& p);  // nonnegative gcd of coefficients
ZPoly primitive_part(const ZPoly& p);  // sign of leading coefficient kept

ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);

/// a * b - c * d in one pass (the Bareiss update numerator).
ZPoly cross(const ZPoly& a, const ZPoly& b, const ZPoly& c, const ZPoly& d);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b. b nonzero.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);

/// Exact division a / b in Z[x]; throws std::domain_error when inexact.
ZPoly exact_divide(const ZPoly& a, const ZPoly& b);

/// Sign of p at a rational point, using integer arithmetic only.
int sign_at(const ZPoly& p, const Rational& at);

}  // namespace acyclic::detail
