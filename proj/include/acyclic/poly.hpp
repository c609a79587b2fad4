#pragma once

// Dense univariate polynomials over Q.

#include "acyclic/rational.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace acyclic {

/// Coefficients are stored from degree 0 upward with a nonzero leading
/// coefficient; the zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  static Poly x() { return monomial(1, 1); }
  /// x - a
  static Poly linear_root(const Rational& a);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  /// Coefficient of x^i (zero outside the stored range).
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  Rational eval(const Rational& at) const;
  Poly derivative() const;
  /// Divides by the leading coefficient; zero stays zero.
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws std::domain_error when the divisor is zero.
DivRem divrem(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // quotient only
Poly operator%(const Poly& a, const Poly& b);  // remainder only

/// Exact quotient; throws std::domain_error if b does not divide a.
Poly exact_quotient(const Poly& a, const Poly& b);

Poly pow(const Poly& p, int e);

/// Monic gcd. gcd(p, 0) = monic(p). Throws std::invalid_argument when both
/// are zero. Runs a primitive remainder sequence over Z[x].
Poly gcd(const Poly& a, const Poly& b);

/// True when d | p (every polynomial divides 0; 0 divides only 0).
bool divides(const Poly& d, const Poly& p);

/// Largest k with (x - a)^k | p. Throws std::invalid_argument for p = 0.
int exact_power(const Poly& p, const Rational& a);

/// Largest k with g^k | p for nonconstant g; throws for p = 0.
int exact_power(const Poly& p, const Poly& g);

struct SquareFreeFactor {
  Poly factor;       // monic, square-free
  int multiplicity;  // the Yun index i of factor^i
  friend bool operator==(const SquareFreeFactor&, const SquareFreeFactor&) = default;
};

/// Yun's algorithm: p = lc(p) * prod factor^multiplicity with pairwise
/// coprime monic square-free factors, ordered by ascending multiplicity.
/// Constant factors are omitted. Throws std::invalid_argument for p = 0.
std::vector<SquareFreeFactor> squarefree_decomposition(const Poly& p);

/// Product of the square-free factors (monic radical of p).
Poly squarefree_part(const Poly& p);

bool is_squarefree(const Poly& p);

/// Text syntax: "3/2*x^2 - x + 1/3". Only the variable x; whitespace is
/// ignored; "2x" and "2*x" are both accepted. Printing uses descending
/// degree with "*" between coefficient and power and round-trips.
Poly parse_poly(std::string_view text);
std::string to_string(const Poly& p);

}  // namespace acyclic
