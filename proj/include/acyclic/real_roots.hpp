#pragma once

#include "acyclic/poly.hpp"

#include <vector>

namespace acyclic {

/// Isolating interval for one real root. Either degenerate (lo == hi, the
/// root is exactly lo) or open (lo, hi) with neither endpoint a root.
struct Interval {
  Rational lo;
  Rational hi;

  bool is_exact() const { return lo == hi; }
  bool contains(const Rational& r) const { return is_exact() ? r == lo : (lo < r && r < hi); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sturm sequence p, p', -rem(...), ... kept as primitive integer
/// polynomials scaled by positive constants (signs are all that matter).
class SturmSequence {
 public:
  explicit SturmSequence(const Poly& p);

  /// Sign variations at a point, zeros skipped.
  int variations(const Rational& at) const;
  /// Number of distinct real roots in (a, b].
  int count(const Rational& a, const Rational& b) const;
  int sign_at(const Rational& at) const;

 private:
  std::vector<std::vector<Integer>> chain_;
};

/// 1 + max |c_i / c_lead|; every real root lies strictly inside (-B, B).
Rational cauchy_bound(const Poly& p);

/// Disjoint isolating intervals sorted ascending, one per distinct real
/// root. Rational roots come back as exact degenerate intervals. Throws
/// std::invalid_argument unless p is nonzero and square-free.
std::vector<Interval> isolate_real_roots(const Poly& p);

/// Bisects an open isolating interval of a square-free p until its width is
/// at most max_width (the result still isolates the same root).
Interval refine(const Poly& p, Interval iv, const Rational& max_width);

}  // namespace acyclic
