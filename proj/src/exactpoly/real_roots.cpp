#include "acyclic/real_roots.hpp"

#include "acyclic/detail/zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace acyclic {

using detail::ZPoly;

namespace {

ZPoly integer_primitive(const Poly& p) {
  return detail::primitive_part(detail::scaled_to_integer(p, detail::denominator_lcm(p)));
}

}  // namespace

SturmSequence::SturmSequence(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of zero");
  chain_.push_back(integer_primitive(p));
  if (p.degree() < 1) return;
  chain_.push_back(integer_primitive(p.derivative()));
  for (;;) {
    const ZPoly& a = chain_[chain_.size() - 2];
    const ZPoly& b = chain_.back();
    ZPoly r = detail::pseudo_remainder(a, b);
    if (r.empty()) break;
    // prem = lc(b)^e * rem; flip so the stored term has the sign of -rem.
    const int e = detail::degree(a) - detail::degree(b) + 1;
    const bool scale_negative = sgn(b.back()) < 0 && (e % 2 == 1);
    r = detail::primitive_part(r);
    if (!scale_negative)
      for (auto& c : r) c = -c;
    chain_.push_back(std::move(r));
  }
}

int SturmSequence::variations(const Rational& at) const {
  int count = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = detail::sign_at(q, at);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

int SturmSequence::sign_at(const Rational& at) const { return detail::sign_at(chain_.front(), at); }

Rational cauchy_bound(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("root bound of zero");
  Rational m = 0;
  const Rational lc = abs_value(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs_value(p.coeff(i)) / lc));
  return m + 1;
}

namespace {

struct Pending {
  Rational lo;
  Rational hi;
  int roots;  // distinct roots strictly inside (lo, hi)
};

/// Shrinks an interval holding exactly one root until neither endpoint is a
/// root; may discover the root exactly.
Interval clean_endpoints(const SturmSequence& s, Rational lo, Rational hi) {
  while (s.sign_at(lo) == 0 || s.sign_at(hi) == 0) {
    Rational mid = (lo + hi) / 2;
    if (s.sign_at(mid) == 0) return {mid, mid};
    if (s.count(lo, mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

Interval bisect_to_width(const SturmSequence& s, Interval iv, const Rational& max_width) {
  while (!iv.is_exact() && iv.hi - iv.lo > max_width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    const int sm = s.sign_at(mid);
    if (sm == 0) return {mid, mid};
    if (s.sign_at(iv.lo) != sm)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

}  // namespace

Interval refine(const Poly& p, Interval iv, const Rational& max_width) {
  if (iv.is_exact()) return iv;
  SturmSequence s(p);
  return bisect_to_width(s, iv, max_width);
}

std::vector<Interval> isolate_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  if (!is_squarefree(p)) throw std::invalid_argument("isolate_real_roots: input is not square-free");
  std::vector<Interval> out;
  if (p.degree() < 1) return out;

  const SturmSequence s(p);
  const ZPoly zp = integer_primitive(p);
  const Rational lc = abs(zp.back());
  const Rational bound = cauchy_bound(p);

  std::vector<Pending> stack{{-bound, bound, s.count(-bound, bound)}};
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.roots == 0) continue;
    if (cur.roots == 1) {
      Interval iv = clean_endpoints(s, cur.lo, cur.hi);
      if (!iv.is_exact()) {
        // A rational root u/v has v | lc, so lc * root is an integer. Once the
        // interval is narrower than 1/lc there is at most one candidate.
        iv = bisect_to_width(s, iv, Rational(1) / (lc + 1));
        if (!iv.is_exact()) {
          const Integer cand = floor_of(lc * iv.hi);
          const Rational r = Rational(cand) / lc;
          if (iv.lo < r && r < iv.hi && s.sign_at(r) == 0) iv = {r, r};
        }
      }
      out.push_back(std::move(iv));
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    const int left_incl = s.count(cur.lo, mid);  // roots in (lo, mid]
    const bool mid_root = s.sign_at(mid) == 0;
    if (mid_root) out.push_back({mid, mid});
    const int left = left_incl - (mid_root ? 1 : 0);
    stack.push_back({mid, cur.hi, cur.roots - left_incl});
    stack.push_back({cur.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  return out;
}

}  // namespace acyclic
