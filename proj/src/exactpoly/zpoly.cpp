#include "acyclic/detail/zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace acyclic::detail {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer denominator_lcm(const Poly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

ZPoly scaled_to_integer(const Poly& p, const Integer& scale) {
  ZPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Integer v = scale * c.get_num();
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_den_mpz_t());
    out.push_back(std::move(v));
  }
  return out;
}

Poly to_rational(const ZPoly& p, const Integer& denom) {
  std::vector<Rational> cs;
  cs.reserve(p.size());
  for (const auto& c : p) {
    Rational r(c, denom);
    r.canonicalize();
    cs.push_back(std::move(r));
  }
  return Poly(std::move(cs));
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.empty()) return {};
  Integer g = content(p);
  if (g == 1) return p;
  ZPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(out[i].get_mpz_t(), p[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(out);
  return out;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

ZPoly cross(const ZPoly& a, const ZPoly& b, const ZPoly& c, const ZPoly& d) {
  std::size_t len = 0;
  if (!a.empty() && !b.empty()) len = a.size() + b.size() - 1;
  if (!c.empty() && !d.empty()) len = std::max(len, c.size() + d.size() - 1);
  ZPoly out(len);
  if (!a.empty() && !b.empty())
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  if (!c.empty() && !d.empty())
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      for (std::size_t j = 0; j < d.size(); ++j) mpz_submul(out[i + j].get_mpz_t(), c[i].get_mpz_t(), d[j].get_mpz_t());
    }
  trim(out);
  return out;
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("pseudo_remainder: zero divisor");
  ZPoly r = a;
  const int db = degree(b);
  const Integer& lb = b.back();
  int steps = std::max(degree(a) - db + 1, 0);
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    Integer lr = r.back();
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) mpz_submul(r[shift + j].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
    trim(r);
    --steps;
  }
  if (steps > 0 && !r.empty()) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
    for (auto& c : r) c *= f;
  }
  return r;
}

ZPoly exact_divide(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("exact_divide: zero divisor");
  if (a.empty()) return {};
  const int db = degree(b);
  if (degree(a) < db) throw std::domain_error("exact_divide: inexact");
  ZPoly r = a;
  ZPoly q(static_cast<std::size_t>(degree(a) - db + 1));
  const Integer& lb = b.back();
  for (int k = degree(a) - db; k >= 0; --k) {
    Integer& top = r[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw std::domain_error("exact_divide: inexact");
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    q[k] = std::move(c);
  }
  trim(r);
  if (!r.empty()) throw std::domain_error("exact_divide: inexact");
  trim(q);
  return q;
}

int sign_at(const ZPoly& p, const Rational& at) {
  if (p.empty()) return 0;
  // Homogenized Horner: q^d * p(num/q) with q > 0 has the sign of p(at).
  const Integer& num = at.get_num();
  const Integer& den = at.get_den();
  Integer acc = p.back();
  Integer den_pow = den;
  for (int i = degree(p) - 1; i >= 0; --i) {
    acc *= num;
    mpz_addmul(acc.get_mpz_t(), p[static_cast<std::size_t>(i)].get_mpz_t(), den_pow.get_mpz_t());
    den_pow *= den;
  }
  return sgn(acc);
}

}  // namespace acyclic::detail
