#include "acyclic/poly.hpp"

#include "acyclic/detail/zpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace acyclic {

namespace {
const Rational kZero{0};
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, int degree) {
  if (c == 0) return {};
  std::vector<Rational> cs(static_cast<std::size_t>(degree) + 1);
  cs.back() = c;
  return Poly(std::move(cs));
}

Poly Poly::linear_root(const Rational& a) { return Poly({Rational(-a), Rational(1)}); }

const Rational& Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const { return is_zero() ? kZero : coeffs_.back(); }

Rational Poly::eval(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> cs(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) cs[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(cs));
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  Poly out = *this;
  const Rational lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(cs));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const int db = b.degree();
  const Rational& lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational c = r[static_cast<std::size_t>(k + db)] / lb;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= c * b.coeff(j);
    q[static_cast<std::size_t>(k)] = c;
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).remainder; }

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_quotient: divisor does not divide");
  return q;
}

Poly pow(const Poly& p, int e) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::constant(1);
  using namespace detail;
  ZPoly u = primitive_part(scaled_to_integer(a, denominator_lcm(a)));
  ZPoly v = primitive_part(scaled_to_integer(b, denominator_lcm(b)));
  if (degree(u) < degree(v)) std::swap(u, v);
  while (!v.empty()) {
    ZPoly r = primitive_part(pseudo_remainder(u, v));
    u = std::move(v);
    v = std::move(r);
    if (degree(v) == 0) return Poly::constant(1);
  }
  return to_rational(u).monic();
}

bool divides(const Poly& d, const Poly& p) {
  if (p.is_zero()) return true;
  if (d.is_zero()) return false;
  return divrem(p, d).remainder.is_zero();
}

int exact_power(const Poly& p, const Rational& a) {
  if (p.is_zero()) throw std::invalid_argument("exact_power of the zero polynomial");
  std::vector<Rational> cs(p.coeffs().begin(), p.coeffs().end());
  int k = 0;
  while (cs.size() > 1) {
    // Synthetic division by (x - a).
    std::vector<Rational> q(cs.size() - 1);
    Rational carry = 0;
    for (std::size_t i = cs.size(); i-- > 1;) {
      carry = carry * a + cs[i];
      q[i - 1] = carry;
    }
    if (carry * a + cs[0] != 0) break;
    cs = std::move(q);
    ++k;
  }
  return k;
}

int exact_power(const Poly& p, const Poly& g) {
  if (p.is_zero()) throw std::invalid_argument("exact_power of the zero polynomial");
  if (g.is_constant()) throw std::invalid_argument("exact_power by a constant");
  int k = 0;
  Poly rest = p;
  for (;;) {
    auto [q, r] = divrem(rest, g);
    if (!r.is_zero()) return k;
    rest = std::move(q);
    ++k;
  }
}

std::vector<SquareFreeFactor> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
  std::vector<SquareFreeFactor> out;
  if (p.is_constant()) return out;
  const Poly f = p.monic();
  const Poly fp = f.derivative();
  const Poly a0 = gcd(f, fp);
  Poly b = exact_quotient(f, a0);
  Poly c = exact_quotient(fp, a0);
  Poly d = c - b.derivative();
  for (int i = 1; !b.is_constant(); ++i) {
    Poly a = gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
    if (!a.is_constant()) out.push_back({a.monic(), i});
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  Poly out = Poly::constant(1);
  for (const auto& f : squarefree_decomposition(p)) out *= f.factor;
  return out;
}

bool is_squarefree(const Poly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).is_constant();
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  Poly parse() {
    if (s_.empty()) fail("empty polynomial");
    Poly acc;
    bool first = true;
    while (pos_ < s_.size()) {
      int sgn = 1;
      if (peek() == '+' || peek() == '-') {
        sgn = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Poly t = term();
      if (sgn < 0) t = -t;
      acc += t;
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + why + " in '" + s_ + "'");
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(s_[pos_++]);
    return out;
  }

  Poly term() {
    Rational coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      if (peek() == '/') {
        ++pos_;
        den = digits();
        if (den.empty()) fail("missing denominator");
      }
      coef = parse_rational(num + "/" + den);
      have_coef = true;
      if (peek() == '*') {
        ++pos_;
        if (peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    if (peek() != 'x') {
      if (!have_coef) fail("expected a coefficient or 'x'");
      return Poly::constant(coef);
    }
    ++pos_;
    int exponent = 1;
    if (peek() == '^') {
      ++pos_;
      std::string e = digits();
      if (e.empty()) fail("missing exponent");
      exponent = std::stoi(e);
    }
    return Poly::monomial(coef, exponent);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeff(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    const Rational mag = abs_value(c);
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

}  // namespace acyclic
