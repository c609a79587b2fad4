#include "acyclic/poly.hpp"
#include "acyclic/real_roots.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <stdexcept>

using namespace acyclic;

namespace {

Poly P(const char* s) { return parse_poly(s); }

}  // namespace

TEST_CASE("rational parsing canonicalizes") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational(" -2 ") == Rational(-2));
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
  CHECK(P("x - 1") * P("x - 2") == P("x^2 - 3x + 2"));

  auto [q, r] = divrem(P("x^2 - 2"), P("x"));
  CHECK(q == P("x"));
  CHECK(r == P("-2"));

  CHECK_THROWS_AS(divrem(P("x"), Poly{}), std::domain_error);

  // Expanded by repeated multiplication; cross-checked by evaluation below.
  const Poly prod = pow(P("x^2 - 2"), 2) * P("x^2 - 5") * pow(P("x"), 4);
  CHECK(prod == P("x^10 - 9x^8 + 24x^6 - 20x^4"));
  for (int at : {2, 3, 5}) {
    const Rational a(at);
    const Rational factored = (a * a - 2) * (a * a - 2) * (a * a - 5) * a * a * a * a;
    CHECK(prod.eval(a) == factored);
  }
}

TEST_CASE("gcd") {
  CHECK(gcd(P("x - 1"), P("x - 2")) == P("1"));
  const Poly g = gcd(P("x^3 - 4x^2 + 5x - 2"), P("x^2 - 4x + 3"));  // (x-1)^2(x-2), (x-1)(x-3)
  CHECK(g == P("x - 1"));
  CHECK(divides(g, P("x^3 - 4x^2 + 5x - 2")));
  CHECK(divides(g, P("x^2 - 4x + 3")));
  CHECK(gcd(P("3x^2 - 6"), Poly{}) == P("x^2 - 2"));
  CHECK_THROWS_AS(gcd(Poly{}, Poly{}), std::invalid_argument);
}

TEST_CASE("exact powers") {
  CHECK(exact_power(pow(P("x"), 4) * pow(P("x^2 - 2"), 2), Rational(0)) == 4);
  CHECK(exact_power(P("x - 5"), Rational(3)) == 0);
  CHECK(exact_power(pow(P("x - 1"), 3) * P("x + 1"), Rational(1)) == 3);
  CHECK(exact_power(pow(P("x^2 - 2"), 3) * P("x"), P("x^2 - 2")) == 3);
  CHECK_THROWS_AS(exact_power(Poly{}, Rational(0)), std::invalid_argument);
}

TEST_CASE("square-free decomposition") {
  const auto d = squarefree_decomposition(P("x^10 - 9x^8 + 24x^6 - 20x^4"));
  REQUIRE(d.size() == 3);
  CHECK(d[0] == SquareFreeFactor{P("x^2 - 5"), 1});
  CHECK(d[1] == SquareFreeFactor{P("x^2 - 2"), 2});
  CHECK(d[2] == SquareFreeFactor{P("x"), 4});

  const auto single = squarefree_decomposition(P("x^2 - 2"));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == SquareFreeFactor{P("x^2 - 2"), 1});

  const auto sq = squarefree_decomposition(pow(P("x - 1"), 2) * pow(P("x - 2"), 2));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].factor == P("x^2 - 3x + 2"));
  CHECK(sq[0].multiplicity == 2);

  CHECK_THROWS_AS(squarefree_decomposition(Poly{}), std::invalid_argument);
}

TEST_CASE("real root isolation") {
  auto roots = isolate_real_roots(P("x"));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == Interval{0, 0});

  roots = isolate_real_roots(P("x^2 - 2"));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].lo >= -2);
  CHECK(roots[0].hi <= -1);
  CHECK(roots[1].lo >= 1);
  CHECK(roots[1].hi <= 2);
  // Sturm oracle: -sqrt2 in (lo, hi) iff lo^2 > 2 > hi^2 on the negative side.
  CHECK(roots[0].lo * roots[0].lo > 2);
  CHECK(roots[0].hi * roots[0].hi < 2);
  CHECK(roots[1].lo * roots[1].lo < 2);
  CHECK(roots[1].hi * roots[1].hi > 2);

  roots = isolate_real_roots(P("x^5 - 7x^3 + 10x"));  // x(x^2-2)(x^2-5)
  REQUIRE(roots.size() == 5);
  CHECK(roots[2] == Interval{0, 0});
  auto inside_sqrt = [](const Interval& iv, int c, bool negative) {
    // positive root sqrt(c) in (lo, hi)  <=>  lo^2 < c < hi^2 (for lo >= 0)
    if (negative) return iv.hi < 0 && iv.hi * iv.hi < c && iv.lo * iv.lo > c;
    return iv.lo >= 0 && iv.lo * iv.lo < c && iv.hi * iv.hi > c;
  };
  CHECK(inside_sqrt(roots[0], 5, true));
  CHECK(inside_sqrt(roots[1], 2, true));
  CHECK(inside_sqrt(roots[3], 2, false));
  CHECK(inside_sqrt(roots[4], 5, false));
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi <= roots[i + 1].lo);

  CHECK_THROWS_AS(isolate_real_roots(P("x^2")), std::invalid_argument);
  CHECK(isolate_real_roots(P("x^2 + 1")).empty());
}

TEST_CASE("rational roots come back exact") {
  // (3x - 1)(2x + 5)(x - 7)
  const Poly p = P("3x - 1") * P("2x + 5") * P("x - 7");
  const auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == Interval{Rational(-5, 2), Rational(-5, 2)});
  CHECK(roots[1] == Interval{Rational(1, 3), Rational(1, 3)});
  CHECK(roots[2] == Interval{7, 7});
}

TEST_CASE("printer and parser round-trip") {
  CHECK(to_string(P("3/2*x^2 - x + 1/3")) == "3/2*x^2 - x + 1/3");
  CHECK(to_string(Poly{}) == "0");
  CHECK(to_string(P("-x^3 + 2")) == "-x^3 + 2");
  CHECK(P(" 2 x ") == P("2*x"));
  CHECK_THROWS_AS(P("x^"), std::invalid_argument);
  CHECK_THROWS_AS(P("y"), std::invalid_argument);
  CHECK_THROWS_AS(P(""), std::invalid_argument);

  testing::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const Poly p = gen.poly(6);
    CHECK(parse_poly(to_string(p)) == p);
  }
}

TEST_CASE("property: gcd divides both and is monic") {
  testing::Gen gen(2024);
  for (int i = 0; i < 150; ++i) {
    const Poly common = gen.poly(2);
    const Poly a = gen.poly(4) * common;
    const Poly b = gen.poly(4) * common;
    if (a.is_zero() && b.is_zero()) continue;
    const Poly g = gcd(a, b);
    CHECK(g.is_monic());
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    if (!common.is_zero()) CHECK(divides(common, g));
  }
}

TEST_CASE("property: square-free decomposition reconstructs its input") {
  testing::Gen gen(77);
  for (int i = 0; i < 100; ++i) {
    Poly p = Poly::constant(gen.small_rational(4, 3) + 5);  // nonzero constant
    for (int f = 0; f < 3; ++f) p *= pow(gen.poly(2), gen.uniform(1, 3));
    if (p.is_zero()) continue;
    Poly rebuilt = Poly::constant(p.leading());
    const auto parts = squarefree_decomposition(p);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      CHECK(parts[j].factor.is_monic());
      CHECK(is_squarefree(parts[j].factor));
      for (std::size_t k = j + 1; k < parts.size(); ++k) CHECK(gcd(parts[j].factor, parts[k].factor) == P("1"));
      rebuilt *= pow(parts[j].factor, parts[j].multiplicity);
    }
    CHECK(rebuilt == p);
  }
}

TEST_CASE("property: exact_power is additive") {
  testing::Gen gen(5);
  for (int i = 0; i < 100; ++i) {
    const Rational a = gen.small_rational();
    Poly p = gen.poly(4);
    if (p.is_zero() || p.eval(a) == 0) continue;
    const int k = gen.uniform(0, 4);
    CHECK(exact_power(p * pow(Poly::linear_root(a), k), a) == k);
  }
}

TEST_CASE("property: all-real square-free polynomials isolate to their degree") {
  testing::Gen gen(31);
  for (int i = 0; i < 60; ++i) {
    Poly p = Poly::constant(1);
    int distinct = 0;
    std::vector<Rational> used;
    for (int f = 0; f < gen.uniform(1, 6); ++f) {
      const Rational r = gen.small_rational(9, 4);
      if (std::find(used.begin(), used.end(), r) != used.end()) continue;
      used.push_back(r);
      p *= Poly::linear_root(r);
      ++distinct;
    }
    // plus an irrational pair +-sqrt(c) with c not a square
    const int c = std::vector<int>{2, 3, 5, 6, 7}[gen.uniform(0, 4)];
    p *= P("x^2") - Poly::constant(c);
    distinct += 2;
    const auto roots = isolate_real_roots(p);
    REQUIRE(static_cast<int>(roots.size()) == distinct);
    int exact = 0;
    for (const auto& iv : roots) exact += iv.is_exact() ? 1 : 0;
    CHECK(exact == distinct - 2);
  }
}
