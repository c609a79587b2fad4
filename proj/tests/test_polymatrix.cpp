#include "acyclic/poly_matrix.hpp"
#include "acyclic/smith.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

using namespace acyclic;
using acyclic::testing::Gen;

namespace {

Poly P(const char* s) { return parse_poly(s); }

PolyMatrix diag(const std::vector<Poly>& d) {
  PolyMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

RatMatrix rat_diag(const std::vector<int>& d) {
  RatMatrix a(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) a(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return a;
}

// Product of random elementary operations: row additions with polynomial
// multipliers, swaps, and nonzero constant scalings.
PolyMatrix random_unimodular(Gen& gen, int n, int steps) {
  PolyMatrix u = PolyMatrix::identity(n);
  for (int s = 0; s < steps; ++s) {
    PolyMatrix e = PolyMatrix::identity(n);
    const int i = gen.uniform(0, n - 1);
    int j = gen.uniform(0, n - 1);
    switch (gen.uniform(0, 2)) {
      case 0:
        if (j == i) j = (i + 1) % n;
        e(i, j) = gen.poly(1, 3, 2);
        break;
      case 1:
        e(i, i) = Poly{};
        e(j, j) = Poly{};
        e(i, j) = Poly::constant(1);
        e(j, i) = Poly::constant(1);
        if (i == j) e(i, i) = Poly::constant(1);
        break;
      default: {
        Rational c = gen.small_rational(3, 2);
        if (c == 0) c = 2;
        e(i, i) = Poly::constant(c);
      }
    }
    u = e * u;
  }
  return u;
}

void check_snf_invariants(const PolyMatrix& m, const SnfResult& snf) {
  REQUIRE(snf.has_witnesses());
  CHECK(snf.P * m * snf.Q == snf.S);
  CHECK(snf.S.is_diagonal());
  const Poly dp = det(snf.P);
  const Poly dq = det(snf.Q);
  CHECK((dp.is_constant() && !dp.is_zero()));
  CHECK((dq.is_constant() && !dq.is_zero()));
  const auto& e = snf.invariant_factors;
  bool seen_zero = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].is_zero()) {
      seen_zero = true;
      continue;
    }
    CHECK_FALSE(seen_zero);
    CHECK(e[i].is_monic());
    if (i + 1 < e.size()) CHECK(divides(e[i], e[i + 1]));
  }
}

}  // namespace

TEST_CASE("characteristic matrix") {
  RatMatrix zero(1, 1);
  CHECK(characteristic_matrix(zero)(0, 0) == P("x"));
  const PolyMatrix d = characteristic_matrix(rat_diag({1, 2}));
  CHECK(d == diag({P("x - 1"), P("x - 2")}));
  CHECK_THROWS_AS(characteristic_matrix(RatMatrix(2, 3)), std::invalid_argument);

  const PolyMatrix m = characteristic_matrix(testing::example36_matrix());
  CHECK(m.rows() == 10);
  CHECK(m.is_symmetric());
  CHECK(m(0, 3) == P("-1"));
  CHECK(m(5, 2) == P("-1"));
  CHECK(m(0, 1).is_zero());
  CHECK(m(6, 6) == P("x"));
}

TEST_CASE("determinant") {
  CHECK(det(characteristic_matrix(rat_diag({1, 2}))) == P("x^2 - 3x + 2"));
  CHECK(det(characteristic_matrix(testing::example36_matrix())) == P("x^10 - 9x^8 + 24x^6 - 20x^4"));
  PolyMatrix z(3, 3);
  z(0, 0) = P("x");
  z(1, 2) = P("x^2 + 1");
  CHECK(det(z).is_zero());
  CHECK(det(PolyMatrix(0, 0)) == P("1"));
}

TEST_CASE("rational matrices") {
  const RatMatrix a = RatMatrix::from_rows({{2, 1}, {1, 1}});
  CHECK(determinant(a) == 1);
  CHECK(a * inverse(a) == RatMatrix::identity(2));
  CHECK_THROWS_AS(inverse(RatMatrix::from_rows({{1, 2}, {2, 4}})), std::domain_error);
}

TEST_CASE("cycle cover determinant") {
  PolyMatrix one(1, 1);
  one(0, 0) = P("x^2 + 3");
  CHECK(det_via_cycle_covers(one) == P("x^2 + 3"));

  PolyMatrix two(2, 2);
  two(0, 0) = P("x");
  two(0, 1) = P("2");
  two(1, 0) = P("x + 1");
  two(1, 1) = P("x - 3");
  CHECK(det_via_cycle_covers(two) == P("x") * P("x - 3") - P("2") * P("x + 1"));

  Gen gen(36);
  for (int trial = 0; trial < 200; ++trial) {
    const PolyMatrix m = gen.poly_matrix(5, 5, 1);
    CHECK(det_via_cycle_covers(m) == det(m));
  }
  for (int n = 0; n <= 6; ++n) {
    const PolyMatrix m = gen.poly_matrix(n, n, 2);
    CHECK(det_via_cycle_covers(m) == det(m));
  }
  CHECK_THROWS_AS(det_via_cycle_covers(PolyMatrix::identity(9)), SizeCapExceeded);
}

TEST_CASE("submatrices") {
  const PolyMatrix m = characteristic_matrix(testing::example36_matrix());
  const PolyMatrix empty = principal_submatrix(m, std::vector<int>{});
  CHECK(empty.rows() == 0);
  CHECK(det(empty) == P("1"));

  const std::vector<int> rj{4}, ci{2};
  const PolyMatrix minor = submatrix(m, rj, ci);
  CHECK(minor.rows() == 9);
  CHECK(minor.cols() == 9);

  const PolyMatrix b6 = principal_submatrix(m, std::vector<int>{5});
  CHECK(b6.rows() == 1);
  CHECK(b6(0, 0) == P("x"));

  const std::vector<int> keep{3, 0, 4};
  const PolyMatrix b = principal_submatrix(m, keep);
  CHECK(b(0, 1) == m(3, 0));
  CHECK(b(1, 2) == m(0, 4));

  const std::vector<int> bad{10};
  CHECK_THROWS_AS(submatrix(m, bad, rj), std::out_of_range);
  CHECK_THROWS_AS(principal_submatrix(m, bad), std::out_of_range);
}

TEST_CASE("matrix text formats round-trip") {
  Gen gen(7);
  const PolyMatrix m = gen.poly_matrix(3, 2, 3);
  CHECK(parse_poly_matrix(format_poly_matrix(m)) == m);
  const RatMatrix a = gen.symmetric(4);
  CHECK(parse_rat_matrix(format_rat_matrix(a)) == a);
  CHECK(parse_rat_matrix("# comment\n2\n1 1/2\n\n1/2 -3\n") == RatMatrix::from_rows({{1, Rational(1, 2)}, {Rational(1, 2), -3}}));
  CHECK_THROWS_AS(parse_rat_matrix("2\n1 2\n3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly_matrix("1 2\nx\n"), std::invalid_argument);
}

TEST_CASE("smith normal form examples") {
  const SnfResult a = smith_normal_form(characteristic_matrix(rat_diag({1, 2})));
  CHECK(a.S == diag({P("1"), P("x^2 - 3x + 2")}));

  const SnfResult b = smith_normal_form(characteristic_matrix(rat_diag({3, 3})));
  CHECK(b.S == diag({P("x - 3"), P("x - 3")}));

  // e_{n-k} collects the factors of eigenvalues with multiplicity > k:
  // <1,2,4,2,1> on -sqrt5, -sqrt2, 0, sqrt2, sqrt5.
  const PolyMatrix m = characteristic_matrix(testing::example36_matrix());
  const SnfResult c = smith_normal_form(m);
  check_snf_invariants(m, c);
  const std::vector<Poly> expected{P("1"), P("1"), P("1"), P("1"), P("1"),    P("1"),
                                   P("x"), P("x"), P("x^3 - 2x"), P("x^5 - 7x^3 + 10x")};
  CHECK(c.invariant_factors == expected);
}

TEST_CASE("determinantal divisors") {
  const PolyMatrix d = characteristic_matrix(rat_diag({1, 2}));
  CHECK(determinantal_divisor(d, 1, DivisorStrategy::BruteForce) == P("1"));
  CHECK(determinantal_divisor(d, 1) == P("1"));
  CHECK(determinantal_divisor(d, 2) == P("x^2 - 3x + 2"));
  CHECK_THROWS_AS(determinantal_divisor(d, 3), std::out_of_range);
  CHECK_THROWS_AS(determinantal_divisor(d, 0, DivisorStrategy::BruteForce), std::out_of_range);

  const PolyMatrix s = characteristic_matrix(rat_diag({-1, -1}));
  CHECK(determinantal_divisor(s, 1, DivisorStrategy::BruteForce) == P("x + 1"));
  CHECK(determinantal_divisor(s, 2, DivisorStrategy::BruteForce) == P("x^2 + 2x + 1"));

  CHECK(determinantal_divisor(PolyMatrix(2, 2), 1, DivisorStrategy::BruteForce).is_zero());
  CHECK(determinantal_divisor(PolyMatrix(2, 2), 2).is_zero());

  const PolyMatrix m = characteristic_matrix(testing::example36_matrix());
  const Poly d9 = P("x^3") * P("x^2 - 2");
  const Poly d10 = P("x^4") * pow(P("x^2 - 2"), 2) * P("x^2 - 5");
  CHECK(determinantal_divisor(m, 9) == d9);
  CHECK(determinantal_divisor(m, 10) == d10);
  // 100 minors of order 9; cheap enough to run uncapped as an oracle.
  CHECK(minor_gcd_serial(m, 9) == d9);
  CHECK(minor_gcd_parallel(m, 9) == d9);
  CHECK_THROWS_AS(determinantal_divisor(m, 9, DivisorStrategy::BruteForce), SizeCapExceeded);
}

TEST_CASE("brute-force cap honours the environment override") {
  const PolyMatrix m = characteristic_matrix(testing::example36_matrix());
  ::setenv("ACYCLIC_SPECTRA_MAX_N", "10", 1);
  CHECK(determinantal_divisor(m, 10, DivisorStrategy::BruteForce) == det(m));
  ::unsetenv("ACYCLIC_SPECTRA_MAX_N");
  CHECK_THROWS_AS(determinantal_divisor(m, 10, DivisorStrategy::BruteForce), SizeCapExceeded);
}

TEST_CASE("invariant factor multiplicities") {
  const auto ex = invariant_factor_multiplicities(smith_normal_form(characteristic_matrix(testing::example36_matrix())));
  const std::vector<MultiplicityClass> expected{{1, P("x^2 - 5")}, {2, P("x^2 - 2")}, {4, P("x")}};
  CHECK(ex == expected);

  const auto simple = invariant_factor_multiplicities(smith_normal_form(characteristic_matrix(rat_diag({1, 2}))));
  CHECK(simple == std::vector<MultiplicityClass>{{1, P("x^2 - 3x + 2")}});

  const auto repeated = invariant_factor_multiplicities(smith_normal_form(characteristic_matrix(rat_diag({4, 4}))));
  CHECK(repeated == std::vector<MultiplicityClass>{{2, P("x - 4")}});

  CHECK_THROWS_AS(invariant_factor_multiplicities(smith_normal_form(PolyMatrix(2, 2))), std::invalid_argument);
}

TEST_CASE("property: snf round trip and divisibility chain") {
  Gen gen(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = gen.uniform(1, 6);
    const int cols = trial % 4 == 0 ? gen.uniform(1, 6) : rows;
    const PolyMatrix m = gen.poly_matrix(rows, cols, 2, 4, 2);
    const SnfResult snf = smith_normal_form(m);
    check_snf_invariants(m, snf);
  }
}

TEST_CASE("property: determinantal divisors are preserved") {
  Gen gen(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = gen.uniform(1, 5);
    const PolyMatrix m = gen.poly_matrix(n, n, 1, 3, 2);
    const SnfResult snf = smith_normal_form(m);
    for (int k = 1; k <= n; ++k) {
      const Poly brute = minor_gcd_serial(m, k);
      CHECK(determinantal_divisor(snf, k) == brute);
      CHECK(minor_gcd_serial(snf.S, k) == brute);
      CHECK(minor_gcd_parallel(m, k) == brute);
    }
  }
}

TEST_CASE("property: product of invariant factors is the characteristic polynomial") {
  Gen gen(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = gen.uniform(1, 8);
    const RatMatrix a = gen.symmetric(n);
    const PolyMatrix m = characteristic_matrix(a);
    const SnfResult snf = smith_normal_form(m);
    Poly prod = Poly::constant(1);
    for (const auto& e : snf.invariant_factors) prod *= e;
    CHECK(prod == det(m));
    CHECK(prod.degree() == n);
  }
}

TEST_CASE("property: unimodular invariance") {
  Gen gen(314);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = gen.uniform(2, 5);
    const PolyMatrix m = characteristic_matrix(gen.symmetric(n, 2, 1));
    const PolyMatrix u = random_unimodular(gen, n, 6);
    const PolyMatrix v = random_unimodular(gen, n, 6);
    const PolyMatrix w = u * m * v;
    for (int k = 1; k <= n; ++k) CHECK(minor_gcd_serial(w, k) == minor_gcd_serial(m, k));
  }
}

TEST_CASE("property: factor placement on diagonal matrices") {
  // xI - D with a value of multiplicity m among n: (x - l) does not divide
  // Delta_k for k <= n - m and divides it exactly k - n + m times above.
  Gen gen(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = gen.uniform(2, 6);
    std::vector<int> values;
    for (int i = 0; i < n; ++i) values.push_back(gen.uniform(-2, 2));
    const SnfResult snf = smith_normal_form(characteristic_matrix(rat_diag(values)));
    for (int lambda = -2; lambda <= 2; ++lambda) {
      const int mult = static_cast<int>(std::count(values.begin(), values.end(), lambda));
      for (int k = 1; k <= n; ++k) {
        const int expected = k <= n - mult ? 0 : k - n + mult;
        CHECK(exact_power(determinantal_divisor(snf, k), Rational(lambda)) == expected);
        CHECK(exact_power(snf.invariant_factors[k - 1], Rational(lambda)) == (k > n - mult ? 1 : 0));
      }
    }
  }
}
