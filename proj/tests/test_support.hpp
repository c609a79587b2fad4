#pragma once

// Shared generators and fixtures for the property tests.

#include "acyclic/poly.hpp"
#include "acyclic/poly_matrix.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace acyclic::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Rational small_rational(int max_num = 5, int max_den = 3) {
    Rational r(uniform(-max_num, max_num), uniform(1, max_den));
    r.canonicalize();
    return r;
  }

  Poly poly(int max_degree, int max_num = 5, int max_den = 3) {
    const int d = uniform(-1, max_degree);
    std::vector<Rational> cs;
    for (int i = 0; i <= d; ++i) cs.push_back(small_rational(max_num, max_den));
    return Poly(std::move(cs));
  }

  PolyMatrix poly_matrix(int rows, int cols, int max_degree, int max_num = 5, int max_den = 3) {
    PolyMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = poly(max_degree, max_num, max_den);
    return m;
  }

  RatMatrix symmetric(int n, int max_num = 5, int max_den = 3) {
    RatMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) a(i, j) = a(j, i) = small_rational(max_num, max_den);
    return a;
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

/// The 10x10 acyclic matrix realizing <1,2,4,2,1> on the tree with edges
/// 1-4 1-5 1-6 2-6 2-7 2-8 3-6 3-9 3-10 (zero diagonal, unit weights).
inline RatMatrix example36_matrix() {
  RatMatrix a(10, 10);
  const int edges[][2] = {{1, 4}, {1, 5}, {1, 6}, {2, 6}, {2, 7}, {2, 8}, {3, 6}, {3, 9}, {3, 10}};
  for (const auto& e : edges) a(e[0] - 1, e[1] - 1) = a(e[1] - 1, e[0] - 1) = 1;
  return a;
}

}  // namespace acyclic::testing
