#pragma once

// Matrices over Q and Q[x]. Indices are 0-based; graph-facing code converts
// 1-based vertex labels at its boundary.

#include "acyclic/exec.hpp"
#include "acyclic/poly.hpp"

#include <span>
#include <string>
#include <vector>

namespace acyclic {

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  static RatMatrix identity(int n);
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Rational& operator()(int i, int j) { return data_[index(i, j)]; }
  const Rational& operator()(int i, int j) const { return data_[index(i, j)]; }

  RatMatrix transpose() const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Gaussian elimination over Q. Throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& a);
Rational determinant(const RatMatrix& a);

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols);
  static PolyMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_diagonal() const;

  Poly& operator()(int i, int j) { return data_[index(i, j)]; }
  const Poly& operator()(int i, int j) const { return data_[index(i, j)]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Poly> data_;
};

/// xI - A. Throws std::invalid_argument for non-square A.
PolyMatrix characteristic_matrix(const RatMatrix& a);

/// Determinant by fraction-free (Bareiss) elimination. Rows are first scaled
/// to integer coefficients so every intermediate is an integer polynomial and
/// each division is exact. The 0x0 determinant is 1.
Poly det(const PolyMatrix& m);

/// Determinant as the signed sum over all covers of the vertex set by
/// disjoint directed cycles of the digraph of m (loops included). Exhaustive;
/// throws SizeCapExceeded above brute_force_cap(kCycleCoverCap).
Poly det_via_cycle_covers(const PolyMatrix& m);

/// M(rows, cols): the listed rows and columns removed, order preserved.
/// Throws std::out_of_range for bad indices.
PolyMatrix submatrix(const PolyMatrix& m, std::span<const int> delete_rows, std::span<const int> delete_cols);

/// M[keep]: rows and columns retained in the given order.
PolyMatrix principal_submatrix(const PolyMatrix& m, std::span<const int> keep);
RatMatrix principal_submatrix(const RatMatrix& m, std::span<const int> keep);

/// Text format: "rows cols" then one polynomial per line, row-major.
PolyMatrix parse_poly_matrix(const std::string& text);
std::string format_poly_matrix(const PolyMatrix& m);

/// Text format: "n" then n lines of n rationals separated by whitespace.
RatMatrix parse_rat_matrix(const std::string& text);
std::string format_rat_matrix(const RatMatrix& m);

}  // namespace acyclic
