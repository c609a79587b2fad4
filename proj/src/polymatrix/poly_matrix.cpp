#include "acyclic/poly_matrix.hpp"

#include "acyclic/detail/zpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace acyclic {

// ---------------------------------------------------------------------------
// RatMatrix

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  RatMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
  RatMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

namespace {

// Row-reduces [a | rhs] in place; returns the determinant of a.
Rational gauss_jordan(RatMatrix& a, RatMatrix* rhs) {
  const int n = a.rows();
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      det = -det;
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      if (rhs)
        for (int j = 0; j < rhs->cols(); ++j) std::swap((*rhs)(piv, j), (*rhs)(col, j));
    }
    const Rational p = a(col, col);
    det *= p;
    for (int j = 0; j < n; ++j) a(col, j) /= p;
    if (rhs)
      for (int j = 0; j < rhs->cols(); ++j) (*rhs)(col, j) /= p;
    for (int i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (int j = 0; j < n; ++j) a(i, j) -= f * a(col, j);
      if (rhs)
        for (int j = 0; j < rhs->cols(); ++j) (*rhs)(i, j) -= f * (*rhs)(col, j);
    }
  }
  return det;
}

}  // namespace

RatMatrix inverse(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  RatMatrix work = a;
  RatMatrix inv = RatMatrix::identity(a.rows());
  if (gauss_jordan(work, &inv) == 0) throw std::domain_error("inverse of a singular matrix");
  return inv;
}

Rational determinant(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  RatMatrix work = a;
  return gauss_jordan(work, nullptr);
}

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Poly::constant(1);
  return m;
}

bool PolyMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool PolyMatrix::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  PolyMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Poly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

PolyMatrix characteristic_matrix(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("characteristic matrix of a non-square matrix");
  const int n = a.rows();
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = i == j ? Poly::linear_root(a(i, i)) : Poly::constant(-a(i, j));
  return m;
}

Poly det(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  using detail::ZPoly;
  const int n = m.rows();
  if (n == 0) return Poly::constant(1);

  // Scale each row to integer coefficients; det(m) = det(scaled) / prod(scales).
  std::vector<ZPoly> a(static_cast<std::size_t>(n) * n);
  Integer scale_product = 1;
  for (int i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (int j = 0; j < n; ++j) {
      const Integer d = detail::denominator_lcm(m(i, j));
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), d.get_mpz_t());
    }
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = detail::scaled_to_integer(m(i, j), row_lcm);
    scale_product *= row_lcm;
  }
  auto at = [&](int i, int j) -> ZPoly& { return a[static_cast<std::size_t>(i) * n + j]; };

  int sgn = 1;
  ZPoly prev{Integer(1)};
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k).empty()) {
      int r = k + 1;
      while (r < n && at(r, k).empty()) ++r;
      if (r == n) return {};
      for (int j = k; j < n; ++j) std::swap(at(k, j), at(r, j));
      sgn = -sgn;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        ZPoly num = detail::cross(at(k, k), at(i, j), at(i, k), at(k, j));
        at(i, j) = detail::exact_divide(num, prev);
      }
      at(i, k).clear();
    }
    prev = at(k, k);
  }
  Poly result = detail::to_rational(at(n - 1, n - 1), scale_product);
  return sgn < 0 ? -result : result;
}

namespace {

struct CycleCoverSearch {
  const PolyMatrix& m;
  int n;
  std::vector<bool> used;
  Poly total;

  // Extends the open cycle that started at `start` and currently ends at `tail`.
  void extend(int start, int tail, int length, const Poly& weight, const Poly& outer) {
    // close the cycle
    if (!m(tail, start).is_zero()) {
      Poly w = weight * m(tail, start);
      if (length % 2 == 0) w = -w;  // (-1)^(length - 1) with length = arc count
      cover(outer * w);
    }
    for (int next = start + 1; next < n; ++next) {
      if (used[next] || m(tail, next).is_zero()) continue;
      used[next] = true;
      extend(start, next, length + 1, weight * m(tail, next), outer);
      used[next] = false;
    }
  }

  void cover(const Poly& product) {
    int start = 0;
    while (start < n && used[start]) ++start;
    if (start == n) {
      total += product;
      return;
    }
    used[start] = true;
    extend(start, start, 1, Poly::constant(1), product);
    used[start] = false;
  }
};

}  // namespace

Poly det_via_cycle_covers(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const int cap = brute_force_cap(kCycleCoverCap);
  if (m.rows() > cap) throw SizeCapExceeded("det_via_cycle_covers", m.rows(), cap);
  // The smallest vertex of each cycle is its start, so each cycle cover is
  // generated exactly once.
  CycleCoverSearch search{m, m.rows(), std::vector<bool>(static_cast<std::size_t>(m.rows()), false), Poly{}};
  search.cover(Poly::constant(1));
  return search.total;
}

namespace {

std::vector<int> complement(std::span<const int> removed, int n, const char* what) {
  std::vector<bool> drop(static_cast<std::size_t>(n), false);
  for (int r : removed) {
    if (r < 0 || r >= n) throw std::out_of_range(std::string(what) + " index " + std::to_string(r) + " out of range");
    drop[static_cast<std::size_t>(r)] = true;
  }
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (!drop[static_cast<std::size_t>(i)]) keep.push_back(i);
  return keep;
}

}  // namespace

PolyMatrix submatrix(const PolyMatrix& m, std::span<const int> delete_rows, std::span<const int> delete_cols) {
  const auto rows = complement(delete_rows, m.rows(), "row");
  const auto cols = complement(delete_cols, m.cols(), "column");
  PolyMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(static_cast<int>(i), static_cast<int>(j)) = m(rows[i], cols[j]);
  return out;
}

PolyMatrix principal_submatrix(const PolyMatrix& m, std::span<const int> keep) {
  const int k = static_cast<int>(keep.size());
  for (int v : keep)
    if (v < 0 || v >= m.rows() || v >= m.cols()) throw std::out_of_range("principal index " + std::to_string(v) + " out of range");
  PolyMatrix out(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out(i, j) = m(keep[i], keep[j]);
  return out;
}

RatMatrix principal_submatrix(const RatMatrix& m, std::span<const int> keep) {
  const int k = static_cast<int>(keep.size());
  for (int v : keep)
    if (v < 0 || v >= m.rows() || v >= m.cols()) throw std::out_of_range("principal index " + std::to_string(v) + " out of range");
  RatMatrix out(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out(i, j) = m(keep[i], keep[j]);
  return out;
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

PolyMatrix parse_poly_matrix(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("poly matrix: missing header");
  std::istringstream header(lines.front());
  int rows = -1, cols = -1;
  std::string extra;
  if (!(header >> rows >> cols) || rows < 0 || cols < 0 || (header >> extra))
    throw std::invalid_argument("poly matrix: header must be 'rows cols'");
  const std::size_t expected = static_cast<std::size_t>(rows) * cols;
  if (lines.size() - 1 != expected)
    throw std::invalid_argument("poly matrix: expected " + std::to_string(expected) + " entries, found " + std::to_string(lines.size() - 1));
  PolyMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = parse_poly(lines[1 + static_cast<std::size_t>(i) * cols + j]);
  return m;
}

std::string format_poly_matrix(const PolyMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out << to_string(m(i, j)) << '\n';
  return out.str();
}

RatMatrix parse_rat_matrix(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("rational matrix: missing order");
  std::istringstream header(lines.front());
  int n = -1;
  std::string extra;
  if (!(header >> n) || n < 0 || (header >> extra)) throw std::invalid_argument("rational matrix: first line must be the order n");
  if (lines.size() - 1 != static_cast<std::size_t>(n))
    throw std::invalid_argument("rational matrix: expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    std::istringstream row(lines[1 + static_cast<std::size_t>(i)]);
    std::string tok;
    int j = 0;
    while (row >> tok) {
      if (j >= n) throw std::invalid_argument("rational matrix: row " + std::to_string(i + 1) + " has too many entries");
      m(i, j++) = parse_rational(tok);
    }
    if (j != n) throw std::invalid_argument("rational matrix: row " + std::to_string(i + 1) + " has too few entries");
  }
  return m;
}

std::string format_rat_matrix(const RatMatrix& m) {
  std::ostringstream out;
  out << m.rows() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << to_string(m(i, j));
    out << '\n';
  }
  return out.str();
}

}  // namespace acyclic
