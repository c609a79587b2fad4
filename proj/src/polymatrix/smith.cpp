#include "acyclic/smith.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace acyclic {

namespace {

struct Position {
  int row;
  int col;
};

class SmithReducer {
 public:
  SmithReducer(const PolyMatrix& m, bool witnesses)
      : a_(m), witnesses_(witnesses), rows_(m.rows()), cols_(m.cols()) {
    if (witnesses_) {
      p_ = PolyMatrix::identity(rows_);
      q_ = PolyMatrix::identity(cols_);
    }
  }

  SnfResult run() {
    const int diag = std::min(rows_, cols_);
    for (int t = 0; t < diag; ++t) {
      if (!reduce_at(t)) break;
      normalize(t);
    }
    SnfResult out;
    out.S = std::move(a_);
    out.P = std::move(p_);
    out.Q = std::move(q_);
    for (int t = 0; t < diag; ++t) out.invariant_factors.push_back(out.S(t, t));
    return out;
  }

 private:
  std::optional<Position> min_degree_entry(int t) const {
    std::optional<Position> best;
    int best_degree = 0;
    for (int i = t; i < rows_; ++i)
      for (int j = t; j < cols_; ++j) {
        const Poly& e = a_(i, j);
        if (e.is_zero()) continue;
        if (!best || e.degree() < best_degree) {
          best = Position{i, j};
          best_degree = e.degree();
        }
      }
    return best;
  }

  void swap_rows(int r, int s) {
    if (r == s) return;
    for (int j = 0; j < cols_; ++j) std::swap(a_(r, j), a_(s, j));
    if (witnesses_)
      for (int j = 0; j < rows_; ++j) std::swap(p_(r, j), p_(s, j));
  }

  void swap_cols(int c, int d) {
    if (c == d) return;
    for (int i = 0; i < rows_; ++i) std::swap(a_(i, c), a_(i, d));
    if (witnesses_)
      for (int i = 0; i < cols_; ++i) std::swap(q_(i, c), q_(i, d));
  }

  // row_dst += f * row_src, columns >= t of a (earlier columns are zero).
  void add_row(int dst, int src, const Poly& f, int t) {
    for (int j = t; j < cols_; ++j)
      if (!a_(src, j).is_zero()) a_(dst, j) += f * a_(src, j);
    if (witnesses_)
      for (int j = 0; j < rows_; ++j)
        if (!p_(src, j).is_zero()) p_(dst, j) += f * p_(src, j);
  }

  void add_col(int dst, int src, const Poly& f, int t) {
    for (int i = t; i < rows_; ++i)
      if (!a_(i, src).is_zero()) a_(i, dst) += f * a_(i, src);
    if (witnesses_)
      for (int i = 0; i < cols_; ++i)
        if (!q_(i, src).is_zero()) q_(i, dst) += f * q_(i, src);
  }

  // Makes (t, t) a pivot dividing every entry of the trailing block with
  // row t and column t cleared. Returns false if the block is zero.
  bool reduce_at(int t) {
    for (;;) {
      const auto pos = min_degree_entry(t);
      if (!pos) return false;
      swap_rows(t, pos->row);
      swap_cols(t, pos->col);

      bool clean = true;
      for (int i = t + 1; i < rows_; ++i) {
        if (a_(i, t).is_zero()) continue;
        auto [quot, rem] = divrem(a_(i, t), a_(t, t));
        add_row(i, t, -quot, t);
        if (!rem.is_zero()) clean = false;
      }
      for (int j = t + 1; j < cols_; ++j) {
        if (a_(t, j).is_zero()) continue;
        auto [quot, rem] = divrem(a_(t, j), a_(t, t));
        add_col(j, t, -quot, t);
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;  // a remainder of lower degree is now the pivot candidate

      if (auto bad = non_multiple(t)) {
        add_row(t, bad->row, Poly::constant(1), t);
        continue;
      }
      return true;
    }
  }

  std::optional<Position> non_multiple(int t) const {
    const Poly& pivot = a_(t, t);
    if (pivot.is_constant()) return std::nullopt;
    for (int i = t + 1; i < rows_; ++i)
      for (int j = t + 1; j < cols_; ++j)
        if (!a_(i, j).is_zero() && !divides(pivot, a_(i, j))) return Position{i, j};
    return std::nullopt;
  }

  void normalize(int t) {
    const Rational lc = a_(t, t).leading();
    if (lc == 1) return;
    const Rational inv = 1 / lc;
    for (int j = t; j < cols_; ++j) a_(t, j) *= inv;
    if (witnesses_)
      for (int j = 0; j < rows_; ++j) p_(t, j) *= inv;
  }

  PolyMatrix a_;
  PolyMatrix p_;
  PolyMatrix q_;
  bool witnesses_;
  int rows_;
  int cols_;
};

}  // namespace

int SnfResult::rank() const {
  int r = 0;
  for (const auto& e : invariant_factors) r += e.is_zero() ? 0 : 1;
  return r;
}

SnfResult smith_normal_form(const PolyMatrix& m, SnfOptions options) {
  SnfResult out = SmithReducer(m, options.witnesses).run();
  if (options.witnesses && options.verify && !(out.P * m * out.Q == out.S))
    throw std::logic_error("smith_normal_form: witness check P*M*Q == S failed");
  return out;
}

Poly determinantal_divisor(const SnfResult& snf, int k) {
  const int limit = static_cast<int>(snf.invariant_factors.size());
  if (k < 1 || k > limit) throw std::out_of_range("determinantal divisor order " + std::to_string(k) + " out of range");
  Poly d = Poly::constant(1);
  for (int j = 0; j < k; ++j) {
    if (snf.invariant_factors[j].is_zero()) return {};
    d *= snf.invariant_factors[j];
  }
  return d;
}

Poly determinantal_divisor(const PolyMatrix& m, int k, DivisorStrategy strategy, Exec exec) {
  if (k < 1 || k > std::min(m.rows(), m.cols()))
    throw std::out_of_range("determinantal divisor order " + std::to_string(k) + " out of range");
  if (strategy == DivisorStrategy::FromSnf) return determinantal_divisor(smith_normal_form(m, {false, false}), k);
  const int cap = brute_force_cap(kMinorEnumerationCap);
  const int size = std::max(m.rows(), m.cols());
  if (size > cap) throw SizeCapExceeded("brute-force determinantal divisor", size, cap);
  return exec == Exec::Parallel ? minor_gcd_parallel(m, k) : minor_gcd_serial(m, k);
}

std::vector<MultiplicityClass> invariant_factor_multiplicities(const SnfResult& snf) {
  const int n = static_cast<int>(snf.invariant_factors.size());
  if (snf.S.rows() != snf.S.cols() || snf.rank() != n)
    throw std::invalid_argument("invariant_factor_multiplicities: SNF is not square of full rank");
  std::vector<Poly> radical(static_cast<std::size_t>(n) + 1);
  radical[0] = Poly::constant(1);
  for (int i = 1; i <= n; ++i) radical[i] = squarefree_part(snf.invariant_factors[i - 1]);
  std::vector<MultiplicityClass> out;
  for (int k = 1; k <= n; ++k) {
    Poly f = exact_quotient(radical[n - k + 1], radical[n - k]);
    if (!f.is_constant()) out.push_back({k, f.monic()});
  }
  return out;
}

}  // namespace acyclic
