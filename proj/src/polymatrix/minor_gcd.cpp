#include "acyclic/smith.hpp"

#include <atomic>
#include <cstdint>

namespace acyclic {

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[i] = i;
  if (k > n) return out;
  for (;;) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

Poly minor(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  PolyMatrix sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
  return det(sub);
}

// gcd with the convention gcd(0, 0) = 0.
Poly fold(const Poly& acc, const Poly& next) {
  if (next.is_zero()) return acc;
  if (acc.is_zero()) return next.monic();
  return gcd(acc, next);
}

}  // namespace

Poly minor_gcd_serial(const PolyMatrix& m, int k) {
  const auto rs = combinations(m.rows(), k);
  const auto cs = combinations(m.cols(), k);
  Poly acc;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      acc = fold(acc, minor(m, r, c));
      if (acc.is_constant() && !acc.is_zero()) return acc;
    }
  return acc;
}

Poly minor_gcd_parallel(const PolyMatrix& m, int k) {
  const auto rs = combinations(m.rows(), k);
  const auto cs = combinations(m.cols(), k);
  const std::int64_t total = static_cast<std::int64_t>(rs.size()) * static_cast<std::int64_t>(cs.size());
  const std::int64_t width = static_cast<std::int64_t>(cs.size());
  std::atomic<bool> unit{false};
  Poly result;
#pragma omp parallel
  {
    Poly local;
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      if (unit.load(std::memory_order_relaxed)) continue;
      local = fold(local, minor(m, rs[idx / width], cs[idx % width]));
      if (local.is_constant() && !local.is_zero()) unit.store(true, std::memory_order_relaxed);
    }
    // The monic gcd is unique, so the merge order does not matter.
#pragma omp critical(acyclic_minor_gcd)
    result = fold(result, local);
  }
  return result;
}

}  // namespace acyclic
