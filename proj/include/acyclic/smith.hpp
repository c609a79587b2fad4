#pragma once

// Smith Normal Form over Q[x], determinantal divisors and invariant factors.

#include "acyclic/poly_matrix.hpp"

#include <vector>

namespace acyclic {

struct SnfOptions {
  /// Accumulate the unimodular witnesses P and Q.
  bool witnesses = true;
  /// Check P * M * Q == S before returning (requires witnesses).
  bool verify = true;
};

/// P * M * Q = S with S = diag(e_1, ..., e_r, 0, ...), every e_i monic and
/// e_i | e_{i+1}. P and Q are empty when witnesses were not requested.
struct SnfResult {
  PolyMatrix S;
  PolyMatrix P;
  PolyMatrix Q;
  /// The min(rows, cols) diagonal entries of S, zeros included.
  std::vector<Poly> invariant_factors;

  bool has_witnesses() const { return P.rows() > 0 || Q.rows() > 0 || S.rows() == 0; }
  int rank() const;
};

/// Pivot on a minimal-degree nonzero entry (ties: smallest row, then
/// column), clear its row and column by polynomial division, and repair
/// divisibility by adding a row holding a non-multiple into the pivot row.
/// Throws std::logic_error if the witness check fails.
SnfResult smith_normal_form(const PolyMatrix& m, SnfOptions options = {});

/// Delta_k = e_1 * ... * e_k read off an SNF (0 when any of them is 0).
/// Throws std::out_of_range unless 1 <= k <= min(rows, cols).
Poly determinantal_divisor(const SnfResult& snf, int k);

enum class DivisorStrategy { BruteForce, FromSnf };

/// Monic gcd of all k x k minors (0 if they all vanish). BruteForce walks
/// every minor and is capped at brute_force_cap(kMinorEnumerationCap) on
/// max(rows, cols); FromSnf computes the SNF without witnesses.
Poly determinantal_divisor(const PolyMatrix& m, int k, DivisorStrategy strategy = DivisorStrategy::FromSnf,
                           Exec exec = Exec::Serial);

/// Serial reference and OpenMP fold of gcd over all k x k minors. No cap.
Poly minor_gcd_serial(const PolyMatrix& m, int k);
Poly minor_gcd_parallel(const PolyMatrix& m, int k);

/// One multiplicity class read from the invariant factors of xI - A:
/// `factor` is monic square-free and its roots are exactly the eigenvalues
/// whose multiplicity equals `multiplicity`.
struct MultiplicityClass {
  int multiplicity;
  Poly factor;
  friend bool operator==(const MultiplicityClass&, const MultiplicityClass&) = default;
};

/// Uses (x - l) | e_{n-k+1} and (x - l) does not divide e_{n-k} iff l has
/// multiplicity k. The factor for k is rad(e_{n-k+1}) / rad(e_{n-k}).
/// Classes are ordered by ascending multiplicity. Throws
/// std::invalid_argument when the SNF is not square of full rank.
std::vector<MultiplicityClass> invariant_factor_multiplicities(const SnfResult& snf);

}  // namespace acyclic
