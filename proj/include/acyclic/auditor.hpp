#pragma once

// Mechanical checks of the factor-structure, submatrix, path-deletion and
// bound theorems on concrete matrices, plus batch drivers over seeds.

#include "acyclic/exec.hpp"
#include "acyclic/generators.hpp"
#include "acyclic/path_cover.hpp"
#include "acyclic/spectra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace acyclic {

struct Violation {
  std::string instance;
  std::string expected;
  std::string observed;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct AuditReport {
  std::string claim;
  int checked = 0;
  std::vector<Violation> violations;
  /// Informational lines (resolved signs, derived relations, ...).
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }
  void fail(std::string instance, std::string expected, std::string observed);
  /// Appends counts, violations and notes of `other` in order.
  void merge(const AuditReport& other);
  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

/// {"claim": ..., "checked": N, "violations": [{"instance", "expected",
/// "observed"}], "passed": bool, "notes": [...]}.
std::string report_json(const AuditReport& r);

/// For every multiplicity class (g, m): g coprime to Delta_k and e_k for
/// k <= n - m; g^(k-n+m) exactly divides Delta_k and g exactly divides e_k
/// above; e_{n-k} is the product of the classes with multiplicity > k.
/// Delta_k comes from the SNF and, when n is within the minor cap, also from
/// brute-force minors.
AuditReport audit_factor_structure(const RatSymMatrix& a);

/// det m({j_s}, {i_s}) against +/- prod wt(P_{i_s -> j_s}) det m[T \ paths],
/// each side computed on its own. Path s runs from i_s = front to j_s = back.
/// Throws std::invalid_argument unless m is symmetric with graph `tree` and
/// f is a disjoint path family of it.
AuditReport audit_submatrix_identity(const PolyMatrix& m, const Tree& tree, const PathFamily& f);

/// For each class (g, m) with m >= k + 1, g^(m-k) divides the charpoly of
/// a[T \ f]; the same fact re-derived from the EigenStructure of a[T \ f];
/// and deg Delta_{n-k} <= number of uncovered vertices.
AuditReport audit_path_deletion(const RatSymMatrix& a, const Tree& tree, const PathFamily& f);

/// For k = 1..p(T): #{eigenvalues with multiplicity >= k+1} <= n - (max
/// coverage by k paths), with the count also read as deg e_{n-k}.
AuditReport audit_count_bound(const RatSymMatrix& a, const Tree& tree);

enum class Bound { MLeP, QGeD1, Whirl52, Whirl54, Graph61, ExtremesSimple };

const char* bound_name(Bound b);

/// Lower bound on q for a (k, l)-whirl of diameter d: 9d/8 + 1/2 when k = 3,
/// d + 1 + (k-2)(l-1)/(k-1)^2 when k > 3. Throws std::invalid_argument for
/// k < 3 or l < 2.
Rational whirl_q_bound(int k, int l, int d);
/// 9l/4 - 2m + 15/2 for six legs of l vertices on three anchors of an m-vertex graph.
Rational figure14_q_bound(int m, int l);

/// Asserts one inequality for a in S(g). Tree bounds need a tree; the whirl
/// bounds need g to be recognised as a (3, l>=2)- or (k>=3, l>=2)-whirl.
/// Graph61 needs the descriptor overload. Throws std::invalid_argument on a
/// family mismatch or when a is not in S(g).
AuditReport audit_bounds(const RatSymMatrix& a, const Graph& g, Bound which);
AuditReport audit_bounds(const RatSymMatrix& a, const Figure14& f);

/// The four parts of the whirl multiplicity lemma on a in S(w).
AuditReport audit_whirl_lemma(const RatSymMatrix& a, const Whirl& w);

/// Necessary conditions for a multiplicity list on t; reports the first
/// violated one.
AuditReport screen_multiplicity_list(const Tree& t, const std::vector<int>& mults);

// ---- the ten-vertex certificate ---------------------------------------------

/// "lambda_tag is an eigenvalue of B[vertices] with multiplicity >= min_mult".
struct Membership {
  int tag = 0;
  std::vector<int> vertices;
  int min_mult = 1;
};

struct DeductionStep {
  PathFamily paths;
  std::vector<int> remaining;
  std::vector<Membership> memberships;
};

/// The deductions for <1,2,4,2,1> on the ten-vertex whirl: every leaf and
/// the axis carry lambda_3, each spoke block carries lambda_3, and each spoke
/// block carries lambda_2 and lambda_4.
std::vector<DeductionStep> example36_steps();

struct Derivation {
  /// Blocks whose spectrum is fully determined, with per-tag counts.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks;
  /// Partition of the vertex set into determined blocks (empty if none).
  std::vector<std::vector<int>> partition;
  /// relation[t] * lambda_{t+1} summed over tags is zero (trace identity).
  std::vector<int> relation;
  /// Index of each step with an unlicensed membership, with the reason.
  std::vector<std::string> unlicensed;
};

/// Replays the steps on `tree` for the ordered multiplicity list `mults`.
/// A membership (tag, X, c) is licensed when m_tag >= k + 1, X is a union of
/// components of the uncovered forest, and (m_tag - k) minus the largest
/// multiplicity lambda_tag can still have in the other components is >= c.
/// Throws std::invalid_argument for malformed steps.
Derivation derive_trace_relation(const Tree& tree, const std::vector<int>& mults,
                                 const std::vector<DeductionStep>& steps);

/// Checks the steps on the ten-vertex tree and evaluates the derived relation
/// on a spectrum given as ten rationals. Passes iff every step is licensed,
/// the blocks partition the vertices, and sigma satisfies the relation.
/// Throws std::invalid_argument if sigma does not group as <1,2,4,2,1>.
AuditReport example36_certificate(const std::vector<DeductionStep>& steps, const std::vector<Rational>& sigma);
/// Same, with sigma given by its eigen structure: the relation is evaluated
/// through root sums -g_{d-1}/g_d of each square-free factor, which needs the
/// coefficient to be constant over the groups sharing a factor (otherwise
/// std::invalid_argument).
AuditReport example36_certificate(const std::vector<DeductionStep>& steps, const EigenStructure& sigma);

// ---- batch runs ---------------------------------------------------------------

struct BatchOptions {
  int seeds = 200;
  std::uint64_t base_seed = 1;
  EntryPool pool{};
  /// Largest random tree order for the random-tree claims.
  int max_tree = 12;
  Exec exec = Exec::Serial;
};

/// thm-2.3, thm-3.3, cor-3.4, cor-3.5, cor-4.1, thm-5.1, lem-5.3, thm-5.2,
/// thm-5.4, thm-6.1, ex-3.6, extremes-simple.
const std::vector<std::string>& claim_ids();

/// Runs one claim over `seeds` seeded instances per target. Per-seed reports
/// are merged in seed order, so serial and parallel runs agree exactly.
/// Throws std::invalid_argument for an unknown claim id.
AuditReport run_claim(const std::string& claim, const BatchOptions& options = {});

}  // namespace acyclic
