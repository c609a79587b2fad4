#pragma once

// Rational symmetric matrices with a prescribed graph and their exact
// eigenvalue multiplicity structure.

#include "acyclic/graph.hpp"
#include "acyclic/poly_matrix.hpp"
#include "acyclic/real_roots.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace acyclic {

/// Symmetric matrices are plain RatMatrix values; functions taking one
/// check symmetry and throw std::invalid_argument otherwise.
using RatSymMatrix = RatMatrix;

/// Edges ij (i != j) with a_ij != 0. The diagonal is ignored.
Graph graph_of(const RatSymMatrix& a);

/// graph_of(a) == g. Throws std::invalid_argument on an order mismatch.
bool member_of_S(const RatSymMatrix& a, const Graph& g);

/// det(xI - a), monic of degree n.
Poly charpoly(const RatSymMatrix& a);

/// One distinct eigenvalue: its locator, multiplicity, and the square-free
/// factor of the characteristic polynomial that has it as a root (all roots
/// of that factor share the multiplicity).
struct EigenGroup {
  Interval root;
  int multiplicity = 0;
  Poly factor;
};

struct EigenStructure {
  Poly charpoly;
  /// Ascending eigenvalue order.
  std::vector<EigenGroup> groups;
  int q = 0;

  /// The ordered multiplicity list.
  std::vector<int> multiplicities() const;
  /// Number of distinct eigenvalues of multiplicity exactly m.
  int count_with_multiplicity(int m) const;
  int max_multiplicity() const;
};

/// Charpoly, Yun decomposition, and Sturm isolation of its square-free part;
/// each isolated root is assigned the Yun index of the factor owning it.
/// Throws std::invalid_argument for non-symmetric input.
EigenStructure eigen_structure(const RatSymMatrix& a);

/// Square-free part of the charpoly, cross-checked against e_n of the SNF
/// of xI - a (std::logic_error if they differ).
Poly minimal_polynomial(const RatSymMatrix& a);

/// n - deg Delta_{n-1}(xI - a), read off the SNF.
int distinct_eigenvalue_count_via_snf(const RatSymMatrix& a);

/// Entries p/q with |p| <= radius and 1 <= q <= max_den.
struct EntryPool {
  int radius = 5;
  int max_den = 1;
};

/// Parses "R" or "R/D" into a pool. Throws std::invalid_argument.
EntryPool parse_entry_pool(const std::string& text);

/// Seeded member of S(g): nonzero pool entries on edges, zeros elsewhere off
/// the diagonal, pool entries (zero allowed) on the diagonal.
RatSymMatrix sample_S(const Graph& g, std::uint64_t seed, EntryPool pool = {});

/// Seeded member of S(t) with forced repeated eigenvalues: rooted at vertex
/// 1, at each chosen vertex every child subtree isomorphic to an earlier
/// sibling copies that sibling's weights, so each eigenvalue of the copied
/// block gains one multiplicity per copy. Vertices are chosen with
/// probability 1/2, deepest first.
RatSymMatrix sample_S_symmetric(const Tree& t, std::uint64_t seed, EntryPool pool = {});

/// U = (I - s)(I + s)^{-1} for skew-symmetric s; rational and orthogonal.
RatMatrix cayley_orthogonal(const RatMatrix& s);

/// U diag(values) U^T with U the Cayley transform of a seeded random
/// skew-symmetric matrix. The spectrum is exactly `values`.
RatSymMatrix planted_spectrum_matrix(const std::vector<Rational>& values, std::uint64_t seed, int skew_radius = 2);

/// JSON: {"charpoly": "...", "groups": [{"root": "0" | {"lo": "1", "hi": "2"},
/// "mult": 4, "factor": "..."}], "q": 5}.
std::string eigen_structure_json(const EigenStructure& e);

}  // namespace acyclic
