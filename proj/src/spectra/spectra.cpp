#include "acyclic/spectra.hpp"

#include "acyclic/smith.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace acyclic {

namespace {

void require_symmetric(const RatSymMatrix& a) {
  if (!a.is_square() || !a.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
}

}  // namespace

Graph graph_of(const RatSymMatrix& a) {
  require_symmetric(a);
  Graph g(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != 0) g.add_edge(i + 1, j + 1);
  return g;
}

bool member_of_S(const RatSymMatrix& a, const Graph& g) {
  if (a.rows() != g.n()) throw std::invalid_argument("matrix order does not match graph order");
  return graph_of(a) == g;
}

Poly charpoly(const RatSymMatrix& a) {
  require_symmetric(a);
  return det(characteristic_matrix(a));
}

std::vector<int> EigenStructure::multiplicities() const {
  std::vector<int> out;
  for (const auto& g : groups) out.push_back(g.multiplicity);
  return out;
}

int EigenStructure::count_with_multiplicity(int m) const {
  return static_cast<int>(std::count_if(groups.begin(), groups.end(), [m](const auto& g) { return g.multiplicity == m; }));
}

int EigenStructure::max_multiplicity() const {
  int m = 0;
  for (const auto& g : groups) m = std::max(m, g.multiplicity);
  return m;
}

EigenStructure eigen_structure(const RatSymMatrix& a) {
  EigenStructure out;
  out.charpoly = charpoly(a);
  if (a.rows() == 0) return out;

  const auto factors = squarefree_decomposition(out.charpoly);
  std::vector<SturmSequence> sturm;
  for (const auto& f : factors) sturm.emplace_back(f.factor);

  for (const Interval& iv : isolate_real_roots(squarefree_part(out.charpoly))) {
    // The factors are pairwise coprime, so exactly one owns the root.
    std::size_t owner = factors.size();
    for (std::size_t i = 0; i < factors.size() && owner == factors.size(); ++i) {
      const bool has = iv.is_exact() ? factors[i].factor.eval(iv.lo) == 0 : sturm[i].count(iv.lo, iv.hi) == 1;
      if (has) owner = i;
    }
    if (owner == factors.size()) throw std::logic_error("eigen_structure: root owned by no square-free factor");
    out.groups.push_back({iv, factors[owner].multiplicity, factors[owner].factor});
  }
  out.q = static_cast<int>(out.groups.size());
  int total = 0;
  for (const auto& g : out.groups) total += g.multiplicity;
  // A symmetric matrix has only real eigenvalues; anything else is a bug.
  if (total != a.rows()) throw std::logic_error("eigen_structure: multiplicities do not sum to n");
  return out;
}

Poly minimal_polynomial(const RatSymMatrix& a) {
  const Poly from_charpoly = squarefree_part(charpoly(a)).monic();
  if (a.rows() == 0) return from_charpoly;
  const SnfResult snf = smith_normal_form(characteristic_matrix(a), {false, false});
  if (snf.invariant_factors.back() != from_charpoly)
    throw std::logic_error("minimal_polynomial: SNF e_n disagrees with the square-free part of the charpoly");
  return from_charpoly;
}

int distinct_eigenvalue_count_via_snf(const RatSymMatrix& a) {
  require_symmetric(a);
  const int n = a.rows();
  if (n == 0) return 0;
  if (n == 1) return 1;
  const SnfResult snf = smith_normal_form(characteristic_matrix(a), {false, false});
  return n - determinantal_divisor(snf, n - 1).degree();
}

std::string eigen_structure_json(const EigenStructure& e) {
  nlohmann::ordered_json groups = nlohmann::ordered_json::array();
  for (const auto& g : e.groups) {
    nlohmann::ordered_json root;
    if (g.root.is_exact())
      root = to_string(g.root.lo);
    else
      root = {{"lo", to_string(g.root.lo)}, {"hi", to_string(g.root.hi)}};
    groups.push_back({{"root", root}, {"mult", g.multiplicity}, {"factor", to_string(g.factor)}});
  }
  nlohmann::ordered_json j = {{"charpoly", to_string(e.charpoly)}, {"groups", groups}, {"q", e.q}};
  return j.dump();
}

}  // namespace acyclic
