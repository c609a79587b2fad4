#include "acyclic/auditor.hpp"

#include "acyclic/smith.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace acyclic {

void AuditReport::fail(std::string instance, std::string expected, std::string observed) {
  violations.push_back({std::move(instance), std::move(expected), std::move(observed)});
}

void AuditReport::merge(const AuditReport& other) {
  checked += other.checked;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string report_json(const AuditReport& r) {
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"instance", v.instance}, {"expected", v.expected}, {"observed", v.observed}});
  nlohmann::ordered_json j = {{"claim", r.claim},
                              {"checked", r.checked},
                              {"violations", violations},
                              {"passed", r.passed()},
                              {"notes", r.notes}};
  return j.dump();
}

namespace {

std::string str(const Poly& p) { return to_string(p); }

std::string matrix_label(const RatSymMatrix& a) { return "matrix n=" + std::to_string(a.rows()); }

// Every root of the square-free g occurs in p exactly e times.
bool roots_with_exact_power(const Poly& p, const Poly& g, int e) {
  if (p.is_zero()) return false;
  const Poly ge = pow(g, e);
  if (!divides(ge, p)) return false;
  return gcd(exact_quotient(p, ge), g).is_constant();
}

// (multiplicity, square-free factor) per multiplicity class.
std::map<int, Poly> multiplicity_classes(const EigenStructure& e) {
  std::map<int, Poly> out;
  for (const auto& g : e.groups) out.emplace(g.multiplicity, g.factor);
  return out;
}

std::vector<int> complement(int n, const std::vector<int>& covered) {
  std::vector<char> mark(static_cast<std::size_t>(n) + 1, 0);
  for (int v : covered) mark[v] = 1;
  std::vector<int> out;
  for (int v = 1; v <= n; ++v)
    if (!mark[v]) out.push_back(v);
  return out;
}

std::vector<int> zero_based(const std::vector<int>& labels) {
  std::vector<int> out;
  for (int v : labels) out.push_back(v - 1);
  return out;
}

Poly charpoly_on(const RatSymMatrix& a, const std::vector<int>& labels) {
  if (labels.empty()) return Poly::constant(1);
  return charpoly(principal_submatrix(a, zero_based(labels)));
}

void require_member(const RatSymMatrix& a, const Graph& g) {
  if (!member_of_S(a, g)) throw std::invalid_argument("matrix is not in S(G) for the given graph");
}

std::string rational_str(const Rational& r) { return to_string(r); }

Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

AuditReport audit_factor_structure(const RatSymMatrix& a) {
  AuditReport r;
  r.claim = "thm-2.3";
  r.checked = 1;
  const std::string inst = matrix_label(a);
  const int n = a.rows();
  if (n == 0) return r;

  const EigenStructure es = eigen_structure(a);
  const PolyMatrix m = characteristic_matrix(a);
  const SnfResult snf = smith_normal_form(m);
  std::vector<Poly> delta(static_cast<std::size_t>(n) + 1);
  delta[0] = Poly::constant(1);
  for (int k = 1; k <= n; ++k) delta[k] = determinantal_divisor(snf, k);

  if (n <= brute_force_cap(kMinorEnumerationCap))
    for (int k = 1; k <= n; ++k)
      if (const Poly brute = minor_gcd_serial(m, k); brute != delta[k])
        r.fail(inst, "Delta_" + std::to_string(k) + " from minors = " + str(brute), str(delta[k]));

  const auto classes = multiplicity_classes(es);
  for (const auto& [mult, g] : classes)
    for (int k = 1; k <= n; ++k) {
      const Poly& e = snf.invariant_factors[k - 1];
      const std::string where = " (mult " + std::to_string(mult) + " factor " + str(g) + ", k=" + std::to_string(k) + ")";
      if (k <= n - mult) {
        if (!gcd(g, delta[k]).is_constant()) r.fail(inst + where, "factor coprime to Delta_k", str(delta[k]));
        if (!gcd(g, e).is_constant()) r.fail(inst + where, "factor coprime to e_k", str(e));
      } else {
        if (!roots_with_exact_power(delta[k], g, k - n + mult))
          r.fail(inst + where, "factor^" + std::to_string(k - n + mult) + " exactly divides Delta_k", str(delta[k]));
        if (!roots_with_exact_power(e, g, 1)) r.fail(inst + where, "factor exactly divides e_k", str(e));
      }
    }

  for (int k = 0; k < n; ++k) {
    Poly expected = Poly::constant(1);
    for (const auto& [mult, g] : classes)
      if (mult > k) expected *= g;
    if (snf.invariant_factors[n - k - 1] != expected)
      r.fail(inst, "e_" + std::to_string(n - k) + " = " + str(expected), str(snf.invariant_factors[n - k - 1]));
  }
  return r;
}

AuditReport audit_submatrix_identity(const PolyMatrix& m, const Tree& tree, const PathFamily& f) {
  const int n = tree.n();
  if (m.rows() != n || m.cols() != n || !m.is_symmetric())
    throw std::invalid_argument("submatrix identity needs a symmetric matrix of the tree's order");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m(i, j).is_zero() == tree.graph().has_edge(i + 1, j + 1))
        throw std::invalid_argument("matrix pattern does not match the tree");
  validate_path_family(tree, f);

  AuditReport r;
  r.claim = "thm-3.3";
  r.checked = 1;
  std::vector<int> rows, cols;
  Poly weight = Poly::constant(1);
  for (const auto& path : f.paths) {
    cols.push_back(path.front() - 1);
    rows.push_back(path.back() - 1);
    for (std::size_t s = 0; s + 1 < path.size(); ++s) weight *= m(path[s] - 1, path[s + 1] - 1);
  }
  const Poly lhs = det(submatrix(m, rows, cols));
  const Poly rest = det(principal_submatrix(m, zero_based(complement(n, f.vertices()))));
  const Poly rhs = weight * rest;
  if (rhs.is_zero()) {
    if (!lhs.is_zero()) r.fail("tree n=" + std::to_string(n), "0", str(lhs));
    else r.notes.push_back("sign=ambiguous");
  } else if (lhs == rhs) {
    r.notes.push_back("sign=+1");
  } else if (lhs == -rhs) {
    r.notes.push_back("sign=-1");
  } else {
    r.fail("tree n=" + std::to_string(n) + " paths=" + std::to_string(f.size()), "+/-(" + str(rhs) + ")", str(lhs));
  }
  return r;
}

AuditReport audit_path_deletion(const RatSymMatrix& a, const Tree& tree, const PathFamily& f) {
  require_member(a, tree);
  validate_path_family(tree, f);
  AuditReport r;
  r.claim = "cor-3.4";
  r.checked = 1;
  const int n = tree.n();
  const int k = f.size();
  const std::string inst = matrix_label(a) + " paths=" + std::to_string(k);
  const std::vector<int> rest = complement(n, f.vertices());
  const int t = static_cast<int>(rest.size());

  const EigenStructure es = eigen_structure(a);
  const Poly sub_cp = charpoly_on(a, rest);
  std::map<int, Poly> sub_classes;
  if (t > 0) sub_classes = multiplicity_classes(eigen_structure(principal_submatrix(a, zero_based(rest))));

  for (const auto& [mult, g] : multiplicity_classes(es)) {
    if (mult < k + 1) continue;
    const std::string where = inst + " (mult " + std::to_string(mult) + " factor " + str(g) + ")";
    const int need = mult - k;
    if (!divides(pow(g, need), sub_cp))
      r.fail(where, "factor^" + std::to_string(need) + " divides charpoly of the remaining block", str(sub_cp));
    // Same fact from the submatrix's own eigen structure.
    Poly found = Poly::constant(1);
    for (const auto& [sub_mult, h] : sub_classes) {
      const Poly shared = gcd(g, h);
      if (shared.is_constant()) continue;
      if (sub_mult < need)
        r.fail(where, "shared roots with multiplicity >= " + std::to_string(need),
               "multiplicity " + std::to_string(sub_mult) + " on " + str(shared));
      found *= shared;
    }
    if (found != g) r.fail(where, "every root present in the remaining block", "only " + str(found));
  }

  if (n - k >= 1) {
    const SnfResult snf = smith_normal_form(characteristic_matrix(a), {false, false});
    const int deg = determinantal_divisor(snf, n - k).degree();
    if (deg > t) r.fail(inst, "deg Delta_{n-k} <= " + std::to_string(t), std::to_string(deg));
  }
  return r;
}

AuditReport audit_count_bound(const RatSymMatrix& a, const Tree& tree) {
  require_member(a, tree);
  AuditReport r;
  r.claim = "cor-3.5";
  r.checked = 1;
  const int n = tree.n();
  const EigenStructure es = eigen_structure(a);
  const SnfResult snf = smith_normal_form(characteristic_matrix(a), {false, false});
  const int p = path_cover_number(tree).number;
  for (int k = 1; k <= p; ++k) {
    const int t = n - max_coverage_by_k_paths(tree, k).covered;
    int count = 0;
    for (const auto& g : es.groups) count += g.multiplicity >= k + 1 ? 1 : 0;
    const std::string inst = matrix_label(a) + " k=" + std::to_string(k);
    if (count > t) r.fail(inst, "#(mult >= k+1) <= " + std::to_string(t), std::to_string(count));
    if (n - k >= 1 && snf.invariant_factors[n - k - 1].degree() != count)
      r.fail(inst, "deg e_{n-k} = " + std::to_string(count), std::to_string(snf.invariant_factors[n - k - 1].degree()));
  }
  return r;
}

const char* bound_name(Bound b) {
  switch (b) {
    case Bound::MLeP: return "M_le_p";
    case Bound::QGeD1: return "q_ge_d1";
    case Bound::Whirl52: return "whirl_52";
    case Bound::Whirl54: return "whirl_54";
    case Bound::Graph61: return "graph_61";
    case Bound::ExtremesSimple: return "extremes_simple";
  }
  return "?";
}

Rational whirl_q_bound(int k, int l, int d) {
  if (k < 3 || l < 2) throw std::invalid_argument("whirl bounds need k >= 3 and l >= 2");
  if (k == 3) return frac(9L * d, 8) + frac(1, 2);
  return Rational(d + 1) + frac((k - 2L) * (l - 1), (k - 1L) * (k - 1));
}

Rational figure14_q_bound(int m, int l) { return frac(9L * l, 4) - 2 * m + frac(15, 2); }

namespace {

void check_q_lower(AuditReport& r, const std::string& inst, int q, const Rational& bound) {
  if (Rational(q) < bound) r.fail(inst, "q >= " + rational_str(bound), std::to_string(q));
}

}  // namespace

AuditReport audit_bounds(const RatSymMatrix& a, const Graph& g, Bound which) {
  require_member(a, g);
  AuditReport r;
  r.claim = bound_name(which);
  r.checked = 1;
  const std::string inst = matrix_label(a);
  if (which == Bound::Graph61) throw std::invalid_argument("graph_61 needs the six-leg graph descriptor");
  if (!is_tree(g)) throw std::invalid_argument(std::string(bound_name(which)) + " needs a tree");
  const EigenStructure es = eigen_structure(a);

  switch (which) {
    case Bound::MLeP: {
      const int p = path_cover_number(g).number;
      if (es.max_multiplicity() > p) r.fail(inst, "M <= p = " + std::to_string(p), std::to_string(es.max_multiplicity()));
      break;
    }
    case Bound::QGeD1:
      check_q_lower(r, inst, es.q, Rational(diameter(g) + 1));
      break;
    case Bound::Whirl52:
    case Bound::Whirl54: {
      const auto w = detect_whirl(g);
      if (!w || w->l < 2 || (which == Bound::Whirl52 ? w->k != 3 : w->k < 3))
        throw std::invalid_argument(std::string(bound_name(which)) + ": graph is not a suitable whirl");
      const int d = diameter(g);
      const Rational bound = whirl_q_bound(w->k, w->l, d);
      check_q_lower(r, inst + " whirl(" + std::to_string(w->k) + "," + std::to_string(w->l) + ")", es.q, bound);
      break;
    }
    case Bound::ExtremesSimple:
      if (es.groups.front().multiplicity != 1 || es.groups.back().multiplicity != 1)
        r.fail(inst, "extreme eigenvalues simple",
               std::to_string(es.groups.front().multiplicity) + "," + std::to_string(es.groups.back().multiplicity));
      break;
    case Bound::Graph61:
      break;
  }
  return r;
}

AuditReport audit_bounds(const RatSymMatrix& a, const Figure14& f) {
  require_member(a, f.graph);
  AuditReport r;
  r.claim = bound_name(Bound::Graph61);
  r.checked = 1;
  const Rational bound = figure14_q_bound(f.m, f.l);
  check_q_lower(r, matrix_label(a) + " figure14(m=" + std::to_string(f.m) + ",l=" + std::to_string(f.l) + ")",
                eigen_structure(a).q, bound);
  return r;
}

AuditReport audit_whirl_lemma(const RatSymMatrix& a, const Whirl& w) {
  require_member(a, w.graph);
  AuditReport r;
  r.claim = "lem-5.3";
  r.checked = 1;
  const int k = w.k;
  const int n = w.graph.n();
  const std::string inst = matrix_label(a) + " whirl(" + std::to_string(k) + "," + std::to_string(w.l) + ")";
  const EigenStructure es = eigen_structure(a);

  const int top = es.count_with_multiplicity(k + 1);
  if (top > 1) r.fail(inst, "n_{k+1} <= 1", std::to_string(top));
  for (int j = k + 2; j <= n; ++j)
    if (const int c = es.count_with_multiplicity(j); c != 0)
      r.fail(inst, "n_" + std::to_string(j) + " = 0", std::to_string(c));

  std::vector<std::vector<Poly>> leg_cp(static_cast<std::size_t>(k));
  Poly direct_sum = Poly::constant(1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < 2; ++j) {
      leg_cp[i].push_back(charpoly_on(a, w.legs[i][j]));
      direct_sum *= leg_cp[i].back();
    }

  const auto classes = multiplicity_classes(es);
  if (const auto it = classes.find(k + 1); it != classes.end()) {
    const Poly& g = it->second;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < 2; ++j)
        if (!roots_with_exact_power(leg_cp[i][j], g, 1))
          r.fail(inst + " leg " + std::to_string(i + 1) + "." + std::to_string(j + 1),
                 "simple eigenvalue " + str(g), str(leg_cp[i][j]));
    if (!roots_with_exact_power(direct_sum, g, 2 * k))
      r.fail(inst, "multiplicity 2k in the leg direct sum for " + str(g), str(direct_sum));
  }
  if (const auto it = classes.find(k); it != classes.end()) {
    const Poly& g = it->second;
    for (int i = 0; i < k; ++i)
      for (int s = i + 1; s < k; ++s)
        for (int j = 0; j < 2; ++j)
          for (int t = 0; t < 2; ++t) {
            const Poly& p1 = leg_cp[i][j];
            const Poly& p2 = leg_cp[s][t];
            // Every root of g must be a simple root of p1 or of p2.
            const Poly in1 = gcd(g, p1);
            const Poly missing = exact_quotient(g, in1);
            const Poly in2 = gcd(g, p2);
            const bool covered = divides(missing, p2);
            const bool simple = (in1.is_constant() || roots_with_exact_power(p1, in1, 1)) &&
                                (in2.is_constant() || roots_with_exact_power(p2, in2, 1));
            if (!covered || !simple)
              r.fail(inst + " legs " + std::to_string(i + 1) + "." + std::to_string(j + 1) + "/" +
                         std::to_string(s + 1) + "." + std::to_string(t + 1),
                     "each root of " + str(g) + " simple in one leg", str(p1) + " ; " + str(p2));
          }
    if (!divides(pow(g, 2 * k - 2), direct_sum))
      r.fail(inst, "multiplicity >= 2k-2 in the leg direct sum for " + str(g), str(direct_sum));
  }

  const int lhs = (2 * k - 2) * es.count_with_multiplicity(k) + 2 * k * top;
  if (lhs > n - (k + 1)) r.fail(inst, "(2k-2)n_k + 2k n_{k+1} <= " + std::to_string(n - k - 1), std::to_string(lhs));
  return r;
}

AuditReport screen_multiplicity_list(const Tree& t, const std::vector<int>& mults) {
  AuditReport r;
  r.claim = "screen";
  r.checked = 1;
  std::ostringstream label;
  label << "<";
  for (std::size_t i = 0; i < mults.size(); ++i) label << (i ? "," : "") << mults[i];
  label << ">";
  const std::string inst = label.str();
  const int n = t.n();

  int sum = 0, top = 0;
  for (int m : mults) {
    if (m < 1) throw std::invalid_argument("multiplicities must be positive");
    sum += m;
    top = std::max(top, m);
  }
  if (sum != n) {
    r.fail(inst, "sum = n = " + std::to_string(n), std::to_string(sum));
    return r;
  }
  const int p = path_cover_number(t).number;
  if (top > p) {
    r.fail(inst, "max multiplicity <= p = " + std::to_string(p), std::to_string(top));
    return r;
  }
  const int d = diameter(t);
  if (static_cast<int>(mults.size()) < d + 1) {
    r.fail(inst, "q >= d + 1 = " + std::to_string(d + 1), std::to_string(mults.size()));
    return r;
  }
  for (int k = 1; k < top; ++k) {
    const int bound = n - max_coverage_by_k_paths(t, k).covered;
    const int count = static_cast<int>(std::count_if(mults.begin(), mults.end(), [k](int m) { return m >= k + 1; }));
    if (count > bound) {
      r.fail(inst, "#(mult >= " + std::to_string(k + 1) + ") <= " + std::to_string(bound), std::to_string(count));
      return r;
    }
  }
  return r;
}

}  // namespace acyclic
