#include "acyclic/auditor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace acyclic {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a * 0x9e3779b97f4a7c15ULL + b + 0x632be59bd9b4e019ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int pick(std::uint64_t seed, int lo, int hi) { return lo + static_cast<int>(seed % static_cast<std::uint64_t>(hi - lo + 1)); }

// Rotates through the generic, the symmetry-copying and the small-entry
// samplers so that repeated eigenvalues show up regularly.
RatSymMatrix sample_for(const Graph& g, std::uint64_t seed, const EntryPool& pool) {
  if (is_tree(g)) {
    const Tree t(g);
    switch (seed % 3) {
      case 0: return sample_S(g, seed, pool);
      case 1: return sample_S_symmetric(t, seed, pool);
      default: return sample_S_symmetric(t, seed, {1, 1});
    }
  }
  return seed % 2 == 0 ? sample_S(g, seed, pool) : sample_S(g, seed, {1, 1});
}

Tree tree_for(std::uint64_t seed, int lo, int hi) { return random_tree(pick(seed, lo, hi), seed); }

PathFamily random_family(const Tree& t, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  const int n = t.n();
  const int target = 1 + static_cast<int>(eng() % static_cast<std::uint64_t>(std::min(3, n)));
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  PathFamily f;
  for (int s = 0; s < target; ++s) {
    std::vector<int> free;
    for (int v = 1; v <= n; ++v)
      if (!used[v]) free.push_back(v);
    if (free.empty()) break;
    std::vector<int> path{free[eng() % free.size()]};
    used[path[0]] = 1;
    while (eng() % 3 != 0) {
      std::vector<int> next;
      for (int w : t.graph().neighbors(path.back()))
        if (!used[w]) next.push_back(w);
      if (next.empty()) break;
      path.push_back(next[eng() % next.size()]);
      used[path.back()] = 1;
    }
    if (eng() % 2 == 0) std::reverse(path.begin(), path.end());
    f.paths.push_back(std::move(path));
  }
  return f;
}

// Symmetric polynomial matrix with degree <= 1 entries on the tree pattern.
PolyMatrix random_pattern_matrix(const Tree& t, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_int_distribution<int> c(-2, 2);
  const int n = t.n();
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Poly{Rational(c(eng)), Rational(c(eng))};
  for (const auto& [u, v] : t.graph().edges()) {
    Poly p;
    while (p.is_zero()) p = Poly{Rational(c(eng)), Rational(c(eng))};
    m(u - 1, v - 1) = m(v - 1, u - 1) = p;
  }
  return m;
}

using SeedAudit = std::function<AuditReport(int index, std::uint64_t seed)>;

AuditReport guarded(const SeedAudit& audit, int index, std::uint64_t seed) {
  try {
    return audit(index, seed);
  } catch (const std::exception& e) {
    AuditReport r;
    r.checked = 1;
    r.fail("seed index " + std::to_string(index), "no error", e.what());
    return r;
  }
}

AuditReport over_seeds(const std::string& claim, const BatchOptions& o, std::uint64_t salt, const SeedAudit& audit) {
  std::vector<AuditReport> parts(static_cast<std::size_t>(std::max(o.seeds, 0)));
  const std::uint64_t root = mix(o.base_seed, salt);
  if (o.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int s = 0; s < o.seeds; ++s) parts[s] = guarded(audit, s, mix(root, static_cast<std::uint64_t>(s)));
  } else {
    for (int s = 0; s < o.seeds; ++s) parts[s] = guarded(audit, s, mix(root, static_cast<std::uint64_t>(s)));
  }
  AuditReport out;
  out.claim = claim;
  for (const auto& p : parts) out.merge(p);
  return out;
}

// FNV-1a, so seeds do not depend on the standard library's string hash.
std::uint64_t salt_of(const std::string& claim) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : claim) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

void add(AuditReport& into, AuditReport part, const std::string& prefix) {
  for (auto& v : part.violations) v.instance = prefix + ": " + v.instance;
  into.merge(part);
}

RatSymMatrix example36_matrix() {
  RatMatrix a(10, 10);
  for (const auto& [u, v] : figure2_tree().graph().edges()) a(u - 1, v - 1) = a(v - 1, u - 1) = 1;
  return a;
}

AuditReport claim_thm23(const BatchOptions& o) {
  AuditReport r = over_seeds("thm-2.3", o, salt_of("thm-2.3"), [&](int, std::uint64_t seed) {
    if (seed % 2 == 0) {
      const Tree t = tree_for(seed, 2, o.max_tree);
      return audit_factor_structure(sample_for(t, seed >> 1, o.pool));
    }
    std::mt19937_64 eng(seed);
    std::vector<Rational> values(static_cast<std::size_t>(pick(seed >> 8, 2, 6)));
    for (auto& v : values) v = std::uniform_int_distribution<int>(-2, 2)(eng);
    return audit_factor_structure(planted_spectrum_matrix(values, seed));
  });
  add(r, audit_factor_structure(example36_matrix()), "ten-vertex example");
  return r;
}

AuditReport claim_thm33(const BatchOptions& o) {
  AuditReport r = over_seeds("thm-3.3", o, salt_of("thm-3.3"), [&](int, std::uint64_t seed) {
    const Tree t = tree_for(seed, 1, 9);
    return audit_submatrix_identity(random_pattern_matrix(t, seed), t, random_family(t, seed >> 3));
  });
  std::map<std::string, int> signs;
  for (const auto& note : r.notes) ++signs[note];
  r.notes.clear();
  for (const auto& [sign, count] : signs) r.notes.push_back(sign + " x" + std::to_string(count));
  return r;
}

AuditReport claim_cor34(const BatchOptions& o) {
  AuditReport r = over_seeds("cor-3.4", o, salt_of("cor-3.4"), [&](int, std::uint64_t seed) {
    const Tree t = tree_for(seed, 2, o.max_tree);
    return audit_path_deletion(sample_for(t, seed >> 1, o.pool), t, random_family(t, seed >> 3));
  });
  const RatSymMatrix ex = example36_matrix();
  for (const auto& st : example36_steps()) add(r, audit_path_deletion(ex, figure2_tree(), st.paths), "ten-vertex example");
  return r;
}

AuditReport claim_cor35(const BatchOptions& o) {
  AuditReport r = over_seeds("cor-3.5", o, salt_of("cor-3.5"), [&](int, std::uint64_t seed) {
    const Tree t = tree_for(seed, 2, o.max_tree);
    return audit_count_bound(sample_for(t, seed >> 1, o.pool), t);
  });
  add(r, audit_count_bound(example36_matrix(), figure2_tree()), "ten-vertex example");
  return r;
}

AuditReport claim_tree_bound(const std::string& claim, Bound b, const BatchOptions& o) {
  return over_seeds(claim, o, salt_of(claim), [&](int, std::uint64_t seed) {
    const Tree t = tree_for(seed, 2, o.max_tree);
    return audit_bounds(sample_for(t, seed >> 1, o.pool), t, b);
  });
}

AuditReport claim_thm51(const BatchOptions& o) {
  constexpr int kTrees = 20;
  std::vector<Tree> trees;
  for (int i = 0; i < kTrees; ++i) trees.push_back(tree_for(mix(o.base_seed, 5100 + i), 2, o.max_tree));
  return over_seeds("thm-5.1", o, salt_of("thm-5.1"), [&](int, std::uint64_t seed) {
    AuditReport r;
    for (int i = 0; i < kTrees; ++i)
      add(r, audit_bounds(sample_for(trees[i], mix(seed, i), o.pool), trees[i], Bound::QGeD1),
          "tree " + std::to_string(i) + " n=" + std::to_string(trees[i].n()));
    return r;
  });
}

AuditReport claim_whirls(const std::string& claim, const std::vector<std::pair<int, int>>& shapes,
                         const std::function<AuditReport(const RatSymMatrix&, const Whirl&)>& audit,
                         const BatchOptions& o) {
  std::vector<Whirl> ws;
  for (const auto& [k, l] : shapes) ws.push_back(whirl(k, l));
  return over_seeds(claim, o, salt_of(claim), [&](int, std::uint64_t seed) {
    AuditReport r;
    for (const Whirl& w : ws)
      add(r, audit(sample_for(w.graph, mix(seed, w.k * 100 + w.l), o.pool), w),
          "whirl(" + std::to_string(w.k) + "," + std::to_string(w.l) + ")");
    return r;
  });
}

std::vector<Figure14> figure14_targets() {
  Graph cycle(6);
  for (int v = 1; v <= 6; ++v) cycle.add_edge(v, v % 6 + 1);
  return {figure14_graph(cycle, {1, 3, 5}, 4), figure14_graph(star_tree(3).graph(), {2, 3, 4}, 4)};
}

AuditReport claim_thm61(const BatchOptions& o) {
  const std::vector<Figure14> targets = figure14_targets();
  return over_seeds("thm-6.1", o, salt_of("thm-6.1"), [&](int, std::uint64_t seed) {
    AuditReport r;
    for (std::size_t i = 0; i < targets.size(); ++i)
      add(r, audit_bounds(sample_for(targets[i].graph, mix(seed, i), o.pool), targets[i]),
          "figure14 m=" + std::to_string(targets[i].m));
    return r;
  });
}

AuditReport claim_ex36() {
  AuditReport r;
  r.claim = "ex-3.6";
  const auto steps = example36_steps();
  const AuditReport realized = example36_certificate(steps, eigen_structure(example36_matrix()));
  add(r, realized, "realized spectrum");
  std::vector<Rational> fake;
  for (int v : {2, 3, 3, 5, 5, 5, 5, 7, 7, 10}) fake.push_back(v);
  AuditReport rejected = example36_certificate(steps, fake);
  r.checked += rejected.checked;
  if (rejected.passed()) r.fail("sigma=(2,3,3,5,5,5,5,7,7,10)", "rejected", "accepted");
  else r.notes.push_back("sigma=(2,3,3,5,5,5,5,7,7,10) rejected: " + rejected.violations.front().observed);
  return r;
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {"thm-2.3", "thm-3.3", "cor-3.4", "cor-3.5", "cor-4.1", "thm-5.1",
                                               "lem-5.3", "thm-5.2", "thm-5.4", "thm-6.1", "ex-3.6", "extremes-simple"};
  return ids;
}

AuditReport run_claim(const std::string& claim, const BatchOptions& o) {
  if (claim == "thm-2.3") return claim_thm23(o);
  if (claim == "thm-3.3") return claim_thm33(o);
  if (claim == "cor-3.4") return claim_cor34(o);
  if (claim == "cor-3.5") return claim_cor35(o);
  if (claim == "cor-4.1") return claim_tree_bound(claim, Bound::MLeP, o);
  if (claim == "thm-5.1") return claim_thm51(o);
  if (claim == "lem-5.3")
    return claim_whirls(claim, {{3, 2}, {4, 2}}, [](const RatSymMatrix& a, const Whirl& w) { return audit_whirl_lemma(a, w); }, o);
  if (claim == "thm-5.2")
    return claim_whirls(claim, {{3, 2}, {3, 3}},
                        [](const RatSymMatrix& a, const Whirl& w) { return audit_bounds(a, w.graph, Bound::Whirl52); }, o);
  if (claim == "thm-5.4")
    return claim_whirls(claim, {{4, 2}, {4, 3}},
                        [](const RatSymMatrix& a, const Whirl& w) { return audit_bounds(a, w.graph, Bound::Whirl54); }, o);
  if (claim == "thm-6.1") return claim_thm61(o);
  if (claim == "ex-3.6") return claim_ex36();
  if (claim == "extremes-simple") return claim_tree_bound(claim, Bound::ExtremesSimple, o);
  throw std::invalid_argument("unknown claim '" + claim + "'");
}

}  // namespace acyclic
