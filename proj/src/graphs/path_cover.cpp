#include "acyclic/path_cover.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <cstdint>
#include <stdexcept>

namespace acyclic {

namespace {

std::vector<int> relabel(const std::vector<int>& path, const std::vector<int>& labels) {
  std::vector<int> out;
  out.reserve(path.size());
  for (int v : path) out.push_back(labels[v - 1]);
  return out;
}

// The inductive construction on a tree labelled 1..n.
std::vector<int> special_path_of(const Graph& g) {
  if (g.n() == 1) return {1};
  if (g.n() == 2) return {1, 2};
  const std::vector<int> longest = diameter_path(Tree(g));
  if (longest.size() == 3) return longest;

  const int u = longest[0];
  const int v = longest[1];
  const int a1 = longest[2];
  std::vector<int> rest;
  for (int w = 1; w <= g.n(); ++w)
    if (w != u) rest.push_back(w);
  const Subgraph sub = induced_subgraph(g, rest);
  std::vector<int> inner = relabel(special_path_of(sub.graph), sub.labels);

  const auto at = std::find(inner.begin(), inner.end(), v);
  if (at == inner.end()) return inner;
  if (inner.back() == v) std::reverse(inner.begin(), inner.end());
  if (inner.front() == v) {
    inner.insert(inner.begin(), u);
    return inner;
  }
  // v is interior to the inner path, so it has a neighbour off the longest
  // path; maximality of the longest path forces that neighbour to be pendant.
  for (int w : g.neighbors(v))
    if (w != u && w != a1) return {u, v, w};
  throw std::logic_error("find_special_path: no third neighbour");
}

void cover_tree(const Graph& g, PathFamily& out, const std::vector<int>& labels);

void cover_forest(const Graph& g, PathFamily& out, const std::vector<int>& labels) {
  for (const auto& comp : connected_components(g)) {
    const Subgraph sub = induced_subgraph(g, comp);
    cover_tree(sub.graph, out, relabel(sub.labels, labels));
  }
}

void cover_tree(const Graph& g, PathFamily& out, const std::vector<int>& labels) {
  const std::vector<int> path = special_path_of(g);
  out.paths.push_back(relabel(path, labels));
  const Subgraph rest = delete_paths(g, PathFamily{{path}});
  cover_forest(rest.graph, out, relabel(rest.labels, labels));
}

std::vector<int> identity_labels(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  return labels;
}

// ---- exhaustive enumeration over edge subsets -------------------------------

struct EdgeSubsets {
  const Graph& g;
  std::vector<Edge> edges;
  int n;

  explicit EdgeSubsets(const Graph& graph) : g(graph), edges(graph.edges()), n(graph.n()) {
    const int cap = brute_force_cap(kPathEnumerationCap);
    if (n > cap) throw SizeCapExceeded("path enumeration", n, cap);
    if (!is_forest(g)) throw std::invalid_argument("path enumeration needs an acyclic graph");
  }

  std::uint64_t count() const { return std::uint64_t{1} << edges.size(); }

  // Every degree at most two; in a forest the components are then paths.
  bool valid(std::uint64_t mask, std::array<int, 64>& deg) const {
    std::fill(deg.begin(), deg.begin() + n + 1, 0);
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (mask >> e & 1U) {
        if (++deg[edges[e].first] > 2 || ++deg[edges[e].second] > 2) return false;
      }
    return true;
  }

  // Path components of the chosen edges, longest first, ties by first vertex.
  std::vector<std::vector<int>> paths(std::uint64_t mask) const {
    std::vector<std::array<int, 2>> link(static_cast<std::size_t>(n) + 1, {0, 0});
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (mask >> e & 1U) {
        const auto [a, b] = edges[e];
        link[a][deg[a]++] = b;
        link[b][deg[b]++] = a;
      }
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= n; ++s) {
      if (seen[s] || deg[s] == 2) continue;
      std::vector<int> path{s};
      seen[s] = 1;
      int prev = 0, cur = s;
      for (;;) {
        int next = 0;
        for (int i = 0; i < deg[cur]; ++i)
          if (link[cur][i] != prev) next = link[cur][i];
        if (next == 0) break;
        path.push_back(next);
        seen[next] = 1;
        prev = cur;
        cur = next;
      }
      out.push_back(std::move(path));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return out;
  }

  int top_k_size(std::uint64_t mask, int k) const {
    std::array<int, 64> sizes{};
    int count = 0;
    for (const auto& p : paths(mask)) sizes[count++] = static_cast<int>(p.size());
    int total = 0;
    for (int i = 0; i < std::min(k, count); ++i) total += sizes[i];
    return total;
  }
};

struct Best {
  int value = -1;
  std::uint64_t mask = 0;
  void offer(int v, std::uint64_t m) {
    if (v > value || (v == value && m < mask)) {
      value = v;
      mask = m;
    }
  }
};

template <typename Score>
Best best_subset_serial(const EdgeSubsets& es, Score score) {
  Best best;
  std::array<int, 64> deg{};
  for (std::uint64_t mask = 0; mask < es.count(); ++mask)
    if (es.valid(mask, deg)) best.offer(score(mask), mask);
  return best;
}

template <typename Score>
Best best_subset_parallel(const EdgeSubsets& es, Score score) {
  Best best;
  const auto total = static_cast<std::int64_t>(es.count());
#pragma omp parallel
  {
    Best local;
    std::array<int, 64> deg{};
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      const auto mask = static_cast<std::uint64_t>(i);
      if (es.valid(mask, deg)) local.offer(score(mask), mask);
    }
#pragma omp critical(acyclic_best_subset)
    best.offer(local.value, local.mask);
  }
  return best;
}

template <typename Score>
Best best_subset(const EdgeSubsets& es, Exec exec, Score score) {
  return exec == Exec::Parallel ? best_subset_parallel(es, score) : best_subset_serial(es, score);
}

// ---- rooted tree DP -----------------------------------------------------------

// Vertex state while its children are merged: uncovered, or on a path in
// which it currently has 0, 1 or 2 path neighbours.
enum State { kU = 0, kP0 = 1, kP1 = 2, kP2 = 3 };
constexpr int kNone = INT_MIN / 4;

using Table = std::array<std::vector<int>, 4>;

class CoverageDp {
 public:
  CoverageDp(const Graph& g, int k) : g_(g), k_(k) {
    const int n = g.n();
    parent_.assign(static_cast<std::size_t>(n) + 1, 0);
    children_.assign(static_cast<std::size_t>(n) + 1, {});
    steps_.assign(static_cast<std::size_t>(n) + 1, {});
    std::vector<int> order{1};
    parent_[1] = -1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int w : g.neighbors(order[i]))
        if (parent_[w] == 0) {
          parent_[w] = order[i];
          children_[order[i]].push_back(w);
          order.push_back(w);
        }
    for (auto it = order.rbegin(); it != order.rend(); ++it) solve(*it);
  }

  Coverage result() {
    const Table& root = steps_[1].back();
    int best = kNone, bs = 0, bj = 0;
    for (int j = 0; j <= k_; ++j)
      for (int s = 0; s < 4; ++s)
        if (root[s][j] > best) {
          best = root[s][j];
          bs = s;
          bj = j;
        }
    covered_.assign(static_cast<std::size_t>(g_.n()) + 1, 0);
    links_.assign(static_cast<std::size_t>(g_.n()) + 1, {});
    backtrack(1, bs, bj);

    Coverage out;
    out.covered = best;
    std::vector<char> seen(static_cast<std::size_t>(g_.n()) + 1, 0);
    for (int s = 1; s <= g_.n(); ++s) {
      if (!covered_[s] || seen[s] || links_[s].size() == 2) continue;
      std::vector<int> path{s};
      seen[s] = 1;
      for (int prev = 0, cur = s;;) {
        int next = 0;
        for (int w : links_[cur])
          if (w != prev) next = w;
        if (next == 0) break;
        path.push_back(next);
        seen[next] = 1;
        prev = cur;
        cur = next;
      }
      out.witness.paths.push_back(std::move(path));
    }
    return out;
  }

 private:
  Table empty() const {
    Table t;
    for (auto& row : t) row.assign(static_cast<std::size_t>(k_) + 1, kNone);
    return t;
  }

  int closed(int c, int j) const {
    const Table& t = steps_[c].back();
    return std::max({t[kU][j], t[kP0][j], t[kP1][j], t[kP2][j]});
  }

  int open(int c, int j) const {
    const Table& t = steps_[c].back();
    return std::max(t[kP0][j], t[kP1][j]);
  }

  static void raise(int& slot, int value) { slot = std::max(slot, value); }

  void solve(int v) {
    Table t = empty();
    t[kU][0] = 0;
    if (k_ >= 1) t[kP0][1] = 1;
    steps_[v].push_back(t);
    for (int c : children_[v]) {
      const Table& prev = steps_[v].back();
      Table next = empty();
      for (int s = 0; s < 4; ++s)
        for (int jv = 0; jv <= k_; ++jv) {
          if (prev[s][jv] == kNone) continue;
          for (int jc = 0; jv + jc <= k_; ++jc)
            if (const int c_val = closed(c, jc); c_val != kNone) raise(next[s][jv + jc], prev[s][jv] + c_val);
          if (s != kP0 && s != kP1) continue;
          for (int jc = 1; jv + jc - 1 <= k_; ++jc)
            if (const int o_val = open(c, jc); o_val != kNone) raise(next[s + 1][jv + jc - 1], prev[s][jv] + o_val);
        }
      steps_[v].push_back(std::move(next));
    }
  }

  void backtrack(int v, int s, int j) {
    const auto& kids = children_[v];
    for (int i = static_cast<int>(kids.size()); i >= 1; --i) {
      const int c = kids[i - 1];
      const Table& prev = steps_[v][i - 1];
      const int target = steps_[v][i][s][j];
      bool found = false;
      for (int jv = 0; jv <= j && !found; ++jv) {
        const int jc = j - jv;
        if (prev[s][jv] == kNone || closed(c, jc) == kNone || prev[s][jv] + closed(c, jc) != target) continue;
        backtrack(c, best_state(c, jc, {kU, kP0, kP1, kP2}), jc);
        j = jv;
        found = true;
      }
      if (!found && (s == kP1 || s == kP2)) {
        for (int jv = 0; jv <= j + 1 && !found; ++jv) {
          const int jc = j - jv + 1;
          if (jc < 1 || jc > k_) continue;
          if (prev[s - 1][jv] == kNone || open(c, jc) == kNone || prev[s - 1][jv] + open(c, jc) != target) continue;
          backtrack(c, best_state(c, jc, {kP0, kP1}), jc);
          links_[v].push_back(c);
          links_[c].push_back(v);
          s -= 1;
          j = jv;
          found = true;
        }
      }
      if (!found) throw std::logic_error("max_coverage_by_k_paths: backtrack lost its trace");
    }
    covered_[v] = s != kU;
  }

  int best_state(int c, int j, std::initializer_list<int> states) const {
    const Table& t = steps_[c].back();
    int best = -1;
    for (int s : states)
      if (best < 0 || t[s][j] > t[best][j]) best = s;
    return best;
  }

  const Graph& g_;
  int k_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<Table>> steps_;
  std::vector<char> covered_;
  std::vector<std::vector<int>> links_;
};

}  // namespace

std::vector<int> find_special_path(const Tree& t) { return special_path_of(t.graph()); }

PathCover path_cover_number(const Graph& forest) {
  if (!is_forest(forest)) throw std::invalid_argument("path_cover_number needs an acyclic graph");
  PathCover out;
  cover_forest(forest, out.witness, identity_labels(forest.n()));
  out.number = out.witness.size();
  return out;
}

int path_cover_number_bruteforce(const Graph& forest, Exec exec) {
  const EdgeSubsets es(forest);
  const Best best = best_subset(es, exec, [](std::uint64_t mask) { return std::popcount(mask); });
  return es.n - best.value;
}

Coverage max_coverage_by_k_paths(const Tree& t, int k, CoverageStrategy strategy, Exec exec) {
  if (k < 1) throw std::invalid_argument("max_coverage_by_k_paths needs k >= 1");
  if (strategy == CoverageStrategy::TreeDp) return CoverageDp(t.graph(), k).result();

  const EdgeSubsets es(t.graph());
  const Best best = best_subset(es, exec, [&](std::uint64_t mask) { return es.top_k_size(mask, k); });
  Coverage out;
  out.covered = best.value;
  auto paths = es.paths(best.mask);
  if (static_cast<int>(paths.size()) > k) paths.resize(static_cast<std::size_t>(k));
  out.witness.paths = std::move(paths);
  return out;
}

}  // namespace acyclic
