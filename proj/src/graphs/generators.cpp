#include "acyclic/generators.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>

namespace acyclic {

Tree path_tree(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return Tree(std::move(g));
}

Tree star_tree(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  Graph g(leaves + 1);
  for (int v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
  return Tree(std::move(g));
}

Tree random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random tree needs n >= 1");
  Graph g(n);
  if (n == 2) g.add_edge(1, 2);
  if (n <= 2) return Tree(std::move(g));

  std::mt19937_64 eng(seed);
  std::uniform_int_distribution<int> pick(1, n);
  std::vector<int> code(static_cast<std::size_t>(n) - 2);
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int& c : code) {
    c = pick(eng);
    ++degree[c];
  }
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int c : code) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    g.add_edge(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  g.add_edge(*leaves.begin(), *std::next(leaves.begin()));
  return Tree(std::move(g));
}

Whirl whirl(int k, int l) {
  if (k < 2 || l < 1) throw std::invalid_argument("whirl needs k >= 2 and l >= 1");
  Whirl w;
  w.k = k;
  w.l = l;
  w.axis = 1;
  w.graph = Graph(2 * k * l + k + 1);
  w.legs.resize(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    const int spoke = i + 1;
    w.spokes.push_back(spoke);
    w.graph.add_edge(w.axis, spoke);
    for (int j = 0; j < 2; ++j) {
      int prev = spoke;
      for (int t = 1; t <= l; ++t) {
        const int v = k + 2 + (t - 1) * 2 * k + 2 * (i - 1) + j;
        w.graph.add_edge(prev, v);
        w.legs[i - 1][j].push_back(v);
        prev = v;
      }
    }
  }
  return w;
}

namespace {

// Vertices from `start` away from `from` while the degree stays 2; empty if
// the walk meets a branch vertex instead of ending at a pendant.
std::vector<int> walk_leg(const Graph& g, int from, int start) {
  std::vector<int> leg{start};
  int prev = from, cur = start;
  while (g.degree(cur) == 2) {
    const auto& nb = g.neighbors(cur);
    const int next = nb[0] == prev ? nb[1] : nb[0];
    leg.push_back(next);
    prev = cur;
    cur = next;
  }
  if (g.degree(cur) != 1) return {};
  return leg;
}

}  // namespace

std::optional<Whirl> detect_whirl(const Graph& g) {
  if (!is_tree(g)) return std::nullopt;
  for (int axis = 1; axis <= g.n(); ++axis) {
    const int k = g.degree(axis);
    if (k < 2) continue;
    Whirl w;
    w.k = k;
    w.axis = axis;
    bool ok = true;
    for (int spoke : g.neighbors(axis)) {
      if (g.degree(spoke) != 3) {
        ok = false;
        break;
      }
      std::array<std::vector<int>, 2> pair;
      int j = 0;
      for (int x : g.neighbors(spoke)) {
        if (x == axis) continue;
        pair[j] = walk_leg(g, spoke, x);
        if (pair[j].empty()) ok = false;
        ++j;
      }
      if (!ok) break;
      w.spokes.push_back(spoke);
      w.legs.push_back(std::move(pair));
    }
    if (!ok) continue;
    w.l = static_cast<int>(w.legs[0][0].size());
    for (const auto& pair : w.legs)
      for (const auto& leg : pair) ok = ok && static_cast<int>(leg.size()) == w.l;
    if (!ok || g.n() != 2 * k * w.l + k + 1) continue;
    w.graph = g;
    return w;
  }
  return std::nullopt;
}

Tree figure2_tree() {
  return Tree(Graph(10, {{1, 4}, {1, 5}, {1, 6}, {2, 6}, {2, 7}, {2, 8}, {3, 6}, {3, 9}, {3, 10}}));
}

Whirl figure2_whirl() {
  Whirl w;
  w.graph = figure2_tree().graph();
  w.k = 3;
  w.l = 1;
  w.axis = 6;
  w.spokes = {1, 2, 3};
  w.legs = {{std::vector<int>{4}, std::vector<int>{5}},
            {std::vector<int>{7}, std::vector<int>{8}},
            {std::vector<int>{9}, std::vector<int>{10}}};
  return w;
}

Tree figure6_tree() {
  return Tree(Graph(10, {{3, 1}, {1, 4}, {1, 6}, {6, 5}, {6, 7}, {7, 8}, {7, 2}, {2, 9}, {2, 10}}));
}

long long count_shortest_paths(const Graph& g, int u, int v, int avoid) {
  if (u == avoid || v == avoid) return 0;
  std::vector<int> dist(static_cast<std::size_t>(g.n()) + 1, -1);
  std::vector<long long> ways(static_cast<std::size_t>(g.n()) + 1, 0);
  std::deque<int> queue{u};
  dist[u] = 0;
  ways[u] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : g.neighbors(x)) {
      if (y == avoid) continue;
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
      if (dist[y] == dist[x] + 1) ways[y] += ways[x];
    }
  }
  return ways[v];
}

Figure14 figure14_graph(const Graph& h, std::array<int, 3> anchors, int l) {
  const int m = h.n();
  if (l < 1) throw std::invalid_argument("figure14: legs need l >= 1");
  if (m < 3 || !is_connected(h)) throw std::invalid_argument("figure14: h must be connected with at least 3 vertices");
  for (int a : anchors)
    if (a < 1 || a > m) throw std::invalid_argument("figure14: anchor " + std::to_string(a) + " is not a vertex of h");
  if (anchors[0] == anchors[1] || anchors[0] == anchors[2] || anchors[1] == anchors[2])
    throw std::invalid_argument("figure14: anchors must be distinct");
  for (int s = 0; s < 3; ++s)
    for (int t = s + 1; t < 3; ++t) {
      const int other = 3 - s - t;
      const long long ways = count_shortest_paths(h, anchors[s], anchors[t], anchors[other]);
      if (ways != 1)
        throw std::invalid_argument("figure14: " + std::to_string(ways) + " shortest paths from " +
                                    std::to_string(anchors[s]) + " to " + std::to_string(anchors[t]) + " avoiding " +
                                    std::to_string(anchors[other]) + ", need exactly 1");
    }

  Figure14 f;
  f.m = m;
  f.l = l;
  f.anchors = anchors;
  f.graph = Graph(m + 6 * l);
  for (const auto& [u, v] : h.edges()) f.graph.add_edge(u, v);
  for (int r = 1; r <= 6; ++r) {
    int prev = anchors[(r - 1) / 2];
    for (int t = 1; t <= l; ++t) {
      const int v = m + (r - 1) * l + t;
      f.graph.add_edge(prev, v);
      f.legs[r - 1].push_back(v);
      prev = v;
    }
  }
  for (int s = 0; s < 3; ++s) {
    f.i_pendant[s] = f.legs[2 * s].back();
    f.j_pendant[s] = f.legs[2 * s + 1].back();
  }
  return f;
}

}  // namespace acyclic
