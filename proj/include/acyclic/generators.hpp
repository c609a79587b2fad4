#pragma once

// Named graph families and a seeded random tree sampler.

#include "acyclic/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace acyclic {

Tree path_tree(int n);
/// Center 1, leaves 2..leaves+1.
Tree star_tree(int leaves);

/// Uniform labelled tree on n vertices from a random Pruefer sequence.
Tree random_tree(int n, std::uint64_t seed);

/// (k, l)-whirl: an axis joined to k spokes, each spoke carrying two pendant
/// legs of l vertices. legs[i][j] lists leg j of spoke i from the spoke
/// outward.
struct Whirl {
  Graph graph;
  int k = 0;
  int l = 0;
  int axis = 0;
  std::vector<int> spokes;
  std::vector<std::array<std::vector<int>, 2>> legs;
};

/// Labels: axis 1, spokes 2..k+1, then legs breadth-first: the t-th vertex of
/// leg j on spoke i is k + 2 + (t-1)*2k + 2(i-1) + j (i, t 1-based, j 0/1).
/// Throws std::invalid_argument unless k >= 2 and l >= 1.
Whirl whirl(int k, int l);

/// Recognises a (k, l)-whirl with the tree's own labels (smallest axis
/// label if several fit).
std::optional<Whirl> detect_whirl(const Graph& g);

/// The ten-vertex (3, 1)-whirl labelled with axis 6 and spokes 1, 2, 3.
Tree figure2_tree();
Whirl figure2_whirl();
Tree figure6_tree();

/// Six legs of l vertices hung in pairs on the anchors of a connected graph h.
/// Leg r occupies m + (r-1)l + 1 .. m + rl with its first vertex adjacent to
/// its anchor; legs 1, 2 hang on v1, legs 3, 4 on v2, legs 5, 6 on v3.
struct Figure14 {
  Graph graph;
  int m = 0;
  int l = 0;
  std::array<int, 3> anchors{};
  std::array<std::vector<int>, 6> legs;
  /// Pendant ends (i_s, j_s) of the two legs on anchor s.
  std::array<int, 3> i_pendant{};
  std::array<int, 3> j_pendant{};
};

/// Throws std::invalid_argument if h is disconnected, anchors are not
/// distinct labels of h, l < 1, or some pair of anchors lacks a unique
/// shortest path avoiding the third.
Figure14 figure14_graph(const Graph& h, std::array<int, 3> anchors, int l);

/// Number of shortest u-v paths in g with `avoid` deleted (0 if none).
long long count_shortest_paths(const Graph& g, int u, int v, int avoid);

}  // namespace acyclic
