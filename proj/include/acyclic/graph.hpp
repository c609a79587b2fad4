#pragma once

// Simple undirected graphs with 1-based vertex labels, trees, and families
// of vertex-disjoint paths.

#include <string>
#include <utility>
#include <vector>

namespace acyclic {

using Edge = std::pair<int, int>;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws std::invalid_argument on loops, duplicates or labels outside 1..n.
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edges_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  /// Sorted ascending.
  const std::vector<int>& neighbors(int v) const { return adj_.at(v - 1); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  /// Each edge once as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  int edges_ = 0;
};

/// A graph that is connected with n - 1 edges. Construction validates.
class Tree {
 public:
  /// Throws std::invalid_argument unless g is a tree (n >= 1).
  explicit Tree(Graph g);
  const Graph& graph() const { return g_; }
  int n() const { return g_.n(); }
  operator const Graph&() const { return g_; }

 private:
  Graph g_;
};

/// Vertex-disjoint paths, each a sequence of labels along edges.
struct PathFamily {
  std::vector<std::vector<int>> paths;

  int size() const { return static_cast<int>(paths.size()); }
  int covered() const;
  /// Sorted labels of every path vertex.
  std::vector<int> vertices() const;
};

/// Throws std::invalid_argument if some path repeats a vertex, steps along a
/// non-edge, is empty, or meets another path.
void validate_path_family(const Graph& g, const PathFamily& f);

/// Induced subgraph relabelled 1..k; `labels[i]` is the host label of i+1.
struct Subgraph {
  Graph graph;
  std::vector<int> labels;
};

Subgraph induced_subgraph(const Graph& g, std::vector<int> vertices);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

/// Components as sorted label lists, ordered by smallest label.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Edge counts from `source` (-1 when unreachable), indexed by label - 1.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Throws std::invalid_argument for disconnected or empty graphs.
int diameter(const Graph& g);

/// Vertices of a longest path, found by two breadth-first sweeps (trees).
std::vector<int> diameter_path(const Tree& t);

/// Remaining vertices after removing every path of f, as an induced subgraph.
/// Throws std::invalid_argument if f is not a disjoint path family of t.
Subgraph delete_paths(const Graph& t, const PathFamily& f);

/// Graph file: first line n, then one "u v" edge per line; '#' comments.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

}  // namespace acyclic
