#include "acyclic/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace acyclic {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 1 || v < 1 || u > n() || v > n())
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " has a label outside 1.." +
                                std::to_string(n()));
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  auto insert = [](std::vector<int>& list, int w) { list.insert(std::lower_bound(list.begin(), list.end(), w), w); };
  insert(adj_[u - 1], v);
  insert(adj_[v - 1], u);
  ++edges_;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 1 || v < 1 || u > n() || v > n()) return false;
  const auto& list = adj_[u - 1];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= n(); ++u)
    for (int v : adj_[u - 1])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Tree::Tree(Graph g) : g_(std::move(g)) {
  if (g_.n() == 0 || !is_tree(g_)) throw std::invalid_argument("graph is not a tree");
}

int PathFamily::covered() const {
  int c = 0;
  for (const auto& p : paths) c += static_cast<int>(p.size());
  return c;
}

std::vector<int> PathFamily::vertices() const {
  std::vector<int> out;
  for (const auto& p : paths) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

void validate_path_family(const Graph& g, const PathFamily& f) {
  std::vector<char> used(static_cast<std::size_t>(g.n()) + 1, 0);
  for (const auto& path : f.paths) {
    if (path.empty()) throw std::invalid_argument("empty path in family");
    for (std::size_t i = 0; i < path.size(); ++i) {
      const int v = path[i];
      if (v < 1 || v > g.n()) throw std::invalid_argument("path vertex " + std::to_string(v) + " not in graph");
      if (used[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " is covered twice");
      used[v] = 1;
      if (i > 0 && !g.has_edge(path[i - 1], v))
        throw std::invalid_argument("path step " + std::to_string(path[i - 1]) + "-" + std::to_string(v) +
                                    " is not an edge");
    }
  }
}

Subgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<int> index(static_cast<std::size_t>(g.n()) + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 1 || v > g.n()) throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
    index[v] = static_cast<int>(i) + 1;
  }
  Subgraph out{Graph(static_cast<int>(vertices.size())), vertices};
  for (const auto& [u, v] : g.edges())
    if (index[u] && index[v]) out.graph.add_edge(index[u], index[v]);
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::deque<int> queue{source};
  dist.at(source - 1) = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u))
      if (dist[w - 1] < 0) {
        dist[w - 1] = dist[u - 1] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.n()) + 1, 0);
  for (int s = 1; s <= g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).size() == 1; }

bool is_forest(const Graph& g) {
  return g.edge_count() + static_cast<int>(connected_components(g).size()) == g.n();
}

bool is_tree(const Graph& g) { return g.n() >= 1 && g.edge_count() == g.n() - 1 && is_connected(g); }

int diameter(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("diameter of the empty graph");
  if (!is_connected(g)) throw std::invalid_argument("diameter of a disconnected graph");
  int d = 0;
  for (int s = 1; s <= g.n(); ++s) {
    const auto dist = bfs_distances(g, s);
    d = std::max(d, *std::max_element(dist.begin(), dist.end()));
  }
  return d;
}

namespace {

// Smallest label at maximal distance from `source`, with BFS parents.
int farthest(const Graph& g, int source, std::vector<int>* parent) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  parent->assign(static_cast<std::size_t>(g.n()), 0);
  std::deque<int> queue{source};
  dist[source - 1] = 0;
  int best = source;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (dist[u - 1] > dist[best - 1] || (dist[u - 1] == dist[best - 1] && u < best)) best = u;
    for (int w : g.neighbors(u))
      if (dist[w - 1] < 0) {
        dist[w - 1] = dist[u - 1] + 1;
        (*parent)[w - 1] = u;
        queue.push_back(w);
      }
  }
  return best;
}

}  // namespace

std::vector<int> diameter_path(const Tree& t) {
  std::vector<int> parent;
  const int u = farthest(t.graph(), 1, &parent);
  const int end = farthest(t.graph(), u, &parent);
  std::vector<int> path{end};
  while (path.back() != u) path.push_back(parent[path.back() - 1]);
  std::reverse(path.begin(), path.end());
  return path;
}

Subgraph delete_paths(const Graph& t, const PathFamily& f) {
  validate_path_family(t, f);
  std::vector<char> covered(static_cast<std::size_t>(t.n()) + 1, 0);
  for (const auto& p : f.paths)
    for (int v : p) covered[v] = 1;
  std::vector<int> rest;
  for (int v = 1; v <= t.n(); ++v)
    if (!covered[v]) rest.push_back(v);
  return induced_subgraph(t, rest);
}

namespace {

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw std::invalid_argument("graph file is empty");
  std::istringstream head(lines[0]);
  int n = 0;
  std::string extra;
  if (!(head >> n) || n < 0 || (head >> extra)) throw std::invalid_argument("graph file: first line must be the vertex count");
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    int u = 0, v = 0;
    if (!(row >> u >> v) || (row >> extra))
      throw std::invalid_argument("graph file: bad edge line '" + lines[i] + "'");
    g.add_edge(u, v);
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace acyclic
