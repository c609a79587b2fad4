#include "acyclic/spectra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace acyclic {

namespace {

class PoolDraw {
 public:
  PoolDraw(std::uint64_t seed, EntryPool pool) : eng_(seed), pool_(pool) {
    if (pool.radius < 1 || pool.max_den < 1) throw std::invalid_argument("entry pool needs radius >= 1 and max_den >= 1");
  }

  Rational any() {
    Rational r(std::uniform_int_distribution<int>(-pool_.radius, pool_.radius)(eng_),
               std::uniform_int_distribution<int>(1, pool_.max_den)(eng_));
    r.canonicalize();
    return r;
  }

  Rational nonzero() {
    int p = std::uniform_int_distribution<int>(1, pool_.radius)(eng_);
    if (std::uniform_int_distribution<int>(0, 1)(eng_) == 1) p = -p;
    Rational r(p, std::uniform_int_distribution<int>(1, pool_.max_den)(eng_));
    r.canonicalize();
    return r;
  }

  bool coin() { return std::uniform_int_distribution<int>(0, 1)(eng_) == 1; }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
  EntryPool pool_;
};

// Rooted shape of a tree: children lists and canonical (AHU) codes of the
// subtree under each vertex, children sorted by code.
struct RootedShape {
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  std::vector<int> code;
  std::vector<int> bfs;

  explicit RootedShape(const Graph& g) {
    const int n = g.n();
    parent.assign(static_cast<std::size_t>(n) + 1, 0);
    children.assign(static_cast<std::size_t>(n) + 1, {});
    code.assign(static_cast<std::size_t>(n) + 1, 0);
    bfs = {1};
    parent[1] = -1;
    for (std::size_t i = 0; i < bfs.size(); ++i)
      for (int w : g.neighbors(bfs[i]))
        if (parent[w] == 0) {
          parent[w] = bfs[i];
          children[bfs[i]].push_back(w);
          bfs.push_back(w);
        }
    std::map<std::vector<int>, int> ids;
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
      auto& kids = children[*it];
      std::stable_sort(kids.begin(), kids.end(), [&](int a, int b) { return code[a] < code[b]; });
      std::vector<int> key;
      for (int c : kids) key.push_back(code[c]);
      code[*it] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
    }
  }

  // Pairs up the vertices of two isomorphic subtrees.
  void match(int from, int to, std::vector<std::pair<int, int>>& out) const {
    out.emplace_back(from, to);
    const auto& a = children[from];
    const auto& b = children[to];
    for (std::size_t i = 0; i < a.size(); ++i) match(a[i], b[i], out);
  }
};

}  // namespace

EntryPool parse_entry_pool(const std::string& text) {
  EntryPool pool;
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    pool.radius = std::stoi(text.substr(0, slash), &used);
    if (used != text.substr(0, slash).size()) throw std::invalid_argument("trailing");
    if (slash != std::string::npos) {
      pool.max_den = std::stoi(text.substr(slash + 1), &used);
      if (used != text.size() - slash - 1) throw std::invalid_argument("trailing");
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad entry pool '" + text + "', expected R or R/D");
  }
  if (pool.radius < 1 || pool.max_den < 1) throw std::invalid_argument("entry pool needs positive radius and denominator");
  return pool;
}

RatSymMatrix sample_S(const Graph& g, std::uint64_t seed, EntryPool pool) {
  PoolDraw draw(seed, pool);
  const int n = g.n();
  RatMatrix a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = draw.any();
  for (const auto& [u, v] : g.edges()) a(u - 1, v - 1) = a(v - 1, u - 1) = draw.nonzero();
  return a;
}

RatSymMatrix sample_S_symmetric(const Tree& t, std::uint64_t seed, EntryPool pool) {
  RatMatrix a = sample_S(t.graph(), seed, pool);
  const RootedShape shape(t.graph());
  std::mt19937_64 eng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::pair<int, int>> pairs;
  for (auto it = shape.bfs.rbegin(); it != shape.bfs.rend(); ++it) {
    const int v = *it;
    if (std::uniform_int_distribution<int>(0, 1)(eng) == 0) continue;
    const auto& kids = shape.children[v];
    for (std::size_t i = 1; i < kids.size(); ++i) {
      // Children are sorted by code, so the class representative is the
      // first child carrying the same code.
      std::size_t rep = i;
      while (rep > 0 && shape.code[kids[rep - 1]] == shape.code[kids[i]]) --rep;
      if (rep == i) continue;
      pairs.clear();
      shape.match(kids[rep], kids[i], pairs);
      const int r0 = kids[rep] - 1;
      const int c0 = kids[i] - 1;
      a(v - 1, c0) = a(c0, v - 1) = a(v - 1, r0);
      for (const auto& [from, to] : pairs) {
        a(to - 1, to - 1) = a(from - 1, from - 1);
        const int pf = shape.parent[from];
        const int pt = shape.parent[to];
        if (from != kids[rep]) a(to - 1, pt - 1) = a(pt - 1, to - 1) = a(from - 1, pf - 1);
      }
    }
  }
  return a;
}

RatMatrix cayley_orthogonal(const RatMatrix& s) {
  if (!s.is_square()) throw std::invalid_argument("cayley transform needs a square matrix");
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j)
      if (s(i, j) != -s(j, i)) throw std::invalid_argument("cayley transform needs a skew-symmetric matrix");
  const RatMatrix id = RatMatrix::identity(s.rows());
  return (id - s) * inverse(id + s);
}

RatSymMatrix planted_spectrum_matrix(const std::vector<Rational>& values, std::uint64_t seed, int skew_radius) {
  const int n = static_cast<int>(values.size());
  std::mt19937_64 eng(seed);
  std::uniform_int_distribution<int> pick(-skew_radius, skew_radius);
  RatMatrix s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      s(i, j) = pick(eng);
      s(j, i) = -s(i, j);
    }
  const RatMatrix u = cayley_orthogonal(s);
  RatMatrix d(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = values[i];
  return u * d * u.transpose();
}

}  // namespace acyclic
