#include "acyclic/generators.hpp"
#include "acyclic/graph.hpp"
#include "acyclic/path_cover.hpp"

#include "doctest.h"

#include <algorithm>
#include <stdexcept>

using namespace acyclic;

namespace {

// Ends pendant in t (or the whole tree), at most one vertex of degree >= 3.
void check_special(const Tree& t, const std::vector<int>& path) {
  validate_path_family(t, PathFamily{{path}});
  if (static_cast<int>(path.size()) == t.n()) return;
  CHECK(t.graph().degree(path.front()) == 1);
  CHECK(t.graph().degree(path.back()) == 1);
  int high = 0;
  for (int v : path) high += t.graph().degree(v) >= 3 ? 1 : 0;
  CHECK(high <= 1);
}

void check_cover(const Graph& g, const PathCover& cover) {
  validate_path_family(g, cover.witness);
  CHECK(cover.witness.size() == cover.number);
  CHECK(cover.witness.covered() == g.n());
}

}  // namespace

TEST_CASE("graph construction rejects malformed input") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Tree(Graph(3, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("trees and components") {
  CHECK(is_tree(path_tree(3)));
  const Graph triangle(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK_FALSE(is_tree(triangle));
  CHECK_FALSE(is_forest(triangle));
  CHECK(is_tree(figure2_tree()));
  const Graph two(4, {{1, 3}, {2, 4}});
  CHECK(connected_components(two) == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
  CHECK(is_forest(two));
}

TEST_CASE("diameter") {
  for (int n = 1; n <= 7; ++n) CHECK(diameter(path_tree(n)) == n - 1);
  CHECK(diameter(figure2_tree()) == 4);
  CHECK(diameter(figure6_tree()) == 5);  // 3-1-6-7-2-9
  for (int k = 2; k <= 5; ++k)
    for (int l = 1; l <= 4; ++l) CHECK(diameter(whirl(k, l).graph) == 2 * l + 2);
  CHECK_THROWS_AS(diameter(Graph(4, {{1, 3}, {2, 4}})), std::invalid_argument);
  CHECK(diameter_path(figure2_tree()).size() == 5);
}

TEST_CASE("special path") {
  const Tree star = star_tree(3);
  const auto s = find_special_path(star);
  CHECK(s.size() == 3);
  CHECK(s[1] == 1);
  check_special(star, s);

  const Tree fig6 = figure6_tree();
  const auto p = find_special_path(fig6);
  check_special(fig6, p);
  CHECK(p.size() == 3);

  const Tree path = path_tree(6);
  auto whole = find_special_path(path);
  if (whole.front() != 1) std::reverse(whole.begin(), whole.end());
  CHECK(whole == std::vector<int>{1, 2, 3, 4, 5, 6});

  CHECK(find_special_path(path_tree(1)) == std::vector<int>{1});
}

TEST_CASE("path cover number") {
  CHECK(path_cover_number(path_tree(5)).number == 1);
  const PathCover fig6 = path_cover_number(figure6_tree());
  CHECK(fig6.number == 3);
  check_cover(figure6_tree(), fig6);
  CHECK(path_cover_number(figure2_tree()).number == 4);
  for (int k = 2; k <= 5; ++k)
    for (int l = 1; l <= 4; ++l) {
      const Whirl w = whirl(k, l);
      const PathCover c = path_cover_number(w.graph);
      CHECK(c.number == k + 1);
      check_cover(w.graph, c);
    }
  CHECK(path_cover_number(Graph(3)).number == 3);
}

TEST_CASE("brute-force path cover") {
  CHECK(path_cover_number_bruteforce(star_tree(3)) == 2);
  CHECK(path_cover_number_bruteforce(figure2_tree()) == 4);
  CHECK(path_cover_number_bruteforce(figure2_tree(), Exec::Parallel) == 4);
  CHECK(path_cover_number_bruteforce(path_tree(9)) == 1);
  CHECK_THROWS_AS(path_cover_number_bruteforce(path_tree(15)), SizeCapExceeded);
  CHECK_THROWS_AS(path_cover_number_bruteforce(Graph(3, {{1, 2}, {2, 3}, {1, 3}})), std::invalid_argument);
}

TEST_CASE("maximum coverage by k paths") {
  const Tree fig2 = figure2_tree();
  for (auto strategy : {CoverageStrategy::Exhaustive, CoverageStrategy::TreeDp}) {
    const Coverage c = max_coverage_by_k_paths(fig2, 3, strategy);
    CHECK(c.covered == 9);
    validate_path_family(fig2, c.witness);
    CHECK(c.witness.covered() == 9);
    CHECK(c.witness.size() <= 3);
  }
  for (int l = 1; l <= 4; ++l) {
    const Tree w(whirl(3, l).graph);
    CHECK(max_coverage_by_k_paths(w, 3).covered == w.n() - 1);
  }
  CHECK(max_coverage_by_k_paths(fig2, 4).covered == 10);
  CHECK(max_coverage_by_k_paths(fig2, 7, CoverageStrategy::Exhaustive).covered == 10);
  CHECK(max_coverage_by_k_paths(fig2, 1).covered == 5);
  CHECK_THROWS_AS(max_coverage_by_k_paths(fig2, 0), std::invalid_argument);
  CHECK_THROWS_AS(max_coverage_by_k_paths(Tree(whirl(3, 2).graph), 2, CoverageStrategy::Exhaustive),
                  SizeCapExceeded);
}

TEST_CASE("delete paths") {
  const Tree fig2 = figure2_tree();
  const Subgraph a = delete_paths(fig2, PathFamily{{{4, 1, 5}, {7, 2, 8}, {10, 3, 9}}});
  CHECK(a.labels == std::vector<int>{6});
  const Subgraph b = delete_paths(fig2, PathFamily{{{4, 1, 6, 2, 7}, {10, 3, 9}, {8}}});
  CHECK(b.labels == std::vector<int>{5});
  const Subgraph c = delete_paths(fig2, path_cover_number(fig2).witness);
  CHECK(c.graph.n() == 0);
  CHECK_THROWS_AS(delete_paths(fig2, PathFamily{{{4, 1}, {1, 5}}}), std::invalid_argument);
  CHECK_THROWS_AS(delete_paths(fig2, PathFamily{{{4, 5}}}), std::invalid_argument);
}

TEST_CASE("generators") {
  const Whirl w31 = whirl(3, 1);
  CHECK(w31.graph.n() == 10);
  for (int k = 2; k <= 5; ++k)
    for (int l = 1; l <= 4; ++l) CHECK(whirl(k, l).graph.n() == 2 * k * l + k + 1);
  CHECK_THROWS_AS(whirl(1, 2), std::invalid_argument);

  const Whirl w = whirl(3, 2);
  CHECK(w.legs[0][0] == std::vector<int>{5, 11});
  CHECK(w.legs[2][1] == std::vector<int>{10, 16});

  const auto seen = detect_whirl(figure2_tree());
  REQUIRE(seen.has_value());
  CHECK(seen->k == 3);
  CHECK(seen->l == 1);
  CHECK(seen->axis == 6);
  CHECK(seen->spokes == figure2_whirl().spokes);
  CHECK(seen->legs == figure2_whirl().legs);

  for (int k = 2; k <= 4; ++k)
    for (int l = 1; l <= 3; ++l) {
      const auto d = detect_whirl(whirl(k, l).graph);
      REQUIRE(d.has_value());
      CHECK(d->k == k);
      CHECK(d->l == l);
      CHECK(d->axis == 1);
    }
  CHECK_FALSE(detect_whirl(figure6_tree()).has_value());
  CHECK_FALSE(detect_whirl(path_tree(7)).has_value());

  const auto fig6 = figure6_tree().graph().edges();
  CHECK(fig6.size() == 9);
  CHECK(figure6_tree().graph().has_edge(2, 10));
}

TEST_CASE("six legs on three anchors") {
  Graph cycle(6);
  for (int v = 1; v <= 6; ++v) cycle.add_edge(v, v % 6 + 1);
  const Figure14 f = figure14_graph(cycle, {1, 3, 5}, 4);
  CHECK(f.graph.n() == 30);
  CHECK(f.graph.edge_count() == 6 + 24);
  CHECK(f.legs[0] == std::vector<int>{7, 8, 9, 10});
  CHECK(f.graph.has_edge(1, 7));
  CHECK(f.graph.has_edge(1, 11));
  CHECK(f.graph.has_edge(5, 27));
  CHECK(f.i_pendant == std::array<int, 3>{10, 18, 26});
  CHECK(f.j_pendant == std::array<int, 3>{14, 22, 30});
  for (int v : f.i_pendant) CHECK(f.graph.degree(v) == 1);

  // Square 1-2-3-4 with a pendant 5 on vertex 1: two shortest 1-3 paths.
  const Graph square(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}});
  CHECK(count_shortest_paths(square, 1, 3, 5) == 2);
  CHECK_THROWS_AS(figure14_graph(square, {1, 3, 5}, 2), std::invalid_argument);
  CHECK_THROWS_AS(figure14_graph(cycle, {1, 1, 5}, 2), std::invalid_argument);
  CHECK_THROWS_AS(figure14_graph(Graph(4, {{1, 2}, {3, 4}}), {1, 2, 3}, 2), std::invalid_argument);

  const Figure14 star = figure14_graph(star_tree(3).graph(), {2, 3, 4}, 4);
  CHECK(star.graph.n() == 28);
}

TEST_CASE("graph file round-trip") {
  const Graph g = figure6_tree().graph();
  CHECK(parse_graph(format_graph(g)) == g);
  CHECK(parse_graph("# a path\n3\n1 2 # first\n\n2 3\n") == path_tree(3).graph());
  CHECK_THROWS_AS(parse_graph("3\n1 2 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("2\n1 5\n"), std::invalid_argument);
}

TEST_CASE("random trees are seeded") {
  CHECK(random_tree(12, 5).graph() == random_tree(12, 5).graph());
  for (int n = 1; n <= 12; ++n) CHECK(is_tree(random_tree(n, 100 + n)));
}

TEST_CASE("property: greedy path cover equals brute force") {
  for (int seed = 0; seed < 500; ++seed) {
    const int n = 1 + seed % 12;
    const Tree t = random_tree(n, 7000 + seed);
    const PathCover c = path_cover_number(t);
    check_cover(t, c);
    CHECK(c.number == path_cover_number_bruteforce(t));
  }
}

TEST_CASE("property: special path removal drops p by one") {
  for (int seed = 0; seed < 300; ++seed) {
    const Tree t = random_tree(2 + seed % 11, 900 + seed);
    const auto path = find_special_path(t);
    check_special(t, path);
    const Subgraph rest = delete_paths(t, PathFamily{{path}});
    CHECK(is_forest(rest.graph));
    const int rest_p = rest.graph.n() == 0 ? 0 : path_cover_number_bruteforce(rest.graph);
    CHECK(path_cover_number_bruteforce(t) == rest_p + 1);
  }
}

TEST_CASE("property: tree DP coverage equals exhaustive coverage") {
  for (int seed = 0; seed < 150; ++seed) {
    const Tree t = random_tree(1 + seed % 12, 31 + seed);
    const int p = path_cover_number(t).number;
    for (int k = 1; k <= p + 1; ++k) {
      const Coverage dp = max_coverage_by_k_paths(t, k, CoverageStrategy::TreeDp);
      const Coverage ex = max_coverage_by_k_paths(t, k, CoverageStrategy::Exhaustive);
      const Coverage par = max_coverage_by_k_paths(t, k, CoverageStrategy::Exhaustive, Exec::Parallel);
      CHECK(dp.covered == ex.covered);
      CHECK(par.covered == ex.covered);
      CHECK(par.witness.paths == ex.witness.paths);
      validate_path_family(t, dp.witness);
      CHECK(dp.witness.covered() == dp.covered);
      CHECK(dp.witness.size() <= k);
      if (k >= p) CHECK(dp.covered == t.n());
    }
  }
}

TEST_CASE("property: deleting paths from a tree leaves a forest") {
  for (int seed = 0; seed < 100; ++seed) {
    const Tree t = random_tree(3 + seed % 20, 555 + seed);
    const Coverage c = max_coverage_by_k_paths(t, 1 + seed % 3);
    const Subgraph rest = delete_paths(t, c.witness);
    CHECK(is_forest(rest.graph));
    CHECK(rest.graph.n() == t.n() - c.covered);
  }
}
