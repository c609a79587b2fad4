#pragma once

// Path cover number and maximum coverage by k disjoint paths.

#include "acyclic/exec.hpp"
#include "acyclic/graph.hpp"

#include <vector>

namespace acyclic {

/// A path whose ends are pendant in t and with at most one vertex of degree
/// three or more; the whole tree when t is a path. Built by the induction that
/// removes the pendant end u of a longest path u-v-a1-... and reattaches.
std::vector<int> find_special_path(const Tree& t);

struct PathCover {
  int number = 0;
  PathFamily witness;
};

/// p(T) by repeatedly removing a special path and recursing on the remaining
/// components. Works on forests.
PathCover path_cover_number(const Graph& forest);

/// Exhaustive minimum over edge subsets with every degree at most two.
/// Throws SizeCapExceeded above brute_force_cap(kPathEnumerationCap) and
/// std::invalid_argument if g has a cycle.
int path_cover_number_bruteforce(const Graph& forest, Exec exec = Exec::Serial);

struct Coverage {
  int covered = 0;
  PathFamily witness;
};

enum class CoverageStrategy { Exhaustive, TreeDp };

/// Largest number of vertices covered by at most k disjoint paths, with a
/// witness. Exhaustive is capped like the brute-force path cover.
Coverage max_coverage_by_k_paths(const Tree& t, int k, CoverageStrategy strategy = CoverageStrategy::TreeDp,
                                 Exec exec = Exec::Serial);

}  // namespace acyclic
