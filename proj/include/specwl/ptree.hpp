#pragma once
#include <map>
#include <optional>

#include "specwl/graph.hpp"

namespace specwl {

// Parallel tree skeleton witness. beta maps skeleton node ids (sorted by base
// vertex) to base vertices; gamma maps each tree edge (i,j), i < j, to its
// parallel paths, each stored as the full vertex sequence beta(i)..beta(j).
struct Skeleton {
  Graph tree;
  int root = 0;
  std::vector<int> beta;
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> gamma;
};

// Endpoint pair witnessing a partition of E into internally-disjoint simple
// (u,v)-paths, or absence. First valid pair in lexicographic order.
std::optional<std::pair<int, int>> is_parallel_edge(const Graph& g);

struct PTreeResult {
  std::optional<int> depth;  // absent = not a parallel tree
  std::optional<Skeleton> skeleton;
};
// Minimum rooted skeleton depth over all valid skeletons, with one witness.
PTreeResult parallel_tree_depth(const Graph& g);

// Connected parallel trees up to isomorphism within the bounds.
// max_depth < 0 means unbounded.
std::vector<Graph> enumerate_parallel_trees(int max_vertices, int max_depth);

// Series-parallel reduction test (no K4 minor).
bool treewidth_at_most_2(const Graph& g);

// Direct check of the three Skeleton invariants against g.
bool verify_skeleton(const Graph& g, const Skeleton& sk);

}  // namespace specwl
