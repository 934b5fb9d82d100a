#pragma once
#include "specwl/graph.hpp"

namespace specwl {

// CFI-style gadget over a connected base. Vertices are (x, X) with
// X an even-cardinality subset of N(x), ordered by (x, X-bitmask); the
// bitmask is over the sorted neighbor list of x.
struct FurerGraph {
  Graph base;
  Graph g;
  std::vector<std::pair<int, uint32_t>> verts;  // (x, X bitmask)
  std::vector<std::pair<int, int>> twist_set;   // base edges, u < v, sorted
};

FurerGraph furer(const Graph& base);
FurerGraph twist(const FurerGraph& fg, const std::vector<std::pair<int, int>>& s);
// (G(F), H(F)) with H twisted by the lexicographically first base edge.
std::pair<Graph, Graph> furer_pair(const Graph& base);

// Edge partition of CC_F(separators): edges related when joined by a path
// whose internal meeting vertices avoid the separator set.
std::vector<std::vector<int>> connected_components_after_separation(
    const Graph& base, const std::vector<int>& separators);

}  // namespace specwl
