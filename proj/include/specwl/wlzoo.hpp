#pragma once
#include "specwl/refine.hpp"

namespace specwl {

// Classic 1-WL color refinement.
RefinementTrace wl1(const Graph& g, int d);
// Folklore 2-WL over ordered pairs; colors are row-major (u,v) -> u*n+v.
RefinementTrace fwl2(const Graph& g, int d);
// Local k-GNN, k in {2,4}: positional multisets over graph neighbors only.
RefinementTrace local_k(const Graph& g, int k, int d);
// Node-marking subgraph GNN: colors are copy-major (mark w, vertex u) -> w*n+u;
// the graph invariant groups colors per marked copy.
RefinementTrace subgraph_gnn(const Graph& g, int d);

JointRefinement wlzoo_joint(const std::vector<const Graph*>& gs, Algo algo, int d);

}  // namespace specwl
