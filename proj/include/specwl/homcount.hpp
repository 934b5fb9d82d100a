#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "specwl/furer.hpp"
#include "specwl/graph.hpp"
#include "specwl/ptree.hpp"

namespace specwl {

using Int = boost::multiprecision::cpp_int;

// Edge-preserving maps pattern -> host, exact. Backtracking over a
// connectivity-friendly vertex order; pattern capped at 8 vertices.
Int hom_brute(const Graph& pattern, const Graph& host);

// Subgraphs of host isomorphic to pattern: injective homs / |Aut(pattern)|.
Int sub_brute(const Graph& pattern, const Graph& host);

struct TreeDecomposition {
  Graph tree;                          // bag tree
  std::vector<std::vector<int>> bags;  // per tree node: sorted pattern vertices
};

// Coverage, edge coverage, subtree connectivity, width <= 2.
bool verify_decomposition(const Graph& pattern, const TreeDecomposition& td);

// Width-2 decomposition read off a recognition skeleton: hub bags at skeleton
// vertices, {u,w} bags per tree edge, and chains {p_i, p_{i+1}, w} along each
// bundled path.
TreeDecomposition decomposition_from_skeleton(const Graph& pattern,
                                              const Skeleton& sk);

// Junction-tree DP over the supplied decomposition; throws InputError when
// the decomposition does not verify.
Int hom_tw2(const Graph& pattern, const TreeDecomposition& td, const Graph& host);

// Adjacency-matrix powers of a host, cached per exponent, entries row-major.
class HostPowers {
 public:
  explicit HostPowers(const Graph& host);
  const std::vector<Int>& power(int l);
  const Graph& host() const { return g_; }

 private:
  Graph g_;
  std::vector<std::vector<Int>> powers_;  // powers_[l] = A^l
};

// hom(F, host) for a parallel tree F given by its skeleton: tree DP whose
// edge weights multiply (A^len)_{x,y} over the bundled path lengths.
Int hom_parallel_tree(const Skeleton& sk, HostPowers& host);

// hom(pattern, fg.g) through the base projection: each hom into the gadget
// graph projects onto a hom into fg.base, and the fiber is the solution
// count of an affine GF(2) system over the even-subset coordinates.
Int hom_into_furer(const Graph& pattern, const FurerGraph& fg);

struct SpasmEntry {
  Graph quotient;
  Int coefficient;  // summed Mobius weights of the partitions landing here
};

struct SpasmBasis {
  Graph pattern;
  Int aut_count;
  std::vector<SpasmEntry> entries;
};

// Quotients by vertex partitions with no adjacent pair merged, deduped by
// isomorphism; pattern capped at 8 vertices.
SpasmBasis spasm(const Graph& pattern);

// sub(pattern, host) = sum coefficient * hom(entry, host) / |Aut(pattern)|.
Int sub_via_hom(const Graph& pattern, const Graph& host);

struct CountingPower {
  bool countable = false;
  std::optional<Graph> witness;      // spasm member violating the bound
  std::optional<int> witness_depth;  // its depth when it is a parallel tree
};

// countable iff every spasm member is a parallel tree of depth <= d;
// d < 0 means unbounded depth (only parallel-tree-ness is required).
CountingPower counting_power_check(const Graph& pattern, int d);

}  // namespace specwl
