#pragma once

#include <cstdint>
#include <vector>

#include "specwl/graph.hpp"

namespace specwl {

// Combinatorial number system: rank(S) = sum_i C(s_i, i+1) over sorted S.
int64_t colex_rank(const std::vector<int>& subset);
std::vector<int> colex_unrank(int64_t rank, int k);

struct SymmetricPower {
  Graph source;
  int k = 1;
  Graph graph;
  std::vector<std::vector<int>> vertex_index;  // new id -> sorted k-subset
};

// Vertices = k-subsets of V(g) in colex order; {S,T} is an edge iff
// |S delta T| = 2 and S delta T is an edge of g.
SymmetricPower symmetric_power(const Graph& g, int k);

struct SympowerReport {
  bool local_agree = false;        // stable local_{2k} invariants of g,h agree
  bool power_spec_agree = false;   // stable spectral invariants of g^k,h^k agree
  bool implication_holds = false;  // local_agree implies power_spec_agree
};

// The encoding implication at order k; k in {1,2} at desk scale.
SympowerReport sympower_encoding_check(const Graph& g, const Graph& h, int k);

}  // namespace specwl
