#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>

#include "specwl/graph.hpp"

namespace specwl {

using Int = boost::multiprecision::cpp_int;

// Eigensolver failure (float path only); surfaced distinctly per contract.
struct EigenError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Full table of walk counts: at(k,u,v) = number of k-walks u -> v = (A^k)_{u,v}.
struct WalkTable {
  int n = 0, L = 0;
  std::vector<Int> w;  // [k*n*n + u*n + v]
  const Int& at(int k, int u, int v) const { return w[(size_t)k * n * n + (size_t)u * n + v]; }
};
WalkTable walk_profiles(const Graph& g, int L);

struct TraceIteration {
  std::vector<int> colors;     // canonical color id per vertex (or tuple)
  std::string invariant_hash;  // hex digest of the sorted signature multiset
};
struct RefinementTrace {
  std::string algo;
  std::vector<TraceIteration> iterations;  // index = iteration number
  bool stable = false;
};

constexpr int ITERS_STABLE = -1;

// Exact walk-encoding refinement. L = 0 means the default n walk powers.
RefinementTrace spectral_refine(const Graph& g, int d, int L = 0);
// Floating eigenprojection path; eigenvalues grouped within eig_tolerance,
// projection entries rounded to 9 decimals before hashing.
RefinementTrace spectral_refine_float(const Graph& g, int d, double eig_tolerance = 1e-9);
// k-order refinement over n^k ordered tuples, initialized from pairwise profiles.
RefinementTrace korder_refine(const Graph& g, int k, int d);

enum class Algo { Spec, SpecFloat, WL1, FWL2, Local2, Local4, Subgraph, KSpec };
Algo algo_from_string(const std::string& s);
std::string algo_name(Algo a);

struct CompareVerdict {
  bool distinguished = false;
  int iteration = -1;   // first differing iteration when distinguished
  int iters_run = 0;    // iterations examined (stops at joint stability)
};
// Joint run with cross-graph canonical ids; L = max(n_g, n_h) for walk algos.
CompareVerdict compare_graphs(const Graph& g, const Graph& h, Algo algo, int d,
                              int k = 1);

// Joint canonical walk-profile ranks for pairs of several graphs; result[i]
// is an n_i*n_i row-major id matrix comparable across all inputs. Joints
// over 64 vertices switch to profiles modulo two fixed primes, cut at a
// certified common recurrence degree: the induced partition matches the
// exact path, the rank order within it may not. SPECWL_PROFILE_MODE
// (auto|exact|mod) forces a path.
std::vector<std::vector<int>> joint_walk_pair_ids(const std::vector<const Graph*>& gs,
                                                  int L);
// Same ranks from eigenprojection profiles (float path).
std::vector<std::vector<int>> joint_float_pair_ids(const std::vector<const Graph*>& gs,
                                                   double eig_tolerance);

// Generic joint vertex refinement over per-graph pair-label matrices.
// Returns per-graph traces of equal length plus the first iteration whose
// color multisets differ (-1 if none).
struct JointRefinement {
  std::vector<RefinementTrace> traces;
  int distinguished_at = -1;
  bool stable = false;
};
JointRefinement refine_vertices_joint(const std::vector<const Graph*>& gs,
                                      const std::vector<std::vector<int>>& pair_ids,
                                      int d, const std::string& algo);

JointRefinement korder_refine_joint(const std::vector<const Graph*>& gs, int k, int d);

// Shared loop: joint canonical refinement over per-graph item sets.
// init_sig/step_sig append one item's signature words to buf; ids are ranks of
// the sorted distinct signatures across all graphs.
JointRefinement run_joint_refinement(
    const std::vector<int>& item_counts, int d, const std::string& algo,
    const std::function<void(int g, int item, std::vector<uint64_t>& buf)>& init_sig,
    const std::function<void(int g, int item, const std::vector<std::vector<int>>& colors,
                             std::vector<uint64_t>& buf)>& step_sig);

}  // namespace specwl
