#include "specwl/wlzoo.hpp"

#include <algorithm>

namespace specwl {

namespace {

JointRefinement wl1_joint(const std::vector<const Graph*>& gs, int d) {
  std::vector<int> counts;
  for (auto* g : gs) counts.push_back(g->n);
  auto init = [](int, int, std::vector<uint64_t>& buf) { buf.push_back(0); };
  auto step = [&](int i, int u, const std::vector<std::vector<int>>& colors,
                  std::vector<uint64_t>& buf) {
    buf.push_back((uint64_t)colors[i][u]);
    size_t start = buf.size();
    for (int v : gs[i]->adj[u]) buf.push_back((uint64_t)colors[i][v]);
    std::sort(buf.begin() + start, buf.end());
  };
  return run_joint_refinement(counts, d, "wl1", init, step);
}

JointRefinement fwl2_joint(const std::vector<const Graph*>& gs, int d) {
  int cap = cap_vertices(40);
  std::vector<int> counts;
  for (auto* g : gs) {
    if (g->n > cap) throw CapError("fwl2 capped at 40 vertices");
    counts.push_back(g->n * g->n);
  }
  auto init = [&](int i, int item, std::vector<uint64_t>& buf) {
    int n = gs[i]->n, u = item / n, v = item % n;
    buf.push_back(u == v ? 2 : gs[i]->has_edge(u, v) ? 1 : 0);
  };
  auto step = [&](int i, int item, const std::vector<std::vector<int>>& colors,
                  std::vector<uint64_t>& buf) {
    int n = gs[i]->n, u = item / n, v = item % n;
    buf.push_back((uint64_t)colors[i][item]);
    size_t start = buf.size();
    for (int w = 0; w < n; w++)
      buf.push_back((uint64_t)colors[i][u * n + w] << 32 |
                    (uint64_t)colors[i][w * n + v]);
    std::sort(buf.begin() + start, buf.end());
  };
  return run_joint_refinement(counts, d, "fwl2", init, step);
}

JointRefinement local_k_joint(const std::vector<const Graph*>& gs, int k, int d) {
  if (k != 2 && k != 4) throw InputError("local_k supports k in {2,4}");
  int cap = cap_vertices(k == 2 ? 40 : 16);
  std::vector<int> counts;
  std::vector<std::vector<int>> strides(gs.size());
  for (size_t i = 0; i < gs.size(); i++) {
    int n = gs[i]->n;
    if (n > cap) throw CapError("local_k vertex cap exceeded");
    int64_t tuples = 1;
    for (int j = 0; j < k; j++) tuples *= std::max(n, 1);
    counts.push_back((int)tuples);
    strides[i].resize(k);
    int64_t s = 1;
    for (int j = k - 1; j >= 0; j--) {
      strides[i][j] = (int)s;
      s *= std::max(n, 1);
    }
  }
  auto decode = [&](int i, int item, std::vector<int>& tup) {
    int n = std::max(gs[i]->n, 1);
    for (int j = k - 1; j >= 0; j--) {
      tup[j] = item % n;
      item /= n;
    }
  };
  // atp: ordered equality + adjacency pattern over all index pairs
  auto init = [&](int i, int item, std::vector<uint64_t>& buf) {
    std::vector<int> tup(k);
    decode(i, item, tup);
    uint64_t atp = 0;
    int bit = 0;
    for (int a = 0; a < k; a++)
      for (int b = a + 1; b < k; b++) {
        if (tup[a] == tup[b]) atp |= 1ULL << bit;
        bit++;
        if (gs[i]->has_edge(tup[a], tup[b])) atp |= 1ULL << bit;
        bit++;
      }
    buf.push_back(atp);
  };
  auto step = [&](int i, int item, const std::vector<std::vector<int>>& colors,
                  std::vector<uint64_t>& buf) {
    std::vector<int> tup(k);
    decode(i, item, tup);
    buf.push_back((uint64_t)colors[i][item]);
    for (int j = 0; j < k; j++) {
      size_t start = buf.size();
      for (int v : gs[i]->adj[tup[j]]) {
        int item2 = item + (v - tup[j]) * strides[i][j];
        buf.push_back((uint64_t)colors[i][item2]);
      }
      std::sort(buf.begin() + start, buf.end());
      buf.push_back(0xffffffffffffffffULL);  // positional separator
    }
  };
  return run_joint_refinement(counts, d, k == 2 ? "local2" : "local4", init, step);
}

JointRefinement subgraph_joint(const std::vector<const Graph*>& gs, int d) {
  // n marked copies per graph, refined jointly; item (w,u) = copy w, vertex u
  std::vector<int> counts;
  for (auto* g : gs) counts.push_back(g->n * g->n);
  auto init = [&](int i, int item, std::vector<uint64_t>& buf) {
    int n = gs[i]->n;
    buf.push_back(item / n == item % n ? 1 : 0);
  };
  auto step = [&](int i, int item, const std::vector<std::vector<int>>& colors,
                  std::vector<uint64_t>& buf) {
    int n = gs[i]->n, w = item / n, u = item % n;
    buf.push_back((uint64_t)colors[i][item]);
    size_t start = buf.size();
    for (int v : gs[i]->adj[u]) buf.push_back((uint64_t)colors[i][w * n + v]);
    std::sort(buf.begin() + start, buf.end());
  };
  auto jr = run_joint_refinement(counts, d, "subgraph", init, step);
  // the graph invariant groups colors per marked copy: rebuild the
  // per-iteration hashes and the distinguishing verdict on copy multisets
  size_t iters = jr.traces[0].iterations.size();
  jr.distinguished_at = -1;
  std::vector<std::vector<std::vector<std::vector<int>>>> grouped(gs.size());
  for (size_t i = 0; i < gs.size(); i++) {
    int n = gs[i]->n;
    grouped[i].resize(iters);
    for (size_t t = 0; t < iters; t++) {
      auto& colors = jr.traces[i].iterations[t].colors;
      std::vector<std::vector<int>> copies(n);
      for (int w = 0; w < n; w++) {
        copies[w].assign(colors.begin() + (size_t)w * n, colors.begin() + (size_t)(w + 1) * n);
        std::sort(copies[w].begin(), copies[w].end());
      }
      std::sort(copies.begin(), copies.end());
      uint64_t h = 0xcbf29ce484222325ULL;
      for (auto& c : copies) {
        uint64_t len = c.size();
        h = fnv1a(&len, 8, h);
        h = fnv1a(c.data(), c.size() * sizeof(int), h);
      }
      jr.traces[i].iterations[t].invariant_hash = hex64(h);
      grouped[i][t] = std::move(copies);
    }
  }
  if (gs.size() == 2)
    for (size_t t = 0; t < iters && jr.distinguished_at < 0; t++)
      if (grouped[0][t] != grouped[1][t]) jr.distinguished_at = (int)t;
  return jr;
}

}  // namespace

JointRefinement wlzoo_joint(const std::vector<const Graph*>& gs, Algo algo, int d) {
  switch (algo) {
    case Algo::WL1: return wl1_joint(gs, d);
    case Algo::FWL2: return fwl2_joint(gs, d);
    case Algo::Local2: return local_k_joint(gs, 2, d);
    case Algo::Local4: return local_k_joint(gs, 4, d);
    case Algo::Subgraph: return subgraph_joint(gs, d);
    default: throw InputError("not a wl-zoo algorithm");
  }
}

namespace {
RefinementTrace single(const std::vector<const Graph*>& gs, Algo a, int d) {
  auto jr = wlzoo_joint(gs, a, d);
  jr.traces[0].stable = jr.stable;
  return jr.traces[0];
}
}  // namespace

RefinementTrace wl1(const Graph& g, int d) {
  if (d < 0 && d != ITERS_STABLE) throw InputError("iterations must be >= 0 or stable");
  return single({&g}, Algo::WL1, d);
}
RefinementTrace fwl2(const Graph& g, int d) {
  if (d < 0 && d != ITERS_STABLE) throw InputError("iterations must be >= 0 or stable");
  return single({&g}, Algo::FWL2, d);
}
RefinementTrace local_k(const Graph& g, int k, int d) {
  if (d < 0 && d != ITERS_STABLE) throw InputError("iterations must be >= 0 or stable");
  return single({&g}, k == 2 ? Algo::Local2 : k == 4 ? Algo::Local4
                                                     : throw InputError("k in {2,4}"),
                d);
}
RefinementTrace subgraph_gnn(const Graph& g, int d) {
  if (d < 0 && d != ITERS_STABLE) throw InputError("iterations must be >= 0 or stable");
  return single({&g}, Algo::Subgraph, d);
}

}  // namespace specwl
