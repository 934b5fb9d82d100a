#include "specwl/sympower.hpp"

#include <algorithm>

#include "specwl/refine.hpp"

namespace specwl {

namespace {

// C(a, b) saturating at kBinomCap to keep cap checks overflow-safe.
constexpr int64_t kBinomCap = INT64_MAX / 4;

int64_t binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  int64_t r = 1;
  for (int i = 1; i <= b; ++i) {
    if (r > kBinomCap / (a - b + i)) return kBinomCap;
    r = r * (a - b + i) / i;  // exact: r is C(a-b+i, i) after each step
  }
  return r;
}

}  // namespace

int64_t colex_rank(const std::vector<int>& subset) {
  int64_t r = 0;
  for (size_t i = 0; i < subset.size(); ++i) r += binom(subset[i], static_cast<int>(i) + 1);
  return r;
}

std::vector<int> colex_unrank(int64_t rank, int k) {
  std::vector<int> out(k);
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (binom(c + 1, i) <= rank) ++c;
    out[i - 1] = c;
    rank -= binom(c, i);
  }
  return out;
}

SymmetricPower symmetric_power(const Graph& g, int k) {
  if (k < 1 || k > g.n)
    throw InputError("symmetric_power: k must satisfy 1 <= k <= n");
  const int64_t nv = binom(g.n, k);
  const int cap = cap_vertices(256);
  if (nv > cap)
    throw CapError("symmetric_power: C(n,k) exceeds cap of " +
                   std::to_string(cap) + " vertices");
  SymmetricPower sp;
  sp.source = g;
  sp.k = k;
  sp.vertex_index.resize(nv);
  for (int64_t r = 0; r < nv; ++r) sp.vertex_index[r] = colex_unrank(r, k);
  std::vector<char> in_s(g.n, 0);
  std::vector<std::pair<int, int>> edges;
  for (int64_t r = 0; r < nv; ++r) {
    const auto& s = sp.vertex_index[r];
    for (int v : s) in_s[v] = 1;
    for (size_t i = 0; i < s.size(); ++i) {
      const int u = s[i];
      for (int w : g.adj[u]) {
        if (in_s[w]) continue;
        // T = S - u + w; S delta T = {u,w}, an edge of g by construction.
        std::vector<int> t;
        t.reserve(k);
        for (int v : s)
          if (v != u) t.push_back(v);
        t.insert(std::lower_bound(t.begin(), t.end(), w), w);
        const int64_t rt = colex_rank(t);
        if (r < rt) edges.push_back({static_cast<int>(r), static_cast<int>(rt)});
      }
    }
    for (int v : s) in_s[v] = 0;
  }
  sp.graph = Graph::make(static_cast<int>(nv), std::move(edges));
  return sp;
}

SympowerReport sympower_encoding_check(const Graph& g, const Graph& h, int k) {
  if (k < 1 || k > 2)
    throw CapError("sympower_encoding_check: k capped at 2");
  auto local = compare_graphs(g, h, Algo::Local2, ITERS_STABLE, 1);
  if (k == 2) local = compare_graphs(g, h, Algo::Local4, ITERS_STABLE, 1);
  auto pg = symmetric_power(g, k);
  auto ph = symmetric_power(h, k);
  auto spec = compare_graphs(pg.graph, ph.graph, Algo::Spec, ITERS_STABLE, 1);
  SympowerReport r;
  r.local_agree = !local.distinguished;
  r.power_spec_agree = !spec.distinguished;
  r.implication_holds = !r.local_agree || r.power_spec_agree;
  return r;
}

}  // namespace specwl
