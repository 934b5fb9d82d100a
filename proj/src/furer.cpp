#include "specwl/furer.hpp"

#include <algorithm>
#include <set>

namespace specwl {

namespace {

// Invariant: verts sorted by (x, X-bitmask); bit i of X refers to the i-th
// smallest neighbor of x. Edge {(x,X),(y,Y)} present iff (x in Y) == (y in X),
// parity flipped when {x,y} is twisted.
FurerGraph build(const Graph& base, std::vector<std::pair<int, int>> twist_set) {
  if (base.n < 2) throw InputError("furer: base must have at least 2 vertices");
  if (!base.connected()) throw InputError("furer: base must be connected");
  std::sort(twist_set.begin(), twist_set.end());

  FurerGraph fg;
  fg.base = base;
  fg.twist_set = std::move(twist_set);

  std::vector<int> offset(base.n + 1, 0);
  for (int x = 0; x < base.n; ++x) {
    int dx = base.deg(x);
    for (uint32_t m = 0; m < (1u << dx); ++m)
      if (__builtin_popcount(m) % 2 == 0) fg.verts.push_back({x, m});
    offset[x + 1] = static_cast<int>(fg.verts.size());
  }

  auto nbr_pos = [&](int x, int y) {
    const auto& nx = base.adj[x];
    return static_cast<int>(std::lower_bound(nx.begin(), nx.end(), y) - nx.begin());
  };

  std::vector<std::pair<int, int>> edges;
  for (const auto& [x, y] : base.edges) {
    bool twisted = std::binary_search(fg.twist_set.begin(), fg.twist_set.end(),
                                      std::make_pair(x, y));
    int py = nbr_pos(x, y);  // bit of y within masks of x
    int px = nbr_pos(y, x);  // bit of x within masks of y
    for (int i = offset[x]; i < offset[x + 1]; ++i)
      for (int j = offset[y]; j < offset[y + 1]; ++j) {
        bool y_in_X = (fg.verts[i].second >> py) & 1u;
        bool x_in_Y = (fg.verts[j].second >> px) & 1u;
        if ((x_in_Y == y_in_X) != twisted) edges.push_back({i, j});
      }
  }
  fg.g = Graph::make(static_cast<int>(fg.verts.size()), edges);
  return fg;
}

}  // namespace

FurerGraph furer(const Graph& base) { return build(base, {}); }

FurerGraph twist(const FurerGraph& fg, const std::vector<std::pair<int, int>>& s) {
  std::set<std::pair<int, int>> cur(fg.twist_set.begin(), fg.twist_set.end());
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : s) {
    if (u > v) std::swap(u, v);
    if (!fg.base.has_edge(u, v))
      throw InputError("twist: {" + std::to_string(u) + "," + std::to_string(v) +
                       "} is not a base edge");
    if (!seen.insert({u, v}).second) continue;
    if (!cur.insert({u, v}).second) cur.erase({u, v});
  }
  return build(fg.base, {cur.begin(), cur.end()});
}

std::pair<Graph, Graph> furer_pair(const Graph& base) {
  FurerGraph g = furer(base);
  if (base.edges.empty()) throw InputError("furer_pair: base has no edges");
  FurerGraph h = twist(g, {base.edges.front()});
  return {g.g, h.g};
}

std::vector<std::vector<int>> connected_components_after_separation(
    const Graph& base, const std::vector<int>& separators) {
  std::vector<char> sep(base.n, 0);
  for (int v : separators) {
    if (v < 0 || v >= base.n)
      throw InputError("separators: vertex " + std::to_string(v) + " out of range");
    sep[v] = 1;
  }
  int m = base.m();
  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  // Edges sharing a non-separator endpoint belong to the same component.
  std::vector<std::vector<int>> at(base.n);
  for (int i = 0; i < m; ++i) {
    at[base.edges[i].first].push_back(i);
    at[base.edges[i].second].push_back(i);
  }
  for (int v = 0; v < base.n; ++v) {
    if (sep[v]) continue;
    for (size_t k = 1; k < at[v].size(); ++k) {
      int a = find(at[v][0]), b = find(at[v][k]);
      if (a != b) parent[b] = a;
    }
  }
  std::vector<std::vector<int>> groups(m);
  for (int i = 0; i < m; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < m; ++i)
    if (!groups[i].empty()) out.push_back(std::move(groups[i]));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace specwl
