#include "specwl/ptree.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace specwl {

namespace {

struct Candidate {
  bool valid = false;
  std::vector<int> nodes;  // skeleton base vertices, sorted
  std::vector<std::pair<int, int>> tree_edges;  // skeleton-id pairs, i < j
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> paths;
};

// Validates one skeleton vertex set: every non-skeleton vertex must lie on a
// unique induced path between two distinct skeleton vertices, and the
// resulting super-graph must be a tree spanning the skeleton.
Candidate check_skeleton_set(const Graph& g, const std::vector<char>& in_s) {
  Candidate c;
  for (int v = 0; v < g.n; ++v)
    if (in_s[v]) c.nodes.push_back(v);
  if (c.nodes.empty()) return c;
  if (g.n == 1) {
    c.valid = true;
    return c;
  }
  if (c.nodes.size() < 2) return c;  // any edge needs two distinct endpoints

  std::vector<int> sid(g.n, -1);
  for (size_t i = 0; i < c.nodes.size(); ++i) sid[c.nodes[i]] = static_cast<int>(i);

  auto add_path = [&](int s1, int s2, std::vector<int> seq) {
    int a = sid[s1], b = sid[s2];
    if (a > b) {
      std::swap(a, b);
      std::reverse(seq.begin(), seq.end());
    }
    c.paths[{a, b}].push_back(std::move(seq));
  };

  std::vector<char> visited(g.n, 0);
  for (int w = 0; w < g.n; ++w) {
    if (in_s[w] || visited[w]) continue;
    if (g.deg(w) != 2) return c;  // interior vertices have degree 2 in g
    // Trace the unique maximal interior path through w in both directions.
    std::vector<int> seq = {w};
    visited[w] = 1;
    int ends[2];
    for (int dir = 0; dir < 2; ++dir) {
      int prev = w, cur = g.adj[w][dir];
      while (!in_s[cur]) {
        if (visited[cur]) return c;  // interior cycle, unreachable from skeleton
        visited[cur] = 1;
        if (dir == 0)
          seq.insert(seq.begin(), cur);
        else
          seq.push_back(cur);
        int next = g.adj[cur][0] == prev ? g.adj[cur][1] : g.adj[cur][0];
        prev = cur;
        cur = next;
      }
      ends[dir] = cur;
    }
    if (ends[0] == ends[1]) return c;  // not a simple path between two nodes
    seq.insert(seq.begin(), ends[0]);
    seq.push_back(ends[1]);
    add_path(ends[0], ends[1], std::move(seq));
  }
  for (const auto& [u, v] : g.edges)
    if (in_s[u] && in_s[v]) add_path(u, v, {u, v});

  for (const auto& [e, ps] : c.paths) c.tree_edges.push_back(e);
  int s = static_cast<int>(c.nodes.size());
  if (static_cast<int>(c.tree_edges.size()) != s - 1) return c;
  std::vector<std::vector<int>> adj(s);
  for (auto [a, b] : c.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(s, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
  }
  c.valid = count == s;
  return c;
}

// Eccentricities of a tree given as an edge list on s nodes.
std::vector<int> tree_eccentricities(int s, const std::vector<std::pair<int, int>>& es) {
  std::vector<std::vector<int>> adj(s);
  for (auto [a, b] : es) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> ecc(s, 0);
  for (int r = 0; r < s; ++r) {
    std::vector<int> dist(s, -1), queue = {r};
    dist[r] = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
      int x = queue[h];
      ecc[r] = std::max(ecc[r], dist[x]);
      for (int y : adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
    }
  }
  return ecc;
}

Skeleton build_skeleton(const Candidate& c) {
  Skeleton sk;
  sk.beta = c.nodes;
  sk.tree = Graph::make(static_cast<int>(c.nodes.size()), c.tree_edges);
  sk.gamma = c.paths;
  auto ecc = tree_eccentricities(static_cast<int>(c.nodes.size()), c.tree_edges);
  sk.root = static_cast<int>(std::min_element(ecc.begin(), ecc.end()) - ecc.begin());
  return sk;
}

}  // namespace

std::optional<std::pair<int, int>> is_parallel_edge(const Graph& g) {
  if (!g.connected()) throw InputError("is_parallel_edge: graph must be connected");
  if (g.n < 2) return std::nullopt;
  std::vector<int> mandatory;
  for (int v = 0; v < g.n; ++v)
    if (g.deg(v) != 2) mandatory.push_back(v);
  if (mandatory.size() > 2) return std::nullopt;
  std::vector<char> in_s(g.n, 0);
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      bool covers = true;
      for (int m : mandatory) covers = covers && (m == u || m == v);
      if (!covers) continue;
      in_s.assign(g.n, 0);
      in_s[u] = in_s[v] = 1;
      if (check_skeleton_set(g, in_s).valid) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

PTreeResult parallel_tree_depth(const Graph& g) {
  if (!g.connected()) throw InputError("parallel_tree_depth: graph must be connected");
  int cap = cap_vertices(20);
  if (g.n > cap) throw CapError("parallel_tree_depth: graph exceeds cap of " +
                                std::to_string(cap) + " vertices");
  PTreeResult res;
  if (g.n == 1) {
    res.depth = 0;
    Skeleton sk;
    sk.tree = Graph::make(1, {});
    sk.beta = {0};
    res.skeleton = sk;
    return res;
  }
  std::vector<int> free_verts;
  std::vector<char> base(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    if (g.deg(v) != 2)
      base[v] = 1;
    else
      free_verts.push_back(v);
  }
  int best = INT_MAX;
  Candidate best_cand;
  std::vector<char> in_s(g.n, 0);
  uint32_t nf = static_cast<uint32_t>(free_verts.size());
  for (uint64_t mask = 0; mask < (1ull << nf); ++mask) {
    in_s = base;
    for (uint32_t i = 0; i < nf; ++i)
      if ((mask >> i) & 1ull) in_s[free_verts[i]] = 1;
    Candidate c = check_skeleton_set(g, in_s);
    if (!c.valid) continue;
    auto ecc = tree_eccentricities(static_cast<int>(c.nodes.size()), c.tree_edges);
    int radius = *std::min_element(ecc.begin(), ecc.end());
    if (radius < best) {
      best = radius;
      best_cand = std::move(c);
    }
  }
  if (best == INT_MAX) return res;
  res.depth = best;
  res.skeleton = build_skeleton(best_cand);
  return res;
}

std::vector<Graph> enumerate_parallel_trees(int max_vertices, int max_depth) {
  if (max_vertices > 8)
    throw CapError("enumerate_parallel_trees: max_vertices capped at 8");
  std::vector<Graph> out;
  for (const Graph& g : connected_graphs_upto(max_vertices)) {
    PTreeResult r = parallel_tree_depth(g);
    if (r.depth && (max_depth < 0 || *r.depth <= max_depth)) out.push_back(g);
  }
  return out;
}

bool treewidth_at_most_2(const Graph& g) {
  std::vector<std::set<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> alive(g.n, 1);
  int remaining = g.n;
  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    for (int v = 0; v < g.n; ++v) {
      if (!alive[v] || adj[v].size() > 2) continue;
      if (adj[v].size() == 2) {
        int a = *adj[v].begin(), b = *std::next(adj[v].begin());
        adj[a].insert(b);
        adj[b].insert(a);
      }
      for (int u : adj[v]) adj[u].erase(v);
      adj[v].clear();
      alive[v] = 0;
      --remaining;
      progress = true;
    }
  }
  return remaining == 0;
}

bool verify_skeleton(const Graph& g, const Skeleton& sk) {
  int s = sk.tree.n;
  if (static_cast<int>(sk.beta.size()) != s || s == 0) return false;
  if (sk.root < 0 || sk.root >= s) return false;
  // T connected and acyclic.
  if (sk.tree.m() != s - 1 || !sk.tree.connected()) return false;
  // beta maps to distinct base vertices.
  std::set<int> beta_set(sk.beta.begin(), sk.beta.end());
  if (static_cast<int>(beta_set.size()) != s) return false;
  for (int v : sk.beta)
    if (v < 0 || v >= g.n) return false;

  std::set<std::pair<int, int>> remaining(g.edges.begin(), g.edges.end());
  std::set<int> interior_seen;
  for (const auto& [e, paths] : sk.gamma) {
    if (!sk.tree.has_edge(e.first, e.second)) return false;
    if (paths.empty()) return false;
    for (const auto& p : paths) {
      if (p.size() < 2) return false;
      if (p.front() != sk.beta[e.first] || p.back() != sk.beta[e.second]) return false;
      std::set<int> on_path(p.begin(), p.end());
      if (on_path.size() != p.size()) return false;  // simple
      for (size_t i = 0; i + 1 < p.size(); ++i) {
        int a = std::min(p[i], p[i + 1]), b = std::max(p[i], p[i + 1]);
        if (!remaining.erase({a, b})) return false;  // partition: used once
      }
      for (size_t i = 1; i + 1 < p.size(); ++i) {
        int w = p[i];
        if (g.deg(w) != 2) return false;
        if (beta_set.count(w)) return false;
        if (!interior_seen.insert(w).second) return false;  // exactly one path
      }
    }
  }
  // Every tree edge must be realized by at least one path.
  for (auto [a, b] : sk.tree.edges)
    if (!sk.gamma.count({a, b})) return false;
  return remaining.empty();
}

}  // namespace specwl
