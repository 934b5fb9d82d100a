#include "specwl/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace specwl {

int cap_vertices(int default_cap) {
  if (const char* s = std::getenv("SPECWL_CAP_VERTICES")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return default_cap;
}

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw InputError("negative vertex count");
  Graph g;
  g.n = n;
  for (auto& [u, v] : edges) {
    if (u == v) throw InputError("self-loop");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw InputError("endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InputError("duplicate edge");
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  g.amat.assign((size_t)n * n, 0);
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
    g.amat[(size_t)u * n + v] = g.amat[(size_t)v * n + u] = 1;
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

bool Graph::connected() const {
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        cnt++;
        stack.push_back(v);
      }
  }
  return cnt == n;
}

Graph Graph::relabel(const std::vector<int>& perm) const {
  std::vector<std::pair<int, int>> e2;
  e2.reserve(edges.size());
  for (auto [u, v] : edges) e2.push_back({perm[u], perm[v]});
  return Graph::make(n, std::move(e2));
}

Graph Graph::disjoint_union(const Graph& h) const {
  std::vector<std::pair<int, int>> e2 = edges;
  for (auto [u, v] : h.edges) e2.push_back({u + n, v + n});
  return Graph::make(n + h.n, std::move(e2));
}

// graph6: byte0 = n+63 (n <= 62); upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed 6 bits per byte MSB-first, each +63.
Graph parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw InputError("empty graph6 line");
  for (char c : s)
    if (c < 63 || c > 126) throw InputError("graph6 character out of range");
  if (s[0] == 126) throw InputError("graph6 n > 62 not supported");
  int n = s[0] - 63;
  int bits = n * (n - 1) / 2;
  int need = (bits + 5) / 6;
  if ((int)s.size() != 1 + need) throw InputError("graph6 length mismatch");
  std::vector<std::pair<int, int>> edges;
  int bi = 0;
  for (int v = 1; v < n; v++)
    for (int u = 0; u < v; u++, bi++) {
      int byte = s[1 + bi / 6] - 63;
      if ((byte >> (5 - bi % 6)) & 1) edges.push_back({u, v});
    }
  // trailing pad bits must be zero
  for (int i = bits; i < need * 6; i++) {
    int byte = s[1 + i / 6] - 63;
    if ((byte >> (5 - i % 6)) & 1) throw InputError("graph6 nonzero padding");
  }
  return Graph::make(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  if (g.n > 62) throw InputError("graph6 supports n <= 62");
  std::string s(1, char(g.n + 63));
  int bits = g.n * (g.n - 1) / 2;
  std::vector<char> bv(bits, 0);
  int bi = 0;
  for (int v = 1; v < g.n; v++)
    for (int u = 0; u < v; u++, bi++) bv[bi] = g.has_edge(u, v);
  for (int i = 0; i < bits; i += 6) {
    int byte = 0;
    for (int j = 0; j < 6 && i + j < bits; j++)
      if (bv[i + j]) byte |= 1 << (5 - j);
    s.push_back(char(byte + 63));
  }
  return s;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  int n, m;
  if (!(in >> n >> m)) throw InputError("edge list needs 'n m' header");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; i++) {
    int u, v;
    if (!(in >> u >> v)) throw InputError("edge list truncated");
    edges.push_back({u, v});
  }
  return Graph::make(n, std::move(edges));
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n << " " << g.m() << "\n";
  for (auto [u, v] : g.edges) out << u << " " << v << "\n";
  return out.str();
}

Graph parse_graph_text(const std::string& text) {
  // An edge-list first line is "n m" (two decimal numbers); otherwise graph6.
  size_t eol = text.find('\n');
  std::string first = text.substr(0, eol);
  std::istringstream in(first);
  int n, m;
  char extra;
  if (in >> n >> m && !(in >> extra)) return parse_edge_list(text);
  return parse_graph6(text);
}

namespace {

bool iso_extend(const Graph& g, const Graph& h, std::vector<int>& map,
                std::vector<char>& used, int i, const std::vector<int>& order) {
  if (i == g.n) return true;
  int u = order[i];
  for (int w = 0; w < h.n; w++) {
    if (used[w] || g.deg(u) != h.deg(w)) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; j++) {
      int p = order[j];
      if (g.has_edge(u, p) != h.has_edge(w, map[p])) ok = false;
    }
    if (!ok) continue;
    map[u] = w;
    used[w] = 1;
    if (iso_extend(g, h, map, used, i + 1, order)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h) {
  int cap = cap_vertices(12);
  if (g.n > cap || h.n > cap) throw CapError("are_isomorphic capped at 12 vertices");
  if (g.n != h.n || g.m() != h.m()) return std::nullopt;
  auto degs = [](const Graph& x) {
    std::vector<int> d;
    for (int u = 0; u < x.n; u++) d.push_back(x.deg(u));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(g) != degs(h)) return std::nullopt;
  // high-degree first, then prefer neighbors of placed vertices
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.deg(a) > g.deg(b); });
  std::vector<int> placed;
  std::vector<char> in_order(g.n, 0);
  std::vector<int> final_order;
  for (int k = 0; k < g.n; k++) {
    int pick = -1;
    for (int cand : order) {
      if (in_order[cand]) continue;
      bool touches = false;
      for (int p : final_order)
        if (g.has_edge(cand, p)) {
          touches = true;
          break;
        }
      if (touches || final_order.empty()) {
        pick = cand;
        break;
      }
    }
    if (pick < 0)
      for (int cand : order)
        if (!in_order[cand]) {
          pick = cand;
          break;
        }
    in_order[pick] = 1;
    final_order.push_back(pick);
  }
  std::vector<int> map(g.n, -1);
  std::vector<char> used(h.n, 0);
  if (iso_extend(g, h, map, used, 0, final_order)) return map;
  return std::nullopt;
}

namespace {

uint64_t aut_count_rec(const Graph& g, std::vector<int>& map,
                       std::vector<char>& used, int i) {
  if (i == g.n) return 1;
  uint64_t total = 0;
  for (int w = 0; w < g.n; w++) {
    if (used[w] || g.deg(i) != g.deg(w)) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; j++)
      if (g.has_edge(i, j) != g.has_edge(w, map[j])) ok = false;
    if (!ok) continue;
    map[i] = w;
    used[w] = 1;
    total += aut_count_rec(g, map, used, i + 1);
    used[w] = 0;
  }
  return total;
}

}  // namespace

uint64_t automorphism_count(const Graph& g) {
  if (g.n > cap_vertices(12)) throw CapError("automorphism_count capped at 12");
  std::vector<int> map(g.n, -1);
  std::vector<char> used(g.n, 0);
  return aut_count_rec(g, map, used, 0);
}

Graph make_family(const std::string& name, const std::vector<int>& params) {
  auto need = [&](size_t k) {
    if (params.size() != k) throw InputError("family " + name + ": wrong parameter count");
  };
  std::vector<std::pair<int, int>> e;
  if (name == "path") {
    need(1);
    int n = params[0];
    if (n < 1) throw InputError("path needs n >= 1");
    for (int i = 0; i + 1 < n; i++) e.push_back({i, i + 1});
    return Graph::make(n, e);
  }
  if (name == "cycle") {
    need(1);
    int n = params[0];
    if (n < 3) throw InputError("cycle needs n >= 3");
    for (int i = 0; i < n; i++) e.push_back({i, (i + 1) % n});
    return Graph::make(n, e);
  }
  if (name == "clique") {
    need(1);
    int n = params[0];
    if (n < 1) throw InputError("clique needs n >= 1");
    for (int i = 0; i < n; i++)
      for (int j = i + 1; j < n; j++) e.push_back({i, j});
    return Graph::make(n, e);
  }
  if (name == "star") {
    need(1);
    int m = params[0];
    if (m < 1) throw InputError("star needs m >= 1 leaves");
    for (int i = 1; i <= m; i++) e.push_back({0, i});
    return Graph::make(m + 1, e);
  }
  if (name == "wheel") {
    need(1);
    int n = params[0];
    if (n < 3) throw InputError("wheel needs rim >= 3");
    for (int i = 1; i <= n; i++) {
      e.push_back({0, i});
      e.push_back({i, i == n ? 1 : i + 1});
    }
    return Graph::make(n + 1, e);
  }
  if (name == "theta") {
    if (params.empty()) throw InputError("theta needs path lengths");
    int ones = 0;
    for (int l : params) {
      if (l < 1) throw InputError("theta path length >= 1");
      if (l == 1) ones++;
    }
    if (ones > 1) throw InputError("theta: at most one length-1 path (simple graph)");
    int next = 2;  // hubs are 0, 1
    for (int l : params) {
      int prev = 0;
      for (int s = 1; s < l; s++) {
        e.push_back({prev, next});
        prev = next++;
      }
      e.push_back({prev, 1});
    }
    return Graph::make(next, e);
  }
  if (name == "doubled_path") {
    need(1);
    int k = params[0];
    if (k < 0) throw InputError("doubled_path needs k >= 0");
    int base = 2 * k + 2;  // P_{2k+2}, then each edge -> two length-2 paths
    int next = base;
    for (int i = 0; i + 1 < base; i++)
      for (int copy = 0; copy < 2; copy++) {
        e.push_back({i, next});
        e.push_back({next, i + 1});
        next++;
      }
    return Graph::make(next, e);
  }
  throw InputError("unknown family: " + name);
}

bool looks_like_family_spec(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos || colon == 0) return false;
  static const char* names[] = {"path", "cycle", "clique", "star",
                                "wheel", "theta", "doubled_path"};
  std::string name = s.substr(0, colon);
  for (auto* f : names)
    if (name == f) return true;
  return false;
}

Graph parse_family_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("family spec needs name:params");
  std::string name = spec.substr(0, colon);
  std::vector<int> params;
  std::string rest = spec.substr(colon + 1);
  std::istringstream in(rest);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) params.push_back(std::stoi(tok));
  return make_family(name, params);
}

QuotientResult quotient(const Graph& g, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> block_of(g.n, -1);
  for (int b = 0; b < (int)blocks.size(); b++)
    for (int v : blocks[b]) {
      if (v < 0 || v >= g.n) throw InputError("quotient: vertex out of range");
      if (block_of[v] != -1) throw InputError("quotient: overlapping blocks");
      block_of[v] = b;
    }
  for (int v = 0; v < g.n; v++)
    if (block_of[v] == -1) throw InputError("quotient: partition does not cover V");
  for (auto [u, v] : g.edges)
    if (block_of[u] == block_of[v]) return {std::nullopt, u, v};
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges) {
    int a = block_of[u], b = block_of[v];
    if (a > b) std::swap(a, b);
    e.push_back({a, b});
  }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  QuotientResult r;
  r.graph = Graph::make((int)blocks.size(), std::move(e));
  return r;
}

namespace {

// cheap iso-invariant bucket key: degree sequence + per-vertex sorted
// neighbor-degree profile hash + triangle count
uint64_t graph_invariant(const Graph& g) {
  std::vector<uint64_t> vk;
  for (int u = 0; u < g.n; u++) {
    std::vector<int> nd;
    for (int v : g.adj[u]) nd.push_back(g.deg(v));
    std::sort(nd.begin(), nd.end());
    uint64_t h = fnv1a(nd.data(), nd.size() * sizeof(int), 1469598103934665603ULL + g.deg(u));
    vk.push_back(h);
  }
  std::sort(vk.begin(), vk.end());
  int tri = 0;
  for (auto [u, v] : g.edges)
    for (int w = 0; w < g.n; w++)
      if (g.has_edge(u, w) && g.has_edge(v, w)) tri++;
  vk.push_back((uint64_t)g.n << 32 | (uint64_t)g.m());
  vk.push_back(tri);
  return fnv1a(vk.data(), vk.size() * sizeof(uint64_t));
}

}  // namespace

std::vector<Graph> all_graphs_upto(int max_n) {
  // extend each (n-1)-vertex representative by one vertex with every
  // neighborhood mask, dedup via invariant buckets + exact iso
  std::vector<Graph> all;
  std::vector<Graph> prev{Graph::make(0, {})};
  if (max_n >= 1) {
    prev = {Graph::make(1, {})};
    all.push_back(prev[0]);
  }
  for (int n = 2; n <= max_n; n++) {
    std::map<uint64_t, std::vector<int>> buckets;  // invariant -> indices into cur
    std::vector<Graph> cur;
    for (const Graph& p : prev)
      for (uint32_t mask = 0; mask < (1u << (n - 1)); mask++) {
        auto e = p.edges;
        for (int i = 0; i < n - 1; i++)
          if (mask >> i & 1) e.push_back({i, n - 1});
        Graph cand = Graph::make(n, std::move(e));
        uint64_t key = graph_invariant(cand);
        bool dup = false;
        for (int idx : buckets[key])
          if (are_isomorphic(cand, cur[idx])) {
            dup = true;
            break;
          }
        if (!dup) {
          buckets[key].push_back((int)cur.size());
          cur.push_back(std::move(cand));
        }
      }
    for (const Graph& g : cur) all.push_back(g);
    prev = std::move(cur);
  }
  return all;
}

std::vector<Graph> connected_graphs_upto(int max_n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs_upto(max_n))
    if (g.connected()) out.push_back(g);
  return out;
}

uint64_t fnv1a(const void* data, size_t len, uint64_t seed) {
  const unsigned char* p = (const unsigned char*)data;
  uint64_t h = seed;
  for (size_t i = 0; i < len; i++) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(uint64_t x) {
  static const char* d = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; i--, x >>= 4) s[i] = d[x & 15];
  return s;
}

}  // namespace specwl
