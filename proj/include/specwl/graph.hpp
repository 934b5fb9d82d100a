#pragma once
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace specwl {

// Input that cannot be parsed or violates a precondition. CLI exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Desk-scale resource cap exceeded. CLI exit code 3.
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Desk caps can be raised/lowered globally via SPECWL_CAP_VERTICES.
int cap_vertices(int default_cap);

// Simple undirected graph, dense vertex ids 0..n-1. Immutable after make().
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, lexicographically sorted
  std::vector<std::vector<int>> adj;       // sorted neighbor lists
  std::vector<char> amat;                  // n*n adjacency indicator

  static Graph make(int n, std::vector<std::pair<int, int>> edges);

  int m() const { return (int)edges.size(); }
  int deg(int u) const { return (int)adj[u].size(); }
  bool has_edge(int u, int v) const { return amat[(size_t)u * n + v] != 0; }
  bool connected() const;
  Graph relabel(const std::vector<int>& perm) const;  // vertex i -> perm[i]
  Graph disjoint_union(const Graph& h) const;
  bool operator==(const Graph& h) const { return n == h.n && edges == h.edges; }
};

Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);
Graph parse_edge_list(const std::string& text);
std::string encode_edge_list(const Graph& g);
// Accepts graph6 or "n m"-header edge list; sniffs by first line shape.
Graph parse_graph_text(const std::string& text);

// Backtracking isomorphism with witness, capped at 12 vertices.
// witness[i] = image of g's vertex i in h.
std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h);
// Automorphism count by the same backtracking (pattern-scale graphs).
uint64_t automorphism_count(const Graph& g);

// Families: path:n cycle:n clique:n star:m wheel:n theta:l1,l2,... doubled_path:k
Graph make_family(const std::string& name, const std::vector<int>& params);
Graph parse_family_spec(const std::string& spec);  // "cycle:5"
bool looks_like_family_spec(const std::string& s);

struct QuotientResult {
  std::optional<Graph> graph;    // empty on adjacency rejection
  int reject_u = -1, reject_v = -1;  // the adjacent pair inside one block
};
// Throws InputError if blocks don't partition V; adjacency inside a block is
// reported via QuotientResult, not an exception.
QuotientResult quotient(const Graph& g, const std::vector<std::vector<int>>& blocks);

// All graphs on <= max_n vertices up to isomorphism (incremental extension).
std::vector<Graph> all_graphs_upto(int max_n);
std::vector<Graph> connected_graphs_upto(int max_n);

uint64_t fnv1a(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(uint64_t x);

}  // namespace specwl
