#include <algorithm>
#include <optional>
#include <set>

#include "doctest.h"
#include "specwl/ptree.hpp"

using namespace specwl;

namespace {

// Slow reference: every nonempty vertex subset is tried as a skeleton; paths
// are peeled by walking unused edges from skeleton vertices; the super-tree is
// validated by union-find and measured by Floyd-Warshall.
std::optional<int> slow_depth(const Graph& g) {
  if (g.n == 1) return 0;
  std::optional<int> best;
  for (uint32_t mask = 1; mask < (1u << g.n); ++mask) {
    std::vector<int> skel;
    for (int v = 0; v < g.n; ++v)
      if ((mask >> v) & 1u) skel.push_back(v);
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v)
      if (!((mask >> v) & 1u) && g.deg(v) != 2) ok = false;
    if (!ok || skel.size() < 2) continue;

    std::set<std::pair<int, int>> unused(g.edges.begin(), g.edges.end());
    std::vector<char> interior_used(g.n, 0);
    std::vector<std::pair<int, int>> super_edges;
    auto take = [&](int a, int b) {
      return unused.erase({std::min(a, b), std::max(a, b)}) > 0;
    };
    while (ok && !unused.empty()) {
      auto pick = unused.end();
      for (auto it = unused.begin(); it != unused.end(); ++it)
        if (((mask >> it->first) & 1u) || ((mask >> it->second) & 1u)) {
          pick = it;
          break;
        }
      if (pick == unused.end()) {
        ok = false;  // leftover edges lie on interior-only cycles
        break;
      }
      int start = ((mask >> pick->first) & 1u) ? pick->first : pick->second;
      int cur = pick->first == start ? pick->second : pick->first;
      take(start, cur);
      int prev = start;
      while (ok && !((mask >> cur) & 1u)) {
        if (interior_used[cur]) {
          ok = false;
          break;
        }
        interior_used[cur] = 1;
        int next = -1;
        for (int y : g.adj[cur])
          if (y != prev && take(cur, y)) {
            next = y;
            break;
          }
        if (next < 0) {
          ok = false;
          break;
        }
        prev = cur;
        cur = next;
      }
      if (ok) {
        if (cur == start)
          ok = false;  // closed walk, not a simple path between two nodes
        else
          super_edges.push_back({start, cur});
      }
    }
    if (!ok) continue;

    std::vector<int> parent(g.n);
    for (int v = 0; v < g.n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int a) {
      return parent[a] == a ? a : parent[a] = find(parent[a]);
    };
    std::set<std::pair<int, int>> simple;
    bool acyclic = true;
    for (auto [a, b] : super_edges) {
      auto key = std::make_pair(std::min(a, b), std::max(a, b));
      if (!simple.insert(key).second) continue;
      if (find(a) == find(b)) acyclic = false;
      parent[find(a)] = find(b);
    }
    if (!acyclic) continue;
    int comp = 0;
    for (int v : skel)
      if (find(v) == v) ++comp;
    if (comp != 1) continue;

    int s = static_cast<int>(skel.size());
    std::vector<std::vector<int>> dist(s, std::vector<int>(s, 1 << 20));
    std::vector<int> id(g.n, -1);
    for (int i = 0; i < s; ++i) {
      id[skel[i]] = i;
      dist[i][i] = 0;
    }
    for (auto [a, b] : simple) dist[id[a]][id[b]] = dist[id[b]][id[a]] = 1;
    for (int k = 0; k < s; ++k)
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
          dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
    int radius = 1 << 20;
    for (int i = 0; i < s; ++i)
      radius = std::min(radius, *std::max_element(dist[i].begin(), dist[i].end()));
    if (!best || radius < *best) best = radius;
  }
  return best;
}

Graph k4_minus_edge() {
  return Graph::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Graph bowtie() {
  return Graph::make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

Graph kite_with_tail() {
  // K4 minus an edge, pendant hung on a degree-2 vertex.
  return Graph::make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}});
}

Graph dumbbell7() {
  return Graph::make(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
}

Graph double_star() {
  return Graph::make(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

Graph subdivided_k4() {
  Graph k4 = make_family("clique", {4});
  std::vector<std::pair<int, int>> es;
  int next = 4;
  for (auto [u, v] : k4.edges) {
    es.push_back({u, next});
    es.push_back({v, next});
    ++next;
  }
  return Graph::make(next, es);
}

}  // namespace

TEST_CASE("parallel edge witnesses") {
  for (int n : {5, 6, 7}) {
    auto w = is_parallel_edge(make_family("cycle", {n}));
    REQUIRE(w.has_value());
    CHECK(*w == std::make_pair(0, 1));
  }
  CHECK(is_parallel_edge(make_family("path", {2})) == std::make_pair(0, 1));
  CHECK(is_parallel_edge(make_family("path", {4})) == std::make_pair(0, 3));
  CHECK(is_parallel_edge(make_family("theta", {2, 2, 2})) == std::make_pair(0, 1));
  // The witness is the adjacent degree-3 pair carrying three parallel paths.
  CHECK(is_parallel_edge(k4_minus_edge()) == std::make_pair(0, 1));
  CHECK_FALSE(is_parallel_edge(make_family("clique", {4})).has_value());
  CHECK_FALSE(is_parallel_edge(bowtie()).has_value());
  CHECK_FALSE(is_parallel_edge(Graph::make(1, {})).has_value());
}

TEST_CASE("depth values on the pinned families") {
  CHECK(parallel_tree_depth(Graph::make(1, {})).depth == 0);
  CHECK(parallel_tree_depth(make_family("cycle", {7})).depth == 1);
  CHECK(parallel_tree_depth(make_family("path", {5})).depth == 1);
  CHECK(parallel_tree_depth(make_family("star", {3})).depth == 1);
  CHECK(parallel_tree_depth(k4_minus_edge()).depth == 1);
  CHECK(parallel_tree_depth(bowtie()).depth == 1);
  CHECK(parallel_tree_depth(double_star()).depth == 2);
  CHECK(parallel_tree_depth(dumbbell7()).depth == 2);
  CHECK(parallel_tree_depth(make_family("doubled_path", {1})).depth == 2);
  CHECK(parallel_tree_depth(make_family("doubled_path", {2})).depth == 3);
  CHECK_FALSE(parallel_tree_depth(make_family("clique", {4})).depth.has_value());
  CHECK_FALSE(parallel_tree_depth(kite_with_tail()).depth.has_value());
}

TEST_CASE("returned skeletons satisfy their invariants") {
  std::vector<Graph> pool = {make_family("cycle", {6}),
                             make_family("doubled_path", {2}),
                             make_family("theta", {1, 2, 3}),
                             bowtie(),
                             dumbbell7(),
                             double_star(),
                             make_family("path", {6}),
                             make_family("star", {5})};
  for (const Graph& g : connected_graphs_upto(5)) pool.push_back(g);
  for (const Graph& g : pool) {
    PTreeResult r = parallel_tree_depth(g);
    if (!r.depth) continue;
    REQUIRE(r.skeleton.has_value());
    CHECK(verify_skeleton(g, *r.skeleton));
  }
}

TEST_CASE("recognition and depth agree with the slow oracle") {
  for (const Graph& g : connected_graphs_upto(6)) {
    CAPTURE(encode_graph6(g));
    auto fast = parallel_tree_depth(g).depth;
    auto slow = g.n == 1 ? std::optional<int>(0) : slow_depth(g);
    CHECK(fast == slow);
  }
}

TEST_CASE("enumeration matches the pinned small catalogs") {
  std::vector<Graph> tiny = enumerate_parallel_trees(3, -1);
  REQUIRE(tiny.size() == 4);  // P1, P2, P3, C3
  std::vector<Graph> expect = {Graph::make(1, {}), make_family("path", {2}),
                               make_family("path", {3}), make_family("cycle", {3})};
  for (const Graph& e : expect)
    CHECK(std::any_of(tiny.begin(), tiny.end(),
                      [&](const Graph& t) { return are_isomorphic(t, e); }));

  std::vector<Graph> six = enumerate_parallel_trees(6, -1);
  for (int n : {4, 5, 6})
    CHECK(std::any_of(six.begin(), six.end(), [&](const Graph& t) {
      return are_isomorphic(t, make_family("cycle", {n}));
    }));

  for (const Graph& g : enumerate_parallel_trees(6, 1))
    CHECK(parallel_tree_depth(g).depth <= 1);

  // Cor. 3.1: parallel trees are series-parallel.
  for (const Graph& g : six) CHECK(treewidth_at_most_2(g));

  CHECK_THROWS_AS(enumerate_parallel_trees(9, -1), CapError);
}

TEST_CASE("series-parallel reduction test") {
  CHECK(treewidth_at_most_2(make_family("cycle", {5})));
  CHECK(treewidth_at_most_2(k4_minus_edge()));
  CHECK(treewidth_at_most_2(kite_with_tail()));
  CHECK(treewidth_at_most_2(make_family("path", {7})));
  CHECK(treewidth_at_most_2(make_family("theta", {2, 3, 4})));
  CHECK_FALSE(treewidth_at_most_2(make_family("clique", {4})));
  CHECK_FALSE(treewidth_at_most_2(make_family("clique", {5})));
  CHECK_FALSE(treewidth_at_most_2(subdivided_k4()));
  CHECK_FALSE(treewidth_at_most_2(make_family("wheel", {5})));
}

TEST_CASE("caps and preconditions") {
  CHECK_THROWS_AS(parallel_tree_depth(make_family("star", {21})), CapError);
  CHECK_THROWS_AS(parallel_tree_depth(Graph::make(3, {{0, 1}})), InputError);
  CHECK_THROWS_AS(is_parallel_edge(Graph::make(3, {{0, 1}})), InputError);
}

TEST_CASE("smallest series-parallel non-parallel-tree has 5 vertices 6 edges") {
  std::optional<Graph> found;
  for (const Graph& g : connected_graphs_upto(5)) {
    if (!treewidth_at_most_2(g)) continue;
    if (parallel_tree_depth(g).depth) continue;
    if (!found || g.n < found->n || (g.n == found->n && g.m() < found->m()))
      found = g;
  }
  REQUIRE(found.has_value());
  CHECK(found->n == 5);
  CHECK(found->m() == 6);
  CHECK(are_isomorphic(*found, kite_with_tail()));
}
