#include "doctest.h"
#include "specwl/graph.hpp"

#include <random>
#include <set>

using namespace specwl;

TEST_CASE("graph6 decodes K3 from Bw") {
  Graph g = parse_graph6("Bw");
  CHECK(g.n == 3);
  CHECK(g.m() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(1, 2));
}

TEST_CASE("graph6 edgeless singleton is @") {
  CHECK(encode_graph6(Graph::make(1, {})) == "@");
  Graph g = parse_graph6("@");
  CHECK(g.n == 1);
  CHECK(g.m() == 0);
}

TEST_CASE("graph6 round trip on a generated corpus") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; t++) {
    int n = 1 + (int)(rng() % 12);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (rng() & 1) e.push_back({u, v});
    Graph g = Graph::make(n, e);
    std::string s = encode_graph6(g);
    Graph h = parse_graph6(s);
    CHECK(g == h);
    CHECK(encode_graph6(h) == s);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), InputError);
  CHECK_THROWS_AS(parse_graph6("B"), InputError);      // truncated
  CHECK_THROWS_AS(parse_graph6("Bwx"), InputError);    // overlong
  CHECK_THROWS_AS(parse_graph6("~??"), InputError);  // n>62 header form
  CHECK_THROWS_AS(parse_graph6(std::string(1, '\x20')), InputError);
  // n=2 has 1 triangle bit + 5 pad bits; '@' sets a pad bit
  CHECK_THROWS_AS(parse_graph6("A@"), InputError);
  CHECK(parse_graph6("A_").m() == 1);  // K2, clean padding
}

TEST_CASE("graph6 matches known encodings") {
  CHECK(encode_graph6(make_family("clique", {3})) == "Bw");
  CHECK(encode_graph6(Graph::make(2, {})) == "A?");
  CHECK(encode_graph6(Graph::make(2, {{0, 1}})) == "A_");
}

TEST_CASE("edge list round trip and sniffing") {
  Graph g = make_family("cycle", {5});
  Graph h = parse_edge_list(encode_edge_list(g));
  CHECK(g == h);
  CHECK(parse_graph_text("3 2\n0 1\n1 2\n").m() == 2);
  CHECK(parse_graph_text("Bw").m() == 3);
}

TEST_CASE("are_isomorphic basics") {
  Graph c4 = make_family("cycle", {4});
  Graph c4r = c4.relabel({2, 0, 3, 1});
  auto w = are_isomorphic(c4, c4r);
  REQUIRE(w.has_value());
  // witness verifies
  for (auto [u, v] : c4.edges) CHECK(c4r.has_edge((*w)[u], (*w)[v]));

  Graph c6 = make_family("cycle", {6});
  Graph c3c3 = make_family("cycle", {3}).disjoint_union(make_family("cycle", {3}));
  CHECK(!are_isomorphic(c6, c3c3));

  Graph k13 = make_family("star", {3});
  Graph p4 = make_family("path", {4});
  CHECK(!are_isomorphic(k13, p4));
}

TEST_CASE("are_isomorphic is an equivalence relation on samples") {
  std::mt19937_64 rng(11);
  std::vector<Graph> pool;
  for (int t = 0; t < 12; t++) {
    int n = 4 + (int)(rng() % 4);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (rng() % 3 == 0) e.push_back({u, v});
    pool.push_back(Graph::make(n, e));
  }
  for (auto& g : pool) CHECK(are_isomorphic(g, g).has_value());
  for (auto& g : pool)
    for (auto& h : pool) {
      bool gh = are_isomorphic(g, h).has_value();
      bool hg = are_isomorphic(h, g).has_value();
      CHECK(gh == hg);
    }
  // transitivity through relabelings
  for (auto& g : pool) {
    std::vector<int> p1(g.n), p2(g.n);
    for (int i = 0; i < g.n; i++) p1[i] = p2[i] = i;
    std::shuffle(p1.begin(), p1.end(), rng);
    std::shuffle(p2.begin(), p2.end(), rng);
    Graph a = g.relabel(p1), b = a.relabel(p2);
    CHECK(are_isomorphic(g, a).has_value());
    CHECK(are_isomorphic(a, b).has_value());
    CHECK(are_isomorphic(g, b).has_value());
  }
}

TEST_CASE("are_isomorphic cap") {
  Graph big = make_family("path", {13});
  CHECK_THROWS_AS((void)are_isomorphic(big, big), CapError);
}

TEST_CASE("families") {
  CHECK(make_family("cycle", {5}).m() == 5);
  Graph w6 = make_family("wheel", {6});
  CHECK(w6.n == 7);
  CHECK(w6.m() == 12);
  CHECK(w6.deg(0) == 6);
  Graph dp1 = make_family("doubled_path", {1});
  CHECK(dp1.n == 2 * 1 + 2 + 2 * (2 * 1 + 1));
  CHECK(dp1.m() == 4 * (2 * 1 + 1));
  for (int k = 2; k <= 3; k++) {
    Graph dp = make_family("doubled_path", {k});
    CHECK(dp.n == 2 * k + 2 + 2 * (2 * k + 1));
    CHECK(dp.m() == 4 * (2 * k + 1));
    CHECK(dp.connected());
  }
  Graph th = make_family("theta", {2, 2, 2});
  CHECK(th.n == 5);
  CHECK(th.m() == 6);
  CHECK(th.deg(0) == 3);
  CHECK(th.deg(1) == 3);
  CHECK(parse_family_spec("doubled_path:2").n == 16);
  CHECK_THROWS_AS(make_family("frobnicate", {1}), InputError);
  CHECK_THROWS_AS(make_family("theta", {1, 1}), InputError);
}

TEST_CASE("quotient") {
  Graph c4 = make_family("cycle", {4});
  auto r = quotient(c4, {{0, 2}, {1}, {3}});
  REQUIRE(r.graph.has_value());
  CHECK(are_isomorphic(*r.graph, make_family("path", {3})).has_value());

  Graph c3 = make_family("cycle", {3});
  auto rej = quotient(c3, {{0, 1}, {2}});
  CHECK(!rej.graph.has_value());
  CHECK(rej.reject_u == 0);
  CHECK(rej.reject_v == 1);

  // identity quotient
  Graph g = make_family("wheel", {5});
  std::vector<std::vector<int>> singl;
  for (int i = 0; i < g.n; i++) singl.push_back({i});
  auto id = quotient(g, singl);
  REQUIRE(id.graph.has_value());
  CHECK(are_isomorphic(*id.graph, g).has_value());

  CHECK_THROWS_AS(quotient(c3, {{0, 1}}), InputError);          // incomplete
  CHECK_THROWS_AS(quotient(c3, {{0, 1}, {1, 2}}), InputError);  // overlap
}

TEST_CASE("graph enumeration counts match OEIS A000088 / A001349") {
  auto all = all_graphs_upto(6);
  int by_n[7] = {0};
  for (auto& g : all) by_n[g.n]++;
  CHECK(by_n[1] == 1);
  CHECK(by_n[2] == 2);
  CHECK(by_n[3] == 4);
  CHECK(by_n[4] == 11);
  CHECK(by_n[5] == 34);
  CHECK(by_n[6] == 156);
  auto conn = connected_graphs_upto(6);
  int cn[7] = {0};
  for (auto& g : conn) cn[g.n]++;
  CHECK(cn[1] == 1);
  CHECK(cn[2] == 1);
  CHECK(cn[3] == 2);
  CHECK(cn[4] == 6);
  CHECK(cn[5] == 21);
  CHECK(cn[6] == 112);
}

TEST_CASE("automorphism counts") {
  CHECK(automorphism_count(make_family("cycle", {4})) == 8);
  CHECK(automorphism_count(make_family("clique", {4})) == 24);
  CHECK(automorphism_count(make_family("path", {3})) == 2);
  CHECK(automorphism_count(make_family("star", {3})) == 6);
}
