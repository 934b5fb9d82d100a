#include <algorithm>
#include <random>

#include "doctest.h"
#include "specwl/furer.hpp"
#include "specwl/wlzoo.hpp"

using namespace specwl;

namespace {

Graph random_connected(std::mt19937_64& rng, int n, double p = 0.5) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (;;) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < p) es.push_back({u, v});
    Graph g = Graph::make(n, es);
    if (g.connected()) return g;
  }
}

}  // namespace

TEST_CASE("meta vertex counts follow the even-subset formula") {
  CHECK(furer(make_family("clique", {4})).g.n == 16);
  Graph p2 = make_family("path", {2});
  FurerGraph fp2 = furer(p2);
  CHECK(fp2.g.n == 2);
  CHECK(fp2.g.m() == 1);
  FurerGraph fc4 = furer(make_family("cycle", {4}));
  CHECK(fc4.g.n == 8);
  for (int x = 0; x < 4; ++x)
    CHECK(std::count_if(fc4.verts.begin(), fc4.verts.end(),
                        [&](const auto& v) { return v.first == x; }) == 2);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    Graph base = random_connected(rng, 3 + static_cast<int>(rng() % 4));
    FurerGraph fg = furer(base);
    long long expect = 0;
    for (int x = 0; x < base.n; ++x) expect += 1LL << (base.deg(x) - 1);
    CHECK(fg.g.n == expect);
    // Meta sets partition the vertex range in base-vertex order.
    for (size_t i = 1; i < fg.verts.size(); ++i)
      CHECK(fg.verts[i - 1] < fg.verts[i]);
  }
}

TEST_CASE("edge rule: membership agreement, flipped on twisted edges") {
  std::mt19937_64 rng(32);
  Graph base = random_connected(rng, 5);
  FurerGraph fg = twist(furer(base), {base.edges[0]});
  auto in_set = [&](int x, uint32_t mask, int y) {
    const auto& nx = base.adj[x];
    int pos = static_cast<int>(std::lower_bound(nx.begin(), nx.end(), y) - nx.begin());
    return ((mask >> pos) & 1u) != 0;
  };
  for (int i = 0; i < fg.g.n; ++i)
    for (int j = i + 1; j < fg.g.n; ++j) {
      auto [x, xm] = fg.verts[i];
      auto [y, ym] = fg.verts[j];
      bool expect = false;
      if (base.has_edge(x, y)) {
        bool agree = in_set(x, xm, y) == in_set(y, ym, x);
        bool twisted = std::binary_search(fg.twist_set.begin(), fg.twist_set.end(),
                                          std::make_pair(std::min(x, y), std::max(x, y)));
        expect = agree != twisted;
      }
      CHECK(fg.g.has_edge(i, j) == expect);
    }
}

TEST_CASE("twists compose by symmetric difference and parity") {
  Graph c4 = make_family("cycle", {4});
  FurerGraph g = furer(c4);
  FurerGraph once = twist(g, {c4.edges[1]});
  CHECK(twist(once, {c4.edges[1]}).g == g.g);

  // Single twists by different edges are isomorphic; double twists undo.
  for (size_t a = 0; a < c4.edges.size(); ++a)
    for (size_t b = a + 1; b < c4.edges.size(); ++b) {
      CHECK(are_isomorphic(twist(g, {c4.edges[a]}).g, twist(g, {c4.edges[b]}).g));
      CHECK(are_isomorphic(twist(g, {c4.edges[a], c4.edges[b]}).g, g.g));
    }

  std::mt19937_64 rng(33);
  Graph base = random_connected(rng, 5);
  FurerGraph fg = furer(base);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::pair<int, int>> s1, s2, sboth;
    std::vector<char> pick(base.m());
    for (auto& e : base.edges) {
      int r = static_cast<int>(rng() % 4);
      if (r & 1) s1.push_back(e);
      if (r & 2) s2.push_back(e);
      if ((r & 1) != ((r & 2) >> 1)) sboth.push_back(e);
    }
    CHECK(twist(twist(fg, s1), s2).g == twist(fg, sboth).g);
  }

  CHECK_THROWS_AS(twist(g, {{0, 2}}), InputError);  // C4 diagonal is a non-edge
}

TEST_CASE("furer_pair of C4 yields two 4-cycles versus one 8-cycle") {
  auto [g, h] = furer_pair(make_family("cycle", {4}));
  Graph two_c4 = make_family("cycle", {4}).disjoint_union(make_family("cycle", {4}));
  CHECK(are_isomorphic(g, two_c4));
  CHECK(are_isomorphic(h, make_family("cycle", {8})));
  CHECK_FALSE(are_isomorphic(g, h));
}

TEST_CASE("furer_pair members are non-isomorphic but CFI-similar") {
  auto [g5, h5] = furer_pair(make_family("cycle", {5}));
  CHECK_FALSE(are_isomorphic(g5, h5));

  // Min-degree-2 bases: equal degree sequences, wl1 cannot tell the pair apart.
  std::vector<Graph> catalog = {make_family("cycle", {4}), make_family("cycle", {6}),
                                make_family("clique", {4}),
                                make_family("theta", {2, 2, 2}),
                                make_family("doubled_path", {1})};
  for (const Graph& base : catalog) {
    auto [g, h] = furer_pair(base);
    std::vector<int> dg, dh;
    for (int v = 0; v < g.n; ++v) dg.push_back(g.deg(v));
    for (int v = 0; v < h.n; ++v) dh.push_back(h.deg(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    CHECK(dg == dh);
    CHECK_FALSE(compare_graphs(g, h, Algo::WL1, ITERS_STABLE).distinguished);
  }
}

TEST_CASE("furer rejects empty or disconnected bases") {
  CHECK_THROWS_AS(furer(Graph::make(1, {})), InputError);
  CHECK_THROWS_AS(furer(Graph::make(4, {{0, 1}, {2, 3}})), InputError);
}

TEST_CASE("edge components after separation") {
  Graph c6 = make_family("cycle", {6});
  auto comps = connected_components_after_separation(c6, {0, 3});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 3);
  CHECK(comps[1].size() == 3);
  for (const auto& comp : comps) {
    std::vector<char> touched(6, 0);
    for (int e : comp) {
      touched[c6.edges[e].first] = 1;
      touched[c6.edges[e].second] = 1;
    }
    // Each side spans one arc between the antipodal separators.
    CHECK(touched[0]);
    CHECK(touched[3]);
  }

  auto whole = connected_components_after_separation(c6, {});
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].size() == 6);

  Graph theta = make_family("theta", {2, 2, 2});
  auto paths = connected_components_after_separation(theta, {0, 1});
  REQUIRE(paths.size() == 3);
  for (const auto& comp : paths) CHECK(comp.size() == 2);

  CHECK_THROWS_AS(connected_components_after_separation(c6, {7}), InputError);
}
