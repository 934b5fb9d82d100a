#include "specwl/homcount.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "specwl/furer.hpp"
#include "specwl/graph.hpp"
#include "specwl/ptree.hpp"
#include "specwl/refine.hpp"

using namespace specwl;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::uniform_real_distribution<double> coin(0, 1);
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) es.push_back({i, j});
  return Graph::make(n, es);
}

Graph relabeled(std::mt19937& rng, const Graph& g) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabel(perm);
}

Graph fam(const std::string& name, int p) { return make_family(name, {p}); }

// Reachability closure under single non-adjacent pair merges; iso-deduped.
std::vector<Graph> merge_closure(const Graph& pattern) {
  std::vector<Graph> out{pattern};
  for (size_t h = 0; h < out.size(); ++h) {
    const Graph g = out[h];
    for (int u = 0; u < g.n; ++u)
      for (int v = u + 1; v < g.n; ++v) {
        if (g.has_edge(u, v)) continue;
        std::vector<std::vector<int>> blocks{{u, v}};
        for (int x = 0; x < g.n; ++x)
          if (x != u && x != v) blocks.push_back({x});
        auto qr = quotient(g, blocks);
        REQUIRE(qr.graph.has_value());
        bool known = false;
        for (size_t i = 0; i < out.size() && !known; ++i)
          known = out[i].n == qr.graph->n &&
                  are_isomorphic(out[i], *qr.graph).has_value();
        if (!known) out.push_back(*qr.graph);
      }
  }
  return out;
}

const Graph kite_with_tail =
    Graph::make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}});

}  // namespace

TEST_CASE("hom_brute pinned values") {
  CHECK(hom_brute(fam("cycle", 3), fam("clique", 3)) == 6);
  CHECK(hom_brute(fam("path", 1), fam("clique", 4)) == 4);
  CHECK(hom_brute(fam("path", 9), fam("path", 2)) == 2);
  std::mt19937 rng(7101);
  for (int t = 0; t < 8; ++t) {
    Graph g = random_graph(rng, 4 + t % 5, 0.45);
    CHECK(hom_brute(fam("path", 2), g) == 2 * g.m());
    // disconnected pattern: multiplicative over components
    Graph p2k1 = fam("path", 2).disjoint_union(Graph::make(1, {}));
    CHECK(hom_brute(p2k1, g) == Int(2 * g.m()) * g.n);
  }
  // no hom from a triangle into a bipartite host
  CHECK(hom_brute(fam("cycle", 3), fam("path", 5)) == 0);
}

TEST_CASE("hom_brute equals closed walk counts on cycles") {
  std::mt19937 rng(7102);
  for (int t = 0; t < 3; ++t) {
    Graph g = random_graph(rng, 7, 0.5);
    for (int n = 3; n <= 8; ++n) {
      auto wt = walk_profiles(g, n + 1);
      Int tr = 0;
      for (int u = 0; u < g.n; ++u) tr += wt.at(n, u, u);
      CHECK(hom_brute(fam("cycle", n), g) == tr);
    }
  }
}

TEST_CASE("hom budget guard") {
  CHECK_THROWS_AS(hom_brute(fam("path", 9), fam("clique", 32)), CapError);
  CHECK_THROWS_AS(sub_brute(fam("path", 9), fam("clique", 9)), CapError);
  CHECK_THROWS_AS(spasm(fam("path", 9)), CapError);
  CHECK_THROWS_AS(hom_into_furer(fam("path", 9), furer(fam("cycle", 4))),
                  CapError);
}

TEST_CASE("hom_tw2 matches hom_brute on parallel trees") {
  std::mt19937 rng(7103);
  Graph h1 = random_graph(rng, 8, 0.4);
  Graph h2 = random_graph(rng, 8, 0.6);
  int checked = 0;
  for (const Graph& pt : enumerate_parallel_trees(6, -1)) {
    auto pr = parallel_tree_depth(pt);
    REQUIRE(pr.depth.has_value());
    REQUIRE(pr.skeleton.has_value());
    auto td = decomposition_from_skeleton(pt, *pr.skeleton);
    CHECK(verify_decomposition(pt, td));
    CHECK(hom_tw2(pt, td, h1) == hom_brute(pt, h1));
    CHECK(hom_tw2(pt, td, h2) == hom_brute(pt, h2));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("hom_tw2 pinned examples") {
  std::mt19937 rng(7104);
  Graph host12 = random_graph(rng, 12, 0.35);
  Graph c6 = fam("cycle", 6);
  auto td6 = decomposition_from_skeleton(c6, *parallel_tree_depth(c6).skeleton);
  CHECK(hom_tw2(c6, td6, host12) == hom_brute(c6, host12));

  Graph p2 = fam("path", 2);
  auto td2 = decomposition_from_skeleton(p2, *parallel_tree_depth(p2).skeleton);
  for (int t = 0; t < 4; ++t) {
    Graph g = random_graph(rng, 9, 0.5);
    CHECK(hom_tw2(p2, td2, g) == 2 * g.m());
  }
}

TEST_CASE("hom_tw2 on a hand-built series-parallel decomposition") {
  TreeDecomposition td;
  td.bags = {{0, 1, 2}, {0, 1, 3}, {2, 4}};
  td.tree = Graph::make(3, {{0, 1}, {0, 2}});
  CHECK(verify_decomposition(kite_with_tail, td));
  std::mt19937 rng(7105);
  for (int t = 0; t < 3; ++t) {
    Graph g = random_graph(rng, 8, 0.55);
    CHECK(hom_tw2(kite_with_tail, td, g) == hom_brute(kite_with_tail, g));
  }
}

TEST_CASE("verify_decomposition rejects broken decompositions") {
  Graph c4 = fam("cycle", 4);
  TreeDecomposition ok;
  ok.bags = {{0, 1, 3}, {1, 2, 3}};
  ok.tree = Graph::make(2, {{0, 1}});
  CHECK(verify_decomposition(c4, ok));

  TreeDecomposition wide;
  wide.bags = {{0, 1, 2, 3}};
  wide.tree = Graph::make(1, {});
  CHECK(!verify_decomposition(c4, wide));

  TreeDecomposition uncovered;  // edge {2,3} in no bag
  uncovered.bags = {{0, 1, 3}, {1, 2}};
  uncovered.tree = Graph::make(2, {{0, 1}});
  CHECK(!verify_decomposition(c4, uncovered));

  TreeDecomposition torn;  // vertex 1 in two non-adjacent bags
  torn.bags = {{0, 1, 3}, {0, 3}, {1, 2, 3}};
  torn.tree = Graph::make(3, {{0, 1}, {1, 2}});
  CHECK(!verify_decomposition(c4, torn));

  TreeDecomposition cyclic;
  cyclic.bags = {{0, 1, 3}, {1, 2, 3}, {1, 3}};
  cyclic.tree = Graph::make(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(!verify_decomposition(c4, cyclic));

  CHECK_THROWS_AS(hom_tw2(c4, wide, fam("clique", 3)), InputError);
  CHECK_THROWS_AS(
      decomposition_from_skeleton(fam("cycle", 5),
                                  *parallel_tree_depth(c4).skeleton),
      InputError);
}

TEST_CASE("hom_tw2 separates the doubled_path Furer pair") {
  Graph dp1 = fam("doubled_path", 1);
  auto pr = parallel_tree_depth(dp1);
  REQUIRE(pr.depth == 2);
  auto td = decomposition_from_skeleton(dp1, *pr.skeleton);
  auto fg = furer(dp1);
  auto tw = twist(fg, {dp1.edges[0]});
  Int on_g = hom_tw2(dp1, td, fg.g);
  Int on_h = hom_tw2(dp1, td, tw.g);
  CHECK(on_g != on_h);
  CHECK(on_g > 0);
}

TEST_CASE("hom_parallel_tree matches hom_brute") {
  std::mt19937 rng(7106);
  Graph h1 = random_graph(rng, 8, 0.45);
  Graph h2 = random_graph(rng, 7, 0.6);
  HostPowers hp1(h1), hp2(h2);
  int checked = 0;
  for (const Graph& pt : enumerate_parallel_trees(6, -1)) {
    auto pr = parallel_tree_depth(pt);
    REQUIRE(pr.skeleton.has_value());
    CHECK(hom_parallel_tree(*pr.skeleton, hp1) == hom_brute(pt, h1));
    CHECK(hom_parallel_tree(*pr.skeleton, hp2) == hom_brute(pt, h2));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("hom_into_furer matches hom_brute on small gadgets") {
  std::vector<Graph> bases = {fam("cycle", 4), fam("cycle", 5), fam("star", 3),
                              fam("clique", 4)};
  std::vector<Graph> patterns = {fam("path", 2), fam("path", 3),
                                 fam("cycle", 3), fam("cycle", 4),
                                 fam("path", 4)};
  for (const Graph& base : bases) {
    auto fg = furer(base);
    auto tw = twist(fg, {base.edges[0]});
    for (const Graph& f : patterns) {
      CHECK(hom_into_furer(f, fg) == hom_brute(f, fg.g));
      CHECK(hom_into_furer(f, tw) == hom_brute(f, tw.g));
    }
  }
}

TEST_CASE("hom_into_furer witnesses maximality on K4") {
  Graph k4 = fam("clique", 4);
  auto fg = furer(k4);
  auto tw = twist(fg, {k4.edges[0]});
  Int on_g = hom_into_furer(k4, fg);
  Int on_h = hom_into_furer(k4, tw);
  CHECK(on_g != on_h);
  CHECK(on_g == hom_brute(k4, fg.g));
  CHECK(on_h == hom_brute(k4, tw.g));
}

TEST_CASE("spasm pinned bases") {
  auto s3 = spasm(fam("cycle", 3));
  REQUIRE(s3.entries.size() == 1);
  CHECK(are_isomorphic(s3.entries[0].quotient, fam("cycle", 3)).has_value());
  CHECK(s3.entries[0].coefficient == 1);
  CHECK(s3.aut_count == 6);

  auto s4 = spasm(fam("cycle", 4));
  REQUIRE(s4.entries.size() == 3);
  auto coef_of = [](const SpasmBasis& b, const Graph& q) -> Int {
    for (const auto& e : b.entries)
      if (are_isomorphic(e.quotient, q)) return e.coefficient;
    FAIL("expected spasm member missing");
    return 0;
  };
  CHECK(coef_of(s4, fam("cycle", 4)) == 1);
  CHECK(coef_of(s4, fam("path", 3)) == -2);
  CHECK(coef_of(s4, fam("path", 2)) == 1);
  CHECK(s4.aut_count == 8);

  auto s5 = spasm(fam("cycle", 5));
  CHECK(s5.entries.size() == 3);
  CHECK(coef_of(s5, fam("cycle", 5)) == 1);
  CHECK(coef_of(s5, fam("cycle", 3)) == 5);

  auto s8 = spasm(fam("cycle", 8));
  bool has_k4 = false;
  for (const auto& e : s8.entries)
    has_k4 = has_k4 || are_isomorphic(e.quotient, fam("clique", 4)).has_value();
  CHECK(has_k4);
}

TEST_CASE("spasm equals the single-merge closure oracle") {
  for (const Graph& pattern : connected_graphs_upto(6)) {
    if (pattern.n < 2) continue;
    auto basis = spasm(pattern);
    auto oracle = merge_closure(pattern);
    REQUIRE(basis.entries.size() == oracle.size());
    for (const auto& e : basis.entries) {
      CHECK(e.coefficient != 0);
      bool found = false;
      for (const auto& q : oracle)
        if (e.quotient.n == q.n && are_isomorphic(e.quotient, q)) {
          found = true;
          break;
        }
      CHECK(found);
    }
  }
}

TEST_CASE("subgraph counts pinned") {
  CHECK(sub_brute(fam("cycle", 3), fam("clique", 4)) == 4);
  CHECK(sub_brute(fam("cycle", 4), fam("clique", 4)) == 3);
  CHECK(sub_via_hom(fam("cycle", 3), fam("clique", 4)) == 4);
  CHECK(sub_via_hom(fam("cycle", 4), fam("clique", 4)) == 3);
  std::mt19937 rng(7107);
  for (int t = 0; t < 5; ++t) {
    Graph g = random_graph(rng, 8, 0.5);
    CHECK(sub_brute(fam("path", 2), g) == g.m());
    CHECK(sub_via_hom(fam("path", 2), g) == g.m());
  }
  CHECK(sub_brute(fam("clique", 4), fam("cycle", 3)) == 0);
  CHECK(sub_via_hom(fam("clique", 4), fam("cycle", 3)) == 0);
}

TEST_CASE("seven-cycle count differs across the C7 Furer pair") {
  auto [g, h] = furer_pair(fam("cycle", 7));
  CHECK(sub_brute(fam("cycle", 7), g) == 2);
  CHECK(sub_brute(fam("cycle", 7), h) == 0);
  CHECK(sub_via_hom(fam("cycle", 7), g) == 2);
  CHECK(sub_via_hom(fam("cycle", 7), h) == 0);
}

TEST_CASE("sub_via_hom equals sub_brute on random instances") {
  std::mt19937 rng(7108);
  std::vector<Graph> patterns;
  for (const Graph& g : connected_graphs_upto(5))
    if (g.n >= 2) patterns.push_back(g);
  int done = 0;
  for (const Graph& pattern : patterns) {
    Graph host = random_graph(rng, 8 + done % 2, 0.5);
    CHECK(sub_via_hom(pattern, host) == sub_brute(pattern, host));
    ++done;
  }
  CHECK(done > 20);
}

TEST_CASE("counting_power_check pinned verdicts") {
  auto c6 = counting_power_check(fam("cycle", 6), 1);
  CHECK(c6.countable);
  CHECK(!c6.witness.has_value());

  auto c4 = counting_power_check(fam("cycle", 4), 1);
  CHECK(c4.countable);

  auto c7 = counting_power_check(fam("cycle", 7), 1);
  CHECK(!c7.countable);
  REQUIRE(c7.witness.has_value());
  CHECK(c7.witness_depth == 2);
  auto wd = parallel_tree_depth(*c7.witness);
  CHECK(wd.depth == 2);

  CHECK(counting_power_check(fam("cycle", 7), 2).countable);
  CHECK(counting_power_check(fam("cycle", 7), -1).countable);
  CHECK(counting_power_check(fam("path", 7), -1).countable);

  auto c8 = counting_power_check(fam("cycle", 8), -1);
  CHECK(!c8.countable);
  REQUIRE(c8.witness.has_value());
  CHECK(!c8.witness_depth.has_value());
  CHECK(are_isomorphic(*c8.witness, fam("clique", 4)).has_value());

  CHECK_THROWS_AS(
      counting_power_check(fam("path", 2).disjoint_union(fam("path", 2)), 1),
      InputError);
}

TEST_CASE("counts are isomorphism invariant") {
  std::mt19937 rng(7109);
  std::vector<Graph> patterns = {fam("cycle", 4), kite_with_tail,
                                 fam("star", 3)};
  for (const Graph& pattern : patterns) {
    Graph host = random_graph(rng, 8, 0.5);
    Graph rp = relabeled(rng, pattern);
    Graph rh = relabeled(rng, host);
    CHECK(hom_brute(pattern, host) == hom_brute(rp, rh));
    CHECK(sub_brute(pattern, host) == sub_brute(rp, rh));
    CHECK(sub_via_hom(pattern, host) == sub_via_hom(rp, rh));
  }
}

TEST_CASE("cospectral pair with differing path homomorphisms") {
  Graph a = fam("cycle", 4).disjoint_union(Graph::make(1, {}));
  Graph b = fam("star", 4);
  REQUIRE(a.n == 5);
  REQUIRE(b.n == 5);
  HostPowers pa(a), pb(b);
  for (int k = 1; k <= 5; ++k) {
    Int ta = 0, tb = 0;
    for (int u = 0; u < 5; ++u) {
      ta += pa.power(k)[static_cast<size_t>(u) * 5 + u];
      tb += pb.power(k)[static_cast<size_t>(u) * 5 + u];
    }
    CHECK(ta == tb);
  }
  for (int n = 3; n <= 5; ++n)
    CHECK(hom_brute(fam("cycle", n), a) == hom_brute(fam("cycle", n), b));
  CHECK(hom_brute(fam("path", 3), a) == 16);
  CHECK(hom_brute(fam("path", 3), b) == 20);
}
