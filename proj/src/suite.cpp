#include "specwl/suite.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "specwl/furer.hpp"
#include "specwl/graph.hpp"
#include "specwl/homcount.hpp"
#include "specwl/pebble.hpp"
#include "specwl/ptree.hpp"
#include "specwl/refine.hpp"
#include "specwl/sympower.hpp"
#include "specwl/wlzoo.hpp"

namespace specwl {
namespace {

// Collects check results for one case; observed text is composed at the end.
struct CaseCtx {
  uint64_t seed = 0;
  std::string id;
  std::string inputs, expected, extra;
  std::vector<std::string> notes;
  int checks = 0, failures = 0;

  std::mt19937_64 rng() const {
    return std::mt19937_64(fnv1a(id.data(), id.size(), seed));
  }
  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (notes.size() < 4) notes.push_back(what);
    }
  }
  std::string observed() const {
    std::string out = extra;
    if (!out.empty()) out += "; ";
    if (failures == 0) {
      out += "all " + std::to_string(checks) + " checks passed";
    } else {
      out += std::to_string(failures) + "/" + std::to_string(checks) + " checks failed";
      for (const std::string& n : notes) out += "; " + n;
      if (failures > (int)notes.size()) out += "; ...";
    }
    return out;
  }
};

double rnd01(std::mt19937_64& rng) {
  return (double)(rng() >> 11) * (1.0 / 9007199254740992.0);
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rnd01(rng) < p) e.push_back({u, v});
  return Graph::make(n, std::move(e));
}

Graph random_connected(std::mt19937_64& rng, int n, double p) {
  for (int tries = 0; tries < 200; ++tries) {
    Graph g = random_graph(rng, n, p);
    if (g.connected()) return g;
  }
  Graph g = random_graph(rng, n, p);
  std::vector<std::pair<int, int>> e = g.edges;
  for (int u = 0; u + 1 < n; ++u) e.push_back({u, u + 1});
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return Graph::make(n, std::move(e));
}

Graph random_relabel(std::mt19937_64& rng, const Graph& g) {
  std::vector<int> perm(g.n);
  for (int i = 0; i < g.n; ++i) perm[i] = i;
  for (int i = g.n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
  return g.relabel(perm);
}

// First-occurrence canonical form; compares partitions across id schemes.
std::vector<int> canon_partition(const std::vector<int>& colors) {
  std::vector<int> out(colors.size());
  std::vector<std::pair<int, int>> seen;  // (color, canonical id)
  for (size_t i = 0; i < colors.size(); ++i) {
    int id = -1;
    for (const auto& [c, cid] : seen)
      if (c == colors[i]) id = cid;
    if (id < 0) {
      id = (int)seen.size();
      seen.push_back({colors[i], id});
    }
    out[i] = id;
  }
  return out;
}

// tr(A^k) for k = 1..L as decimal strings.
std::vector<std::string> trace_vector(const Graph& g, int L) {
  WalkTable wt = walk_profiles(g, L + 1);
  std::vector<std::string> tv;
  for (int k = 1; k <= L; ++k) {
    Int s = 0;
    for (int u = 0; u < g.n; ++u) s += wt.at(k, u, u);
    tv.push_back(s.str());
  }
  return tv;
}

Graph kite_with_tail() {
  return Graph::make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}});
}
// Two diamonds joined hub to hub: the smallest handy depth-2 skeleton chain.
Graph dumbbell() {
  return Graph::make(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                         {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {1, 4}});
}
Graph paw() { return Graph::make(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }
Graph diamond() {
  return Graph::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}
Graph bull() { return Graph::make(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}}); }
Graph two_triangles() {
  return Graph::make(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
}
Graph c4_plus_k1() { return Graph::make(5, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}); }

struct NamedPair {
  std::string name;
  Graph g, h;
};

// Standing comparison corpus; every joint fits the 40-vertex tuple caps.
std::vector<NamedPair> catalog_pairs(uint64_t seed) {
  std::vector<NamedPair> out;
  auto add_furer = [&out](const std::string& name, const Graph& base) {
    auto [g, h] = furer_pair(base);
    out.push_back({"furer-" + name, g, h});
  };
  for (int n = 3; n <= 6; ++n)
    add_furer("cycle" + std::to_string(n), make_family("cycle", {n}));
  add_furer("paw", paw());
  add_furer("diamond", diamond());
  add_furer("bull", bull());
  add_furer("kite", kite_with_tail());
  add_furer("clique4", make_family("clique", {4}));
  out.push_back({"c6-vs-2xc3", make_family("cycle", {6}), two_triangles()});
  out.push_back({"p3-vs-k3", make_family("path", {3}), make_family("clique", {3})});
  out.push_back({"star4-vs-p5", make_family("star", {4}), make_family("path", {5})});
  out.push_back({"cospectral-c4k1-vs-star4", c4_plus_k1(), make_family("star", {4})});
  std::mt19937_64 rng(fnv1a("catalog", 7, seed));
  for (int n : {7, 8, 9}) {
    Graph g = random_connected(rng, n, 0.4);
    out.push_back({"iso-n" + std::to_string(n), g, random_relabel(rng, g)});
  }
  for (int n : {5, 6, 7, 8}) {
    out.push_back({"random-n" + std::to_string(n), random_graph(rng, n, 0.5),
                   random_graph(rng, n, 0.5)});
  }
  return out;
}

bool dist_at(const NamedPair& p, Algo a, int d) {
  return compare_graphs(p.g, p.h, a, d).distinguished;
}

// Non-adjacent pair merges iterated to closure, deduplicated by isomorphism.
std::vector<Graph> merge_closure(const Graph& f) {
  std::vector<Graph> out = {f};
  for (size_t i = 0; i < out.size(); ++i) {
    const Graph cur = out[i];
    for (int u = 0; u < cur.n; ++u)
      for (int v = u + 1; v < cur.n; ++v) {
        if (cur.has_edge(u, v)) continue;
        std::vector<std::vector<int>> blocks = {{u, v}};
        for (int w = 0; w < cur.n; ++w)
          if (w != u && w != v) blocks.push_back({w});
        auto q = quotient(cur, blocks);
        if (!q.graph) continue;
        bool known = false;
        for (const Graph& g : out)
          if (g.n == q.graph->n && g.m() == q.graph->m() &&
              are_isomorphic(g, *q.graph)) {
            known = true;
            break;
          }
        if (!known) out.push_back(*q.graph);
      }
  }
  return out;
}

// Non-isomorphic same-order pairs with equal trace vectors, <= 6 vertices.
std::vector<std::pair<Graph, Graph>> cospectral_pairs_upto6() {
  std::vector<Graph> all = all_graphs_upto(6);
  std::vector<std::vector<std::string>> keys(all.size());
  for (size_t i = 0; i < all.size(); ++i) {
    keys[i] = trace_vector(all[i], all[i].n);
    keys[i].push_back(std::to_string(all[i].n));
  }
  std::vector<std::pair<Graph, Graph>> out;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (keys[i] != keys[j]) continue;
      if (are_isomorphic(all[i], all[j])) continue;
      out.push_back({all[i], all[j]});
    }
  return out;
}

// ---- A1 ------------------------------------------------------------------

void a1_walk_vs_float(CaseCtx& c) {
  c.inputs = "100 seeded random connected graphs, n <= 10";
  c.expected = "identical partition sequences at every iteration";
  auto rng = c.rng();
  for (int i = 0; i < 100; ++i) {
    int n = 4 + (int)(rng() % 7);
    Graph g = random_connected(rng, n, 0.3 + 0.4 * rnd01(rng));
    RefinementTrace tw = spectral_refine(g, ITERS_STABLE);
    RefinementTrace tf = spectral_refine_float(g, ITERS_STABLE);
    c.require(tw.iterations.size() == tf.iterations.size() && tw.stable && tf.stable,
              "graph " + encode_graph6(g) + ": trace shapes differ");
    size_t iters = std::min(tw.iterations.size(), tf.iterations.size());
    for (size_t t = 0; t < iters; ++t)
      c.require(canon_partition(tw.iterations[t].colors) ==
                    canon_partition(tf.iterations[t].colors),
                "graph " + encode_graph6(g) + ": partitions differ at iteration " +
                    std::to_string(t));
  }
}

// ---- A2 ------------------------------------------------------------------

void a2_pair(CaseCtx& c, const std::string& name, const Graph& base, int dmax) {
  c.inputs = name + " gadget pair; all parallel trees <= 7 vertices, depth <= " +
             std::to_string(dmax);
  c.expected = "equal invariants at each depth and equal hom counts";
  auto [g, h] = furer_pair(base);
  for (int d = 1; d <= dmax; ++d)
    c.require(!compare_graphs(g, h, Algo::Spec, d).distinguished,
              "invariants must agree at depth " + std::to_string(d));
  HostPowers pg(g), ph(h);
  int patterns = 0;
  for (const Graph& f : enumerate_parallel_trees(7, dmax)) {
    PTreeResult r = parallel_tree_depth(f);
    c.require(r.depth.has_value() && r.skeleton.has_value(),
              encode_graph6(f) + ": enumerated pattern must carry a skeleton");
    if (!r.depth || *r.depth > dmax) continue;
    ++patterns;
    c.require(hom_parallel_tree(*r.skeleton, pg) == hom_parallel_tree(*r.skeleton, ph),
              "hom counts differ on pattern " + encode_graph6(f));
  }
  c.extra = std::to_string(patterns) + " patterns against " +
            std::to_string(g.n) + "-vertex hosts";
}

// ---- A3 ------------------------------------------------------------------

void a3_range(CaseCtx& c, int nlo, int nhi) {
  c.inputs = "all connected non-parallel-trees, " + std::to_string(nlo) + " <= n <= " +
             std::to_string(nhi);
  c.expected = "pair never separated, hom counts onto the pair differ";
  int nonpt = 0;
  for (const Graph& f : connected_graphs_upto(nhi)) {
    if (f.n < nlo) continue;
    if (parallel_tree_depth(f).depth) continue;
    ++nonpt;
    FurerGraph fg = furer(f);
    FurerGraph fh = twist(fg, {f.edges.front()});
    c.require(!compare_graphs(fg.g, fh.g, Algo::Spec, ITERS_STABLE).distinguished,
              encode_graph6(f) + ": refinement must never separate its pair");
    c.require(hom_into_furer(f, fg) != hom_into_furer(f, fh),
              encode_graph6(f) + ": hom counts onto the pair must differ");
  }
  c.extra = std::to_string(nonpt) + " non-parallel-tree patterns";
}

// ---- A4 ------------------------------------------------------------------

void a4_k(CaseCtx& c, int k) {
  c.inputs = "doubled_path:" + std::to_string(k) + " gadget pair";
  c.expected = "equal through iteration " + std::to_string(k) +
               ", separated at iteration " + std::to_string(k + 1);
  Graph base = make_family("doubled_path", {k});
  auto [g, h] = furer_pair(base);
  c.require(!compare_graphs(g, h, Algo::Spec, k).distinguished,
            "must agree through iteration " + std::to_string(k));
  CompareVerdict full = compare_graphs(g, h, Algo::Spec, ITERS_STABLE);
  c.require(full.distinguished && full.iteration == k + 1,
            "first separation must happen at iteration " + std::to_string(k + 1));
  c.extra = "sides have " + std::to_string(g.n) + " vertices; first split at iteration " +
            std::to_string(full.iteration);
}

void a4_growth(CaseCtx& c) {
  c.inputs = "doubled_path:k gadgets, k = 1, 2, 3";
  c.expected = "vertex counts grow by a constant per step";
  int n1 = furer(make_family("doubled_path", {1})).g.n;
  int n2 = furer(make_family("doubled_path", {2})).g.n;
  int n3 = furer(make_family("doubled_path", {3})).g.n;
  c.require(n1 < n2 && n2 < n3 && n2 - n1 == n3 - n2,
            "sizes must grow linearly in k");
  c.extra = "sizes " + std::to_string(n1) + ", " + std::to_string(n2) + ", " +
            std::to_string(n3);
}

// ---- A5 ------------------------------------------------------------------

void a5_cycles(CaseCtx& c) {
  c.inputs = "cycle patterns C3..C7, unbounded depth";
  c.expected = "countable";
  for (int m = 3; m <= 7; ++m)
    c.require(counting_power_check(make_family("cycle", {m}), -1).countable,
              "C" + std::to_string(m) + " must be countable");
}

void a5_paths(CaseCtx& c) {
  c.inputs = "path patterns on 1..7 vertices, unbounded depth";
  c.expected = "countable";
  for (int n = 1; n <= 7; ++n)
    c.require(counting_power_check(make_family("path", {n}), -1).countable,
              "P" + std::to_string(n) + " must be countable");
}

void a5_c8_witness(CaseCtx& c) {
  c.inputs = "cycle pattern C8, unbounded depth";
  c.expected = "not countable, witness isomorphic to K4";
  CountingPower cp = counting_power_check(make_family("cycle", {8}), -1);
  c.require(!cp.countable, "C8 must not be countable");
  c.require(cp.witness.has_value() &&
                are_isomorphic(*cp.witness, make_family("clique", {4})).has_value(),
            "witness must be K4");
  if (cp.witness) c.extra = "witness " + encode_graph6(*cp.witness);
}

void a5_pairs(CaseCtx& c) {
  c.inputs = "50 seeded pairs with equal stable invariants";
  c.expected = "equal injective cycle counts, lengths 3..7";
  auto rng = c.rng();
  std::vector<Graph> bases;
  for (const Graph& f : connected_graphs_upto(5)) {
    if (parallel_tree_depth(f).depth) continue;
    if (furer(f).g.n <= 24) bases.push_back(f);
  }
  c.require(!bases.empty(), "need at least one small gadget base");
  int gadget_pairs = 0;
  for (int i = 0; i < 50; ++i) {
    Graph g, h;
    if (i % 2 == 1 && !bases.empty()) {
      auto pr = furer_pair(bases[(i / 2) % bases.size()]);
      g = pr.first;
      h = pr.second;
      ++gadget_pairs;
    } else {
      g = random_connected(rng, 5 + (int)(rng() % 5), 0.3 + 0.3 * rnd01(rng));
      h = random_relabel(rng, g);
    }
    c.require(!compare_graphs(g, h, Algo::Spec, ITERS_STABLE).distinguished,
              "pair " + std::to_string(i) + ": stable invariants must agree");
    for (int m = 3; m <= 7; ++m)
      c.require(sub_brute(make_family("cycle", {m}), g) ==
                    sub_brute(make_family("cycle", {m}), h),
                "pair " + std::to_string(i) + ": C" + std::to_string(m) +
                    " subgraph counts differ");
  }
  c.extra = std::to_string(gadget_pairs) + " gadget pairs over " +
            std::to_string(bases.size()) + " bases, rest isomorphic";
}

// ---- A6 ------------------------------------------------------------------

void a6_cycles_depth2(CaseCtx& c) {
  c.inputs = "spasm members of C3..C7";
  c.expected = "every member is a parallel tree of depth <= 2";
  for (int m = 3; m <= 7; ++m) {
    SpasmBasis basis = spasm(make_family("cycle", {m}));
    for (const SpasmEntry& e : basis.entries) {
      PTreeResult r = parallel_tree_depth(e.quotient);
      c.require(r.depth.has_value() && *r.depth <= 2,
                "C" + std::to_string(m) + " member " + encode_graph6(e.quotient) +
                    " exceeds depth 2");
    }
  }
}

void a6_c6_depth1(CaseCtx& c) {
  c.inputs = "spasm members of C6";
  c.expected = "every member has depth <= 1";
  SpasmBasis basis = spasm(make_family("cycle", {6}));
  for (const SpasmEntry& e : basis.entries) {
    PTreeResult r = parallel_tree_depth(e.quotient);
    c.require(r.depth.has_value() && *r.depth <= 1,
              "member " + encode_graph6(e.quotient) + " exceeds depth 1");
  }
  c.extra = std::to_string(basis.entries.size()) + " members";
}

void a6_c7_depth2(CaseCtx& c) {
  c.inputs = "spasm members of C7";
  c.expected = "some member has depth exactly 2";
  SpasmBasis basis = spasm(make_family("cycle", {7}));
  bool found = false;
  std::string who;
  for (const SpasmEntry& e : basis.entries) {
    PTreeResult r = parallel_tree_depth(e.quotient);
    if (r.depth && *r.depth == 2 && !found) {
      found = true;
      who = encode_graph6(e.quotient);
    }
  }
  c.require(found, "no depth-2 member found");
  if (found) c.extra = "depth-2 member " + who;
}

// ---- A7 ------------------------------------------------------------------

void a7_iff(CaseCtx& c) {
  c.inputs = "100 seeded pairs, n <= 8, mixing isomorphic, random and cospectral";
  c.expected = "trace vectors agree iff edge counts and cycle hom counts agree";
  auto rng = c.rng();
  std::vector<std::pair<Graph, Graph>> cosp = cospectral_pairs_upto6();
  c.require(!cosp.empty(), "need cospectral pairs in the corpus");
  size_t ci = 0;
  int equal_trace_pairs = 0;
  for (int i = 0; i < 100; ++i) {
    Graph g, h;
    int kind = i % 4;
    if (kind == 0) {
      g = random_graph(rng, 4 + (int)(rng() % 5), 0.5);
      h = random_relabel(rng, g);
    } else if (kind == 3 && !cosp.empty()) {
      g = cosp[ci % cosp.size()].first;
      h = cosp[ci % cosp.size()].second;
      ++ci;
    } else {
      int n = 4 + (int)(rng() % 5);
      g = random_graph(rng, n, 0.5);
      h = random_graph(rng, n, 0.5);
    }
    int L = std::max(g.n, h.n);
    bool teq = trace_vector(g, L) == trace_vector(h, L);
    bool homeq = g.m() == h.m();
    for (int n = 3; n <= L && homeq; ++n)
      homeq = hom_brute(make_family("cycle", {n}), g) ==
              hom_brute(make_family("cycle", {n}), h);
    if (teq) ++equal_trace_pairs;
    c.require(teq == homeq, "pair " + std::to_string(i) + ": " + encode_graph6(g) +
                                " vs " + encode_graph6(h) + " violates the iff");
  }
  c.extra = std::to_string(equal_trace_pairs) + " pairs with equal traces";
}

void a7_cospectral_search(CaseCtx& c) {
  c.inputs = "exhaustive search over all graphs with <= 6 vertices";
  c.expected = "a cospectral pair with differing path-hom counts exists";
  Graph p3 = make_family("path", {3});
  for (const auto& [g, h] : cospectral_pairs_upto6()) {
    Int a = hom_brute(p3, g), b = hom_brute(p3, h);
    if (a != b) {
      c.require(true, "found");
      c.extra = encode_graph6(g) + " vs " + encode_graph6(h) + ": hom(P3) " +
                a.str() + " vs " + b.str();
      return;
    }
  }
  c.require(false, "no cospectral pair with differing hom(P3) found");
}

// ---- A8 ------------------------------------------------------------------

void a8_range(CaseCtx& c, int nlo, int nhi) {
  c.inputs = "all connected graphs, " + std::to_string(nlo) + " <= n <= " +
             std::to_string(nhi);
  c.expected = "game, skeleton depth and refinement verdicts form one triangle";
  int count = 0;
  for (const Graph& f : connected_graphs_upto(nhi)) {
    if (f.n < std::max(nlo, 2)) continue;
    ++count;
    GameOutcome game = solve_simplified_game(f, 16);
    PTreeResult pt = parallel_tree_depth(f);
    auto [g, h] = furer_pair(f);
    CompareVerdict cv = compare_graphs(g, h, Algo::Spec, ITERS_STABLE);
    const std::string tag = encode_graph6(f);
    c.require(game.spoiler_wins_in.has_value() == pt.depth.has_value(),
              tag + ": game and skeleton verdicts disagree");
    c.require(game.spoiler_wins_in.has_value() == cv.distinguished,
              tag + ": game and refinement verdicts disagree");
    if (game.spoiler_wins_in && pt.depth) {
      c.require(*pt.depth == *game.spoiler_wins_in + 1,
                tag + ": depth must equal wins_in + 1");
      c.require(cv.distinguished && cv.iteration == *game.spoiler_wins_in + 1,
                tag + ": first separating iteration must equal wins_in + 1");
    }
  }
  c.extra = std::to_string(count) + " base graphs";
}

// ---- A9 ------------------------------------------------------------------

void a9_tw2(CaseCtx& c) {
  c.inputs = "200 seeded (parallel tree <= 7v, host <= 8v) instances";
  c.expected = "junction DP equals brute-force hom counts";
  auto rng = c.rng();
  std::vector<Graph> pts = enumerate_parallel_trees(7, -1);
  for (int i = 0; i < 200; ++i) {
    const Graph& f = pts[rng() % pts.size()];
    Graph host = random_graph(rng, 4 + (int)(rng() % 5), 0.3 + 0.4 * rnd01(rng));
    PTreeResult r = parallel_tree_depth(f);
    c.require(r.skeleton.has_value(), "pattern must carry a skeleton");
    if (!r.skeleton) continue;
    TreeDecomposition td = decomposition_from_skeleton(f, *r.skeleton);
    c.require(hom_tw2(f, td, host) == hom_brute(f, host),
              "instance " + std::to_string(i) + ": counts differ on " +
                  encode_graph6(f));
  }
}

void a9_sub_via_hom(CaseCtx& c) {
  c.inputs = "200 seeded (pattern <= 6v, host <= 8v) instances";
  c.expected = "basis-expansion subgraph counts equal brute force";
  auto rng = c.rng();
  for (int i = 0; i < 200; ++i) {
    Graph f = random_connected(rng, 3 + (int)(rng() % 4), 0.4 + 0.3 * rnd01(rng));
    Graph host = random_graph(rng, 4 + (int)(rng() % 5), 0.3 + 0.4 * rnd01(rng));
    c.require(sub_via_hom(f, host) == sub_brute(f, host),
              "instance " + std::to_string(i) + ": counts differ on " +
                  encode_graph6(f));
  }
}

void a9_spasm_oracle(CaseCtx& c) {
  c.inputs = "all connected patterns <= 6 vertices";
  c.expected = "spasm equals the iterated-merge closure, coefficients nonzero";
  for (const Graph& f : connected_graphs_upto(6)) {
    SpasmBasis basis = spasm(f);
    std::vector<Graph> closure = merge_closure(f);
    const std::string tag = encode_graph6(f);
    c.require(basis.entries.size() == closure.size(),
              tag + ": member count differs from the closure oracle");
    for (const SpasmEntry& e : basis.entries) {
      bool found = false;
      for (const Graph& g : closure)
        if (g.n == e.quotient.n && g.m() == e.quotient.m() &&
            are_isomorphic(g, e.quotient)) {
          found = true;
          break;
        }
      c.require(found, tag + ": member " + encode_graph6(e.quotient) +
                           " missing from the closure");
      c.require(e.coefficient != 0, tag + ": zero coefficient on " +
                                        encode_graph6(e.quotient));
    }
  }
}

// ---- A10 -----------------------------------------------------------------

void a10_chain(CaseCtx& c) {
  c.inputs = "full pair catalog, stable verdicts";
  c.expected = "wl1 -> spec -> local2 -> fwl2 separation implications";
  for (const NamedPair& p : catalog_pairs(c.seed)) {
    bool w1 = dist_at(p, Algo::WL1, ITERS_STABLE);
    bool sp = dist_at(p, Algo::Spec, ITERS_STABLE);
    bool l2 = dist_at(p, Algo::Local2, ITERS_STABLE);
    bool f2 = dist_at(p, Algo::FWL2, ITERS_STABLE);
    c.require(!w1 || sp, p.name + ": wl1 separates but spec does not");
    c.require(!sp || l2, p.name + ": spec separates but local2 does not");
    c.require(!l2 || f2, p.name + ": local2 separates but fwl2 does not");
  }
  c.extra = std::to_string(catalog_pairs(c.seed).size()) + " pairs";
}

void a10_fwl2_witness(CaseCtx& c) {
  c.inputs = "kite-with-tail gadget pair (smallest series-parallel non-parallel-tree)";
  c.expected = "fwl2 separates, spectral refinement never does";
  for (const Graph& f : connected_graphs_upto(4))
    c.require(parallel_tree_depth(f).depth.has_value() || !treewidth_at_most_2(f),
              encode_graph6(f) + ": smaller series-parallel non-parallel-tree exists");
  Graph kite = kite_with_tail();
  c.require(treewidth_at_most_2(kite) && !parallel_tree_depth(kite).depth,
            "base must be series-parallel and not a parallel tree");
  auto [g, h] = furer_pair(kite);
  c.require(!compare_graphs(g, h, Algo::Spec, ITERS_STABLE).distinguished,
            "spectral refinement must never separate the pair");
  c.require(compare_graphs(g, h, Algo::FWL2, ITERS_STABLE).distinguished,
            "fwl2 must separate the pair");
}

void a10_spec_beyond_subgraph(CaseCtx& c) {
  c.inputs = "gadget pair over two hub-joined diamonds (depth-2 skeleton)";
  c.expected = "depth-2 refinement separates, node-marking refinement never does";
  Graph base = dumbbell();
  PTreeResult r = parallel_tree_depth(base);
  c.require(r.depth.has_value() && *r.depth == 2, "base must have skeleton depth 2");
  auto [g, h] = furer_pair(base);
  c.require(compare_graphs(g, h, Algo::Spec, 2).distinguished,
            "depth-2 refinement must separate the pair");
  c.require(!compare_graphs(g, h, Algo::Subgraph, ITERS_STABLE).distinguished,
            "node-marking refinement must not separate the pair");
}

void a10_subgraph_beyond_spec(CaseCtx& c) {
  c.inputs = "kite-with-tail gadget pair";
  c.expected = "node-marking refinement separates, depth-2 refinement does not";
  auto [g, h] = furer_pair(kite_with_tail());
  c.require(compare_graphs(g, h, Algo::Subgraph, ITERS_STABLE).distinguished,
            "node-marking refinement must separate the pair");
  c.require(!compare_graphs(g, h, Algo::Spec, 2).distinguished,
            "depth-2 refinement must not separate the pair");
  c.require(!compare_graphs(g, h, Algo::Spec, ITERS_STABLE).distinguished,
            "stable refinement must not separate the pair either");
}

// ---- A11 -----------------------------------------------------------------

void a11_k1(CaseCtx& c) {
  c.inputs = "full pair catalog, k = 1";
  c.expected = "encoding implication holds on every pair";
  for (const NamedPair& p : catalog_pairs(c.seed))
    c.require(sympower_encoding_check(p.g, p.h, 1).implication_holds,
              p.name + ": implication violated at k = 1");
}

void a11_k2(CaseCtx& c) {
  c.inputs = "catalog pairs with both sides <= 16 vertices, k = 2";
  c.expected = "encoding implication holds on every feasible pair";
  int feasible = 0;
  for (const NamedPair& p : catalog_pairs(c.seed)) {
    if (p.g.n > 16 || p.h.n > 16) continue;
    ++feasible;
    c.require(sympower_encoding_check(p.g, p.h, 2).implication_holds,
              p.name + ": implication violated at k = 2");
  }
  c.require(feasible > 0, "no feasible pairs at k = 2");
  c.extra = std::to_string(feasible) + " feasible pairs";
}

void a11_identity(CaseCtx& c) {
  c.inputs = "50 seeded graphs, n <= 14";
  c.expected = "first symmetric power equals the graph itself";
  auto rng = c.rng();
  for (int i = 0; i < 50; ++i) {
    Graph g = random_graph(rng, 2 + (int)(rng() % 13), 0.2 + 0.6 * rnd01(rng));
    SymmetricPower sp = symmetric_power(g, 1);
    c.require(sp.graph == g, "graph " + encode_graph6(g) +
                                 ": first power is not the identity");
  }
}

// ---- registry and runner ---------------------------------------------------

struct CaseDef {
  const char* id;
  const char* claim;
  std::function<void(CaseCtx&)> fn;
};

const std::vector<CaseDef>& registry() {
  static const std::vector<CaseDef> defs = {
      {"A1.walk-vs-float",
       "walk profiles and eigenprojection features induce the same refinement",
       a1_walk_vs_float},
      {"A2.k4", "equal depth-d invariants force equal parallel-tree hom counts",
       [](CaseCtx& c) { a2_pair(c, "clique4", make_family("clique", {4}), 3); }},
      {"A2.dp1", "equal depth-d invariants force equal parallel-tree hom counts",
       [](CaseCtx& c) { a2_pair(c, "doubled_path:1", make_family("doubled_path", {1}), 1); }},
      {"A2.dp2", "equal depth-d invariants force equal parallel-tree hom counts",
       [](CaseCtx& c) { a2_pair(c, "doubled_path:2", make_family("doubled_path", {2}), 2); }},
      {"A2.dp3", "equal depth-d invariants force equal parallel-tree hom counts",
       [](CaseCtx& c) { a2_pair(c, "doubled_path:3", make_family("doubled_path", {3}), 3); }},
      {"A3.upto4", "beyond parallel trees some hom count always escapes the invariant",
       [](CaseCtx& c) { a3_range(c, 1, 4); }},
      {"A3.n5", "beyond parallel trees some hom count always escapes the invariant",
       [](CaseCtx& c) { a3_range(c, 5, 5); }},
      {"A3.n6", "beyond parallel trees some hom count always escapes the invariant",
       [](CaseCtx& c) { a3_range(c, 6, 6); }},
      {"A4.k1", "iteration hierarchy: level k falls exactly at iteration k+1",
       [](CaseCtx& c) { a4_k(c, 1); }},
      {"A4.k2", "iteration hierarchy: level k falls exactly at iteration k+1",
       [](CaseCtx& c) { a4_k(c, 2); }},
      {"A4.k3", "iteration hierarchy: level k falls exactly at iteration k+1",
       [](CaseCtx& c) { a4_k(c, 3); }},
      {"A4.growth", "witness family grows linearly with the iteration level",
       a4_growth},
      {"A5.cycles", "cycle subgraph counts up to C7 are determined by the invariant",
       a5_cycles},
      {"A5.paths", "path subgraph counts up to 7 vertices are determined",
       a5_paths},
      {"A5.c8-witness", "C8 escapes: a spasm member is not a parallel tree",
       a5_c8_witness},
      {"A5.pairs", "equal stable invariants force equal short-cycle subgraph counts",
       a5_pairs},
      {"A6.cycles-depth2", "spasm members of C3..C7 all fit in depth 2",
       a6_cycles_depth2},
      {"A6.c6-depth1", "spasm members of C6 all fit in depth 1", a6_c6_depth1},
      {"A6.c7-depth2", "some spasm member of C7 needs depth 2", a6_c7_depth2},
      {"A7.iff", "equal spectra is equivalent to equal cycle hom counts",
       a7_iff},
      {"A7.cospectral-search",
       "cospectral graphs can disagree on path hom counts", a7_cospectral_search},
      {"A8.upto5", "game value, skeleton depth and separation iteration align",
       [](CaseCtx& c) { a8_range(c, 2, 5); }},
      {"A8.n6", "game value, skeleton depth and separation iteration align",
       [](CaseCtx& c) { a8_range(c, 6, 6); }},
      {"A8.n7", "game value, skeleton depth and separation iteration align",
       [](CaseCtx& c) { a8_range(c, 7, 7); }},
      {"A9.tw2", "oracle: junction DP vs brute-force hom counts", a9_tw2},
      {"A9.sub-via-hom", "oracle: basis expansion vs brute-force subgraph counts",
       a9_sub_via_hom},
      {"A9.spasm-oracle", "oracle: spasm vs iterated-merge closure",
       a9_spasm_oracle},
      {"A10.chain", "verdict containments wl1 -> spec -> local2 -> fwl2",
       a10_chain},
      {"A10.fwl2-witness", "fwl2 strictly exceeds spectral refinement",
       a10_fwl2_witness},
      {"A10.spec-beyond-subgraph",
       "depth-2 spectral refinement separates where node marking fails",
       a10_spec_beyond_subgraph},
      {"A10.subgraph-beyond-spec",
       "node marking separates where spectral refinement fails",
       a10_subgraph_beyond_spec},
      {"A11.k1", "agreeing local invariants transfer to symmetric powers, k = 1",
       a11_k1},
      {"A11.k2", "agreeing local invariants transfer to symmetric powers, k = 2",
       a11_k2},
      {"A11.identity", "first symmetric power is the identity construction",
       a11_identity},
  };
  return defs;
}

bool glob_match(const char* p, const char* s) {
  const char* star = nullptr;
  const char* ss = nullptr;
  while (*s) {
    if (*p == '?' || *p == *s) {
      ++p;
      ++s;
    } else if (*p == '*') {
      star = p++;
      ss = s;
    } else if (star) {
      p = star + 1;
      s = ++ss;
    } else {
      return false;
    }
  }
  while (*p == '*') ++p;
  return *p == '\0';
}

}  // namespace

bool suite_filter_match(const std::string& pattern, const std::string& id) {
  if (pattern.empty()) return true;
  if (glob_match(pattern.c_str(), id.c_str())) return true;
  std::string family = id.substr(0, id.find('.'));
  return glob_match(pattern.c_str(), family.c_str());
}

std::vector<std::string> suite_case_ids() {
  std::vector<std::string> out;
  for (const CaseDef& d : registry()) out.push_back(d.id);
  return out;
}

SuiteReport run_suite(const std::string& filter, int jobs, uint64_t seed) {
  const auto& defs = registry();
  std::vector<size_t> picked;
  for (size_t i = 0; i < defs.size(); ++i)
    if (suite_filter_match(filter, defs[i].id)) picked.push_back(i);

  SuiteReport report;
  report.cases.resize(picked.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t j; (j = next.fetch_add(1)) < picked.size();) {
      const CaseDef& def = defs[picked[j]];
      CaseCtx ctx;
      ctx.seed = seed;
      ctx.id = def.id;
      auto t0 = std::chrono::steady_clock::now();
      try {
        def.fn(ctx);
      } catch (const std::exception& e) {
        ctx.require(false, std::string("exception: ") + e.what());
      }
      auto t1 = std::chrono::steady_clock::now();
      SuiteCase& sc = report.cases[j];
      sc.id = def.id;
      sc.claim = def.claim;
      sc.inputs = ctx.inputs;
      sc.expected = ctx.expected;
      sc.observed = ctx.observed();
      sc.pass = ctx.failures == 0 && ctx.checks > 0;
      sc.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
  };

  int nthreads = std::max(1, std::min<int>(jobs, (int)picked.size()));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  for (const SuiteCase& sc : report.cases) (sc.pass ? report.passed : report.failed)++;
  return report;
}

}  // namespace specwl
