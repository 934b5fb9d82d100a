#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "specwl/furer.hpp"
#include "specwl/graph.hpp"
#include "specwl/homcount.hpp"
#include "specwl/pebble.hpp"
#include "specwl/ptree.hpp"
#include "specwl/refine.hpp"
#include "specwl/suite.hpp"
#include "specwl/sympower.hpp"
#include "specwl/wlzoo.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace specwl;

// Families, files, and "-" (stdin) are accepted wherever a graph goes.
Graph load_graph(const std::string& arg, bool& stdin_used) {
  if (looks_like_family_spec(arg)) return parse_family_spec(arg);
  if (arg == "-") {
    if (stdin_used) throw InputError("only one input may come from stdin");
    stdin_used = true;
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_graph_text(buf.str());
  }
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw InputError("cannot read input: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

int parse_iters(const std::string& s, const char* flag) {
  if (s == "stable") return ITERS_STABLE;
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string(flag) + " must be a non-negative integer or 'stable'");
  }
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json graph_json(const Graph& g) {
  json j;
  j["n"] = g.n;
  j["g6"] = g.n <= 62 ? json(encode_graph6(g)) : json(nullptr);
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

json trace_json(const RefinementTrace& tr) {
  json j;
  j["algo"] = tr.algo;
  json its = json::array();
  for (const auto& it : tr.iterations) {
    json o;
    o["colors"] = it.colors;
    o["invariant_hash"] = it.invariant_hash;
    its.push_back(std::move(o));
  }
  j["iterations"] = std::move(its);
  j["stable"] = tr.stable;
  return j;
}

int color_classes(const std::vector<int>& colors) {
  std::vector<int> c(colors);
  std::sort(c.begin(), c.end());
  return (int)(std::unique(c.begin(), c.end()) - c.begin());
}

struct Ctx {
  bool table = false;
  bool stdin_used = false;
};

int cmd_refine(Ctx& ctx, const std::string& algo, const std::string& iters, int k,
               const std::string& input) {
  Graph g = load_graph(input, ctx.stdin_used);
  int d = parse_iters(iters, "--iters");
  Algo a = algo_from_string(algo);
  RefinementTrace tr;
  switch (a) {
    case Algo::Spec: tr = spectral_refine(g, d); break;
    case Algo::SpecFloat: tr = spectral_refine_float(g, d); break;
    case Algo::WL1: tr = wl1(g, d); break;
    case Algo::FWL2: tr = fwl2(g, d); break;
    case Algo::Local2: tr = local_k(g, 2, d); break;
    case Algo::Local4: tr = local_k(g, 4, d); break;
    case Algo::Subgraph: tr = subgraph_gnn(g, d); break;
    case Algo::KSpec: tr = korder_refine(g, k, d); break;
  }
  emit(trace_json(tr));
  if (ctx.table) {
    for (size_t i = 0; i < tr.iterations.size(); i++)
      std::cerr << "iteration " << i << ": " << color_classes(tr.iterations[i].colors)
                << " classes  hash " << tr.iterations[i].invariant_hash << "\n";
    std::cerr << (tr.stable ? "stable" : "not stable") << "\n";
  }
  return 0;
}

int cmd_distinguish(Ctx& ctx, const std::string& algo, const std::string& max_iters,
                    int k, const std::string& ga, const std::string& gb) {
  Graph g = load_graph(ga, ctx.stdin_used);
  Graph h = load_graph(gb, ctx.stdin_used);
  int d = parse_iters(max_iters, "--max-iters");
  CompareVerdict v = compare_graphs(g, h, algo_from_string(algo), d, k);
  json j;
  if (v.distinguished)
    j["distinguished_at"] = v.iteration;
  else
    j["indistinguishable"] = true;
  j["iters_run"] = v.iters_run;
  emit(j);
  if (ctx.table) {
    if (v.distinguished)
      std::cerr << "distinguished at iteration " << v.iteration << "\n";
    else
      std::cerr << "indistinguishable after " << v.iters_run << " iterations\n";
  }
  return 0;
}

Int hom_dispatch(const Graph& pattern, const Graph& host) {
  auto pt = parallel_tree_depth(pattern);
  if (pt.skeleton) {
    HostPowers hp(host);
    return hom_parallel_tree(*pt.skeleton, hp);
  }
  return hom_brute(pattern, host);
}

int cmd_count(Ctx& ctx, bool subgraphs, const std::string& pat, const std::string& hostp) {
  Graph pattern = load_graph(pat, ctx.stdin_used);
  Graph host = load_graph(hostp, ctx.stdin_used);
  Int c = subgraphs ? sub_via_hom(pattern, host) : hom_dispatch(pattern, host);
  json j;
  j["count"] = c.str();
  emit(j);
  if (ctx.table)
    std::cerr << (subgraphs ? "sub" : "hom") << " count: " << c.str() << "\n";
  return 0;
}

int cmd_spasm(Ctx& ctx, const std::string& pat) {
  Graph pattern = load_graph(pat, ctx.stdin_used);
  SpasmBasis b = spasm(pattern);
  json j;
  j["pattern"] = graph_json(b.pattern);
  j["aut_count"] = b.aut_count.str();
  json entries = json::array();
  for (const auto& e : b.entries) {
    json o;
    o["quotient"] = graph_json(e.quotient);
    o["coefficient"] = e.coefficient.str();
    entries.push_back(std::move(o));
  }
  j["entries"] = std::move(entries);
  emit(j);
  if (ctx.table) {
    std::cerr << b.entries.size() << " spasm entries, |Aut| = " << b.aut_count.str() << "\n";
    for (const auto& e : b.entries)
      std::cerr << "  " << (e.quotient.n <= 62 ? encode_graph6(e.quotient) : "(large)")
                << "  coeff " << e.coefficient.str() << "\n";
  }
  return 0;
}

int cmd_furer(Ctx& ctx, const std::string& basep) {
  Graph base = load_graph(basep, ctx.stdin_used);
  if (base.m() == 0) throw InputError("furer: base must have at least one edge");
  FurerGraph fg = furer(base);
  auto first = *std::min_element(base.edges.begin(), base.edges.end());
  FurerGraph th = twist(fg, {first});
  json j;
  j["base"] = graph_json(base);
  j["g"] = graph_json(fg.g);
  j["h"] = graph_json(th.g);
  j["twist"] = json::array({json::array({first.first, first.second})});
  json verts = json::array();
  for (int i = 0; i < (int)fg.verts.size(); i++) {
    auto [x, mask] = fg.verts[i];
    const auto& nbrs = base.adj[x];
    json subset = json::array();
    for (int b = 0; b < (int)nbrs.size(); b++)
      if (mask >> b & 1) subset.push_back(nbrs[b]);
    json o;
    o["vertex"] = i;
    o["base_vertex"] = x;
    o["subset"] = std::move(subset);
    verts.push_back(std::move(o));
  }
  j["vertices"] = std::move(verts);
  emit(j);
  if (ctx.table)
    std::cerr << "base n=" << base.n << " -> sides n=" << fg.g.n << ", twist edge ("
              << first.first << "," << first.second << ")\n";
  return 0;
}

int cmd_ptree(Ctx& ctx, bool depth_only, const std::string& input) {
  Graph g = load_graph(input, ctx.stdin_used);
  PTreeResult r = parallel_tree_depth(g);
  json j;
  if (depth_only) {
    j["depth"] = r.depth ? json(*r.depth) : json(nullptr);
  } else {
    j["parallel_tree"] = r.depth.has_value();
    j["depth"] = r.depth ? json(*r.depth) : json(nullptr);
    if (r.skeleton) {
      const Skeleton& sk = *r.skeleton;
      json s;
      s["root"] = sk.root;
      s["beta"] = sk.beta;
      json tedges = json::array();
      for (auto [a, b] : sk.tree.edges) tedges.push_back(json::array({a, b}));
      s["tree_edges"] = std::move(tedges);
      json paths = json::array();
      for (const auto& [e, routes] : sk.gamma) {
        json o;
        o["edge"] = json::array({e.first, e.second});
        o["routes"] = routes;
        paths.push_back(std::move(o));
      }
      s["paths"] = std::move(paths);
      j["skeleton"] = std::move(s);
    }
  }
  emit(j);
  if (ctx.table) {
    if (r.depth)
      std::cerr << "parallel tree of depth " << *r.depth << "\n";
    else
      std::cerr << "not a parallel tree\n";
  }
  return 0;
}

int cmd_pebble(Ctx& ctx, int max_steps, const std::string& basep) {
  Graph base = load_graph(basep, ctx.stdin_used);
  GameOutcome out = solve_simplified_game(base, max_steps);
  json j;
  if (out.spoiler_wins_in)
    j["spoiler_wins_in"] = *out.spoiler_wins_in;
  else
    j["duplicator_survives"] = true;
  emit(j);
  if (ctx.table) {
    if (out.spoiler_wins_in)
      std::cerr << "spoiler wins in " << *out.spoiler_wins_in << " steps\n";
    else
      std::cerr << "duplicator survives " << max_steps << " steps\n";
  }
  return 0;
}

int cmd_sympower(Ctx& ctx, int k, const std::string& input) {
  Graph g = load_graph(input, ctx.stdin_used);
  SymmetricPower p = symmetric_power(g, k);
  json j;
  j["k"] = p.k;
  j["source"] = graph_json(p.source);
  j["graph"] = graph_json(p.graph);
  j["vertex_index"] = p.vertex_index;
  emit(j);
  if (ctx.table)
    std::cerr << "symmetric power k=" << k << ": " << p.graph.n << " vertices, "
              << p.graph.m() << " edges\n";
  return 0;
}

int cmd_suite(const std::string& filter, int jobs, uint64_t seed) {
  SuiteReport rep = run_suite(filter, jobs, seed);
  json j;
  json cases = json::array();
  for (const auto& c : rep.cases) {
    json o;
    o["id"] = c.id;
    o["claim"] = c.claim;
    o["inputs"] = c.inputs;
    o["expected"] = c.expected;
    o["observed"] = c.observed;
    o["pass"] = c.pass;
    cases.push_back(std::move(o));
  }
  j["cases"] = std::move(cases);
  json summary;
  summary["total"] = rep.passed + rep.failed;
  summary["passed"] = rep.passed;
  summary["failed"] = rep.failed;
  j["summary"] = std::move(summary);
  emit(j);
  for (const auto& c : rep.cases) {
    std::string obs = c.observed;
    if (obs.size() > 100) obs = obs.substr(0, 97) + "...";
    std::fprintf(stderr, "%-28s %-4s %8.1fms  %s\n", c.id.c_str(),
                 c.pass ? "ok" : "FAIL", c.runtime_ms, obs.c_str());
  }
  std::fprintf(stderr, "passed %d, failed %d\n", rep.passed, rep.failed);
  return rep.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral-invariant graph refinement toolkit"};
  app.require_subcommand(1);
  Ctx ctx;
  std::string format = "json";
  app.add_option("--format", format, "json (default) or table (adds stderr rendering)")
      ->check(CLI::IsMember({"json", "table"}));

  std::string algo = "spec", iters = "stable", max_iters = "stable";
  int k = 1, max_steps = 32, jobs = 1, sym_k = 1;
  uint64_t seed = 0x5eedULL;
  std::string in1, in2, filter;
  bool depth_only = false;

  auto* refine = app.add_subcommand("refine", "run one refinement algorithm, emit the trace")->fallthrough();
  refine->add_option("--algo", algo, "spec|spec-float|wl1|fwl2|local2|local4|subgraph|kspec");
  refine->add_option("--iters", iters, "iteration count or 'stable'");
  refine->add_option("--k", k, "order for kspec");
  refine->add_option("input", in1, "graph file, family spec, or -")->required();

  auto* dist = app.add_subcommand("distinguish", "compare two graphs under one algorithm")->fallthrough();
  dist->add_option("--algo", algo, "algorithm name");
  dist->add_option("--max-iters", max_iters, "iteration bound or 'stable'");
  dist->add_option("--k", k, "order for kspec");
  dist->add_option("first", in1, "first graph")->required();
  dist->add_option("second", in2, "second graph")->required();

  auto* hom = app.add_subcommand("hom", "homomorphism count pattern -> host")->fallthrough();
  hom->add_option("pattern", in1)->required();
  hom->add_option("host", in2)->required();

  auto* sub = app.add_subcommand("sub", "subgraph count of pattern in host")->fallthrough();
  sub->add_option("pattern", in1)->required();
  sub->add_option("host", in2)->required();

  auto* spasm_cmd = app.add_subcommand("spasm", "quotient basis of a pattern")->fallthrough();
  spasm_cmd->add_option("pattern", in1)->required();

  auto* furer_cmd = app.add_subcommand("furer", "gadget pair over a base graph")->fallthrough();
  furer_cmd->add_option("base", in1)->required();

  auto* ptree = app.add_subcommand("ptree", "parallel tree recognition")->fallthrough();
  ptree->add_flag("--depth", depth_only, "emit only the depth");
  ptree->add_option("input", in1)->required();

  auto* pebble = app.add_subcommand("pebble", "simplified pebble game on a base graph")->fallthrough();
  pebble->add_option("--max-steps", max_steps, "report cap on the win value");
  pebble->add_option("base", in1)->required();

  auto* sym = app.add_subcommand("sympower", "k-th symmetric power")->fallthrough();
  sym->add_option("--k", sym_k, "subset size");
  sym->add_option("input", in1)->required();

  auto* suite = app.add_subcommand("suite", "run the acceptance catalog")->fallthrough();
  suite->add_option("filter", filter, "case id glob or family prefix");
  suite->add_option("--jobs", jobs, "concurrent cases");
  suite->add_option("--seed", seed, "seed for randomized corpora");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  ctx.table = format == "table";
  try {
    if (*refine) return cmd_refine(ctx, algo, iters, k, in1);
    if (*dist) return cmd_distinguish(ctx, algo, max_iters, k, in1, in2);
    if (*hom) return cmd_count(ctx, false, in1, in2);
    if (*sub) return cmd_count(ctx, true, in1, in2);
    if (*spasm_cmd) return cmd_spasm(ctx, in1);
    if (*furer_cmd) return cmd_furer(ctx, in1);
    if (*ptree) return cmd_ptree(ctx, depth_only, in1);
    if (*pebble) return cmd_pebble(ctx, max_steps, in1);
    if (*sym) return cmd_sympower(ctx, sym_k, in1);
    if (*suite) return cmd_suite(filter, jobs, seed);
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const EigenError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
