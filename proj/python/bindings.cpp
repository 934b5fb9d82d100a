#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specwl/furer.hpp"
#include "specwl/graph.hpp"
#include "specwl/homcount.hpp"
#include "specwl/pebble.hpp"
#include "specwl/ptree.hpp"
#include "specwl/refine.hpp"
#include "specwl/suite.hpp"
#include "specwl/sympower.hpp"
#include "specwl/wlzoo.hpp"

namespace py = pybind11;
using namespace specwl;

namespace {

RefinementTrace run_refine(const Graph& g, const std::string& algo, int iters, int k) {
  switch (algo_from_string(algo)) {
    case Algo::Spec: return spectral_refine(g, iters);
    case Algo::SpecFloat: return spectral_refine_float(g, iters);
    case Algo::WL1: return wl1(g, iters);
    case Algo::FWL2: return fwl2(g, iters);
    case Algo::Local2: return local_k(g, 2, iters);
    case Algo::Local4: return local_k(g, 4, iters);
    case Algo::Subgraph: return subgraph_gnn(g, iters);
    case Algo::KSpec: return korder_refine(g, k, iters);
  }
  throw InputError("unknown algorithm");
}

std::string hom_str(const Graph& pattern, const Graph& host) {
  auto pt = parallel_tree_depth(pattern);
  if (pt.skeleton) {
    HostPowers hp(host);
    return hom_parallel_tree(*pt.skeleton, hp).str();
  }
  return hom_brute(pattern, host).str();
}

}  // namespace

PYBIND11_MODULE(_specwl, m) {
  m.doc() = "spectral-invariant graph refinement toolkit";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapError>(m, "CapError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def_static(
          "make",
          [](int n, std::vector<std::pair<int, int>> edges) {
            return Graph::make(n, std::move(edges));
          },
          py::arg("n"), py::arg("edges"))
      .def_readonly("n", &Graph::n)
      .def_readonly("edges", &Graph::edges)
      .def("m", &Graph::m)
      .def("connected", &Graph::connected)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return g.n <= 62 ? "Graph(g6=" + encode_graph6(g) + ")"
                         : "Graph(n=" + std::to_string(g.n) + ")";
      });

  m.def("parse_graph6", &parse_graph6, py::arg("text"));
  m.def("encode_graph6", &encode_graph6, py::arg("g"));
  m.def("parse_graph", &parse_graph_text, py::arg("text"));
  m.def("family", &parse_family_spec, py::arg("spec"));
  m.def("are_isomorphic",
        [](const Graph& g, const Graph& h) { return are_isomorphic(g, h).has_value(); },
        py::arg("g"), py::arg("h"));

  py::class_<TraceIteration>(m, "TraceIteration")
      .def_readonly("colors", &TraceIteration::colors)
      .def_readonly("invariant_hash", &TraceIteration::invariant_hash);
  py::class_<RefinementTrace>(m, "RefinementTrace")
      .def_readonly("algo", &RefinementTrace::algo)
      .def_readonly("iterations", &RefinementTrace::iterations)
      .def_readonly("stable", &RefinementTrace::stable);

  m.def("refine", &run_refine, py::arg("g"), py::arg("algo") = "spec",
        py::arg("iters") = ITERS_STABLE, py::arg("k") = 1);

  m.def(
      "distinguish",
      [](const Graph& g, const Graph& h, const std::string& algo, int max_iters, int k) {
        CompareVerdict v = compare_graphs(g, h, algo_from_string(algo), max_iters, k);
        py::dict d;
        d["distinguished_at"] = v.distinguished ? py::cast(v.iteration) : py::none();
        d["iters_run"] = v.iters_run;
        return d;
      },
      py::arg("g"), py::arg("h"), py::arg("algo") = "spec",
      py::arg("max_iters") = ITERS_STABLE, py::arg("k") = 1);

  m.def("furer_pair", &furer_pair, py::arg("base"));

  m.def(
      "parallel_tree_depth",
      [](const Graph& g) -> py::object {
        auto r = parallel_tree_depth(g);
        return r.depth ? py::cast(*r.depth) : py::none();
      },
      py::arg("g"));

  m.def(
      "pebble",
      [](const Graph& base, int max_steps) -> py::object {
        auto out = solve_simplified_game(base, max_steps);
        return out.spoiler_wins_in ? py::cast(*out.spoiler_wins_in) : py::none();
      },
      py::arg("base"), py::arg("max_steps") = 32);

  m.def("hom", &hom_str, py::arg("pattern"), py::arg("host"));
  m.def(
      "sub",
      [](const Graph& pattern, const Graph& host) {
        return sub_via_hom(pattern, host).str();
      },
      py::arg("pattern"), py::arg("host"));

  m.def(
      "spasm",
      [](const Graph& pattern) {
        SpasmBasis b = spasm(pattern);
        py::list entries;
        for (const auto& e : b.entries)
          entries.append(py::make_tuple(e.quotient, e.coefficient.str()));
        py::dict d;
        d["pattern"] = b.pattern;
        d["aut_count"] = b.aut_count.str();
        d["entries"] = entries;
        return d;
      },
      py::arg("pattern"));

  py::class_<SymmetricPower>(m, "SymmetricPower")
      .def_readonly("source", &SymmetricPower::source)
      .def_readonly("k", &SymmetricPower::k)
      .def_readonly("graph", &SymmetricPower::graph)
      .def_readonly("vertex_index", &SymmetricPower::vertex_index);
  m.def("symmetric_power", &symmetric_power, py::arg("g"), py::arg("k"));

  m.def(
      "run_suite",
      [](const std::string& filter, int jobs, uint64_t seed) {
        SuiteReport rep = run_suite(filter, jobs, seed);
        py::list cases;
        for (const auto& c : rep.cases) {
          py::dict d;
          d["id"] = c.id;
          d["claim"] = c.claim;
          d["inputs"] = c.inputs;
          d["expected"] = c.expected;
          d["observed"] = c.observed;
          d["pass"] = c.pass;
          d["runtime_ms"] = c.runtime_ms;
          cases.append(d);
        }
        py::dict d;
        d["cases"] = cases;
        d["passed"] = rep.passed;
        d["failed"] = rep.failed;
        return d;
      },
      py::arg("filter") = "", py::arg("jobs") = 1, py::arg("seed") = 0x5eedULL);
}
