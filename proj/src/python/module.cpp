#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ccmpc/algorithms.hpp"
#include "ccmpc/bench.hpp"
#include "ccmpc/edge_list_io.hpp"
#include "ccmpc/generators.hpp"
#include "ccmpc/union_find.hpp"

namespace py = pybind11;
using namespace ccmpc;

namespace {

const char* KindName(PhaseKind k) {
  switch (k) {
    case PhaseKind::kContraction: return "contraction";
    case PhaseKind::kFinalize: return "finalize";
    case PhaseKind::kPropagation: return "propagation";
  }
  return "?";
}

py::dict PhaseDict(const PhaseLedgerEntry& e) {
  py::dict d;
  d["phase"] = e.phase_index;
  d["kind"] = KindName(e.kind);
  d["nodes_in"] = e.nodes_in;
  d["edges_in"] = e.edges_in;
  d["nodes_out"] = e.nodes_out;
  d["edges_out"] = e.edges_out;
  d["rounds"] = e.rounds_used;
  d["messages"] = e.messages_sent;
  d["dht_puts"] = e.dht_puts;
  d["dht_gets"] = e.dht_gets;
  return d;
}

py::dict TotalsDict(const LedgerTotals& t) {
  py::dict d;
  d["rounds"] = t.rounds;
  d["messages"] = t.records_sent;
  d["dht_puts"] = t.dht_puts;
  d["dht_gets"] = t.dht_gets;
  return d;
}

std::vector<std::pair<VertexId, VertexId>> EdgeList(const Graph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(g.num_edges());
  for (const EdgeRecord& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Connected components under a simulated MPC cost model.";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", error.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", error.ptr());
  py::register_exception<SpaceViolation>(m, "SpaceViolation", error.ptr());
  py::register_exception<AbortError>(m, "AbortError", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n,
                       const std::vector<std::pair<VertexId, VertexId>>& edges) {
             return Graph::FromEdges(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, VertexId v) {
        auto s = g.neighbors(v);
        return std::vector<VertexId>(s.begin(), s.end());
      })
      .def("edges", &EdgeList, "Canonical edges (u < v), sorted.")
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) +
               " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("gnp", &gnp, py::arg("n"), py::arg("p"), py::arg("seed") = 0);
  m.def(
      "generate",
      [](const std::string& family, std::size_t n, double p, std::uint64_t seed,
         std::uint32_t legs, bool permute) {
        GenSpec s;
        s.family = parse_family(family);
        s.n = n;
        s.p = p;
        s.seed = seed;
        s.legs = legs;
        s.permute = permute;
        return generate(s);
      },
      py::arg("family"), py::arg("n"), py::arg("p") = 0.0, py::arg("seed") = 0,
      py::arg("legs") = 1, py::arg("permute") = false);
  m.def("diameter", &diameter);

  m.def(
      "load_edge_list",
      [](const std::string& path) {
        LoadedGraph lg = load_edge_list_file(path);
        return py::make_tuple(std::move(lg.graph), lg.ids.external);
      },
      py::arg("path"), "Returns (graph, external ids indexed by dense id).");

  m.def("algorithms", [] {
    std::vector<std::string> names;
    for (Algorithm a : kAllAlgorithms) names.emplace_back(algorithm_name(a));
    return names;
  });

  m.def("union_find", [](const Graph& g) { return union_find_components(g).rep; });

  m.def(
      "run",
      [](const Graph& g, const std::string& algorithm, std::uint64_t seed,
         std::uint64_t finalize_threshold, std::optional<std::uint32_t> max_phases,
         bool strict_space, std::uint32_t machines) {
        AlgoConfig cfg;
        cfg.global_seed = seed;
        cfg.finalize_threshold = finalize_threshold;
        cfg.max_phases = max_phases;
        cfg.cost.strict = strict_space;
        cfg.cost.machines = machines;
        RunResult r;
        {
          py::gil_scoped_release release;
          r = run_algorithm(parse_algorithm(algorithm), g, cfg);
        }
        py::dict out;
        out["assignment"] = r.assignment.rep;
        py::list phases;
        for (const auto& e : r.phases) phases.append(PhaseDict(e));
        out["phases"] = phases;
        out["totals"] = TotalsDict(r.ledger.totals());
        out["converged"] = r.converged;
        return out;
      },
      py::arg("graph"), py::arg("algorithm"), py::arg("seed") = 0,
      py::arg("finalize_threshold") = 1'000'000, py::arg("max_phases") = py::none(),
      py::arg("strict_space") = false, py::arg("machines") = 1);

  m.def(
      "verify",
      [](const std::vector<VertexId>& rep, const Graph& g) {
        VerifyReport v = verify(ComponentAssignment{rep}, g);
        return py::make_tuple(v.ok, v.message);
      },
      py::arg("assignment"), py::arg("graph"));
}
