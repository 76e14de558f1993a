#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "egcert/check.hpp"
#include "egcert/connectivity.hpp"
#include "egcert/enumerate.hpp"
#include "egcert/errors.hpp"
#include "egcert/families.hpp"
#include "egcert/graph_io.hpp"
#include "egcert/json.hpp"
#include "egcert/oracle.hpp"
#include "egcert/sweep.hpp"

namespace py = pybind11;
using namespace egcert;

namespace {

std::optional<std::vector<int>> cycle_vertices(const std::optional<VertexCycle>& c) {
  if (!c) return std::nullopt;
  return c->vertices;
}

WitnessKind kind_from(const std::string& name) {
  const auto kind = parse_witness_kind(name);
  if (!kind) throw py::value_error("unknown witness kind: " + name);
  return *kind;
}

std::string sweep_json(int n_min, int n_max, int min_degree, const std::vector<std::string>& checks, int jobs) {
  SweepConfig cfg;
  cfg.n_min = n_min;
  cfg.n_max = n_max;
  cfg.min_degree = min_degree;
  cfg.jobs = jobs;
  if (!checks.empty()) {
    cfg.checks.clear();
    for (const std::string& name : checks) {
      const auto c = parse_sweep_check(name);
      if (!c) throw py::value_error("unknown check: " + name);
      cfg.checks.insert(*c);
    }
  }
  py::gil_scoped_release release;
  return to_json(sweep(cfg)).dump();
}

}  // namespace

PYBIND11_MODULE(_egcert, m) {
  m.doc() = "Certificates for 4-cycles, 8-cycles and induced paths in graphs of minimum degree >= 3";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  auto precondition = py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<MinDegreeError>(m, "MinDegreeError", precondition.ptr());
  py::register_exception<InternalInvariantError>(m, "InternalInvariantError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static(
          "from_edges",
          [](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); },
          py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("add_edge", &Graph::add_edge)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).members(); })
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<egcert.Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("write_graph6", &write_graph6);
  m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); });
  m.def("write_edge_list", &write_edge_list);

  py::module_ fam = m.def_submodule("families", "Named graphs");
  fam.def("complete", &families::complete);
  fam.def("cycle", &families::cycle);
  fam.def("path", &families::path);
  fam.def("complete_bipartite", &families::complete_bipartite);
  fam.def("petersen", &families::petersen);
  fam.def("heawood", &families::heawood);
  fam.def("two_k4_sharing_vertex", &families::two_k4_sharing_vertex);

  m.def("is_connected", &is_connected);
  m.def("vertex_connectivity", [](const Graph& g) { return vertex_connectivity(g); });
  m.def("min_vertex_cut", [](const Graph& g) { return min_vertex_cut(g).cut_vertices; });

  m.def("find_c4", [](const Graph& g) { return cycle_vertices(find_c4(g)); });
  m.def("find_cycle_of_length", [](const Graph& g, int len) { return cycle_vertices(find_cycle_of_length(g, len)); });
  m.def("shortest_induced_cycle_at_least",
        [](const Graph& g, int lo) { return cycle_vertices(shortest_induced_cycle_at_least(g, lo)); });
  m.def("longest_induced_path", [](const Graph& g, int stop_at) { return longest_induced_path(g, stop_at).path.vertices; },
        py::arg("g"), py::arg("stop_at") = 1 << 30);
  m.def("is_pk_free", &is_pk_free);
  m.def("cycle_spectrum", &cycle_spectrum);
  m.def("power_of_two_cycle", [](const Graph& g) -> std::optional<std::vector<int>> {
    auto c = power_of_two_cycle(g);
    if (!c) return std::nullopt;
    return c->cycle.vertices;
  });

  m.def("verify_witness", [](const Graph& g, const std::string& kind, const std::vector<int>& vertices) {
    return verify_witness(g, Witness{kind_from(kind), vertices});
  });
  m.def("check_witness", [](const Graph& g, const std::string& kind, const std::vector<int>& vertices) {
    return std::string(to_string(check_witness(g, Witness{kind_from(kind), vertices})));
  });
  // Certificates cross the boundary as JSON text; the package decodes them.
  m.def("p5_witness_json", [](const Graph& g) { return to_json(p5_witness(g), true).dump(); });
  m.def("eg_witness_json", [](const Graph& g) { return to_json(eg_witness(g), true).dump(); });
  m.def("replay_trace_json", [](const Graph& g, const std::string& trace) {
    return replay_trace(g, trace_from_json(Json::parse(trace)));
  });
  m.def("check_json", [](const Graph& g, bool witnesses, int max_cycle) {
    CheckOptions options;
    options.witnesses = witnesses;
    options.max_cycle = max_cycle;
    return to_json(run_check(g, options), false).dump();
  });

  m.def("canonical_form", &canonical_form);
  m.def("generate_nonisomorphic", &generate_nonisomorphic, py::arg("n"), py::arg("min_degree") = 3);
  m.def("brute_force_witness_exists",
        [](const Graph& g, const std::string& kind) { return brute_force_witness_exists(g, kind_from(kind)); });
  m.def("sweep_json", &sweep_json, py::arg("n_min"), py::arg("n_max"), py::arg("min_degree") = 3,
        py::arg("checks") = std::vector<std::string>{}, py::arg("jobs") = 1);
}
