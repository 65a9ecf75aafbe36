#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pathsat/certificates.hpp"
#include "pathsat/claims.hpp"
#include "pathsat/constructions.hpp"
#include "pathsat/formats.hpp"
#include "pathsat/path_search.hpp"
#include "pathsat/report.hpp"
#include "pathsat/saturation.hpp"

namespace py = pybind11;
using namespace pathsat;

namespace {

SearchBudget make_budget(uint64_t nodes, double seconds) { return SearchBudget{nodes, seconds}; }

// Generators come from the reference when symmetry is requested; other
// graphs are searched unreduced.
struct Resolved {
  GraphRef ref;
  const GeneratorSet* gens(bool symmetry) const {
    return symmetry && ref.generators ? &*ref.generators : nullptr;
  }
};

}  // namespace

PYBIND11_MODULE(_pathsat, m) {
  m.doc() = "Induced-path search and induced-saturation verification";
  m.attr("__version__") = std::string(tool_version());

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<SymmetryError>(m, "SymmetryError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("order", &Graph::order)
      .def("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, Vertex v) { return g.neighbors(v).to_vector(); })
      .def("degree", &Graph::degree)
      .def("label", &Graph::label)
      .def("toggle_edge", [](const Graph& g, Vertex u, Vertex v, bool present) { return toggle_edge(g, u, v, present); })
      .def("graph6", [](const Graph& g) { return encode_graph6(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("graph", [](const std::string& ref) { return resolve_graph(ref).graph; }, py::arg("ref"),
        "Build a graph from a reference such as 'gn:3', 'kneser:5' or 'gn:2*2'.");
  m.def("from_graph6", [](const std::string& s) { return decode_graph6(s); });
  m.def("from_edges", [](int order, const std::vector<VertexPair>& edges) {
    GraphBuilder b(order);
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    return b.build();
  });

  m.def("is_induced_path", [](const Graph& g, const std::vector<Vertex>& p) { return is_induced_path(g, p); });
  m.def("brute_force_longest", &brute_force_longest);

  m.def(
      "longest_induced_path_json",
      [](const std::string& ref, bool symmetry, uint64_t nodes, double seconds, int jobs) {
        py::gil_scoped_release release;
        Resolved r{resolve_graph(ref)};
        SearchOptions opt{make_budget(nodes, seconds), r.gens(symmetry), jobs, false};
        return to_json(r.ref.graph, longest_induced_path(r.ref.graph, opt)).dump();
      },
      py::arg("ref"), py::arg("symmetry") = true, py::arg("budget_nodes") = 0, py::arg("budget_seconds") = 0.0,
      py::arg("jobs") = 1);

  m.def(
      "has_induced_path_json",
      [](const Graph& g, int k, uint64_t nodes, double seconds) {
        py::gil_scoped_release release;
        SearchOptions opt;
        opt.budget = make_budget(nodes, seconds);
        return to_json(g, has_induced_path(g, k, opt)).dump();
      },
      py::arg("graph"), py::arg("k"), py::arg("budget_nodes") = 0, py::arg("budget_seconds") = 0.0);

  m.def(
      "check_json",
      [](const std::string& ref, int k, bool symmetry, uint64_t nodes, double seconds, int jobs) {
        py::gil_scoped_release release;
        Resolved r{resolve_graph(ref)};
        SaturationOptions opt;
        opt.base_budget = opt.witness_budget = make_budget(nodes, seconds);
        opt.generators = r.gens(symmetry);
        opt.jobs = jobs;
        return to_json(r.ref.graph, verify_induced_saturated(r.ref.graph, k, opt)).dump();
      },
      py::arg("ref"), py::arg("k"), py::arg("symmetry") = false, py::arg("budget_nodes") = 0,
      py::arg("budget_seconds") = 0.0, py::arg("jobs") = 1);

  m.def(
      "check_graph_json",
      [](const Graph& g, int k) {
        py::gil_scoped_release release;
        return to_json(g, verify_induced_saturated(g, k)).dump();
      },
      py::arg("graph"), py::arg("k"));

  m.def("canonical_long_path", &canonical_long_path, py::arg("n"));
  m.def("automorphism_ok", [](int n, const std::string& name) {
    const Graph g = build_gn(n);
    if (name == "f") return verify_automorphism(g, auto_f(n));
    if (name == "p") return verify_automorphism(g, auto_p(n));
    if (name == "p_inv") return verify_automorphism(g, auto_p_inv(n));
    if (name == "q") return verify_automorphism(g, auto_q(n));
    if (name == "r") return verify_automorphism(g, auto_r(n));
    throw GraphError("unknown map '" + name + "'");
  });
  m.def("vertex_orbit_count", [](const std::string& ref) {
    const GraphRef r = resolve_graph(ref);
    if (!r.generators) return r.graph.order();
    return orbits(r.graph, *r.generators, OrbitDomain::kVertices).class_count();
  });

  m.def(
      "run_claims_json",
      [](const std::string& tier, int jobs) {
        py::gil_scoped_release release;
        std::vector<ClaimSpec> claims = builtin_claims();
        if (tier != "all") {
          const Tier t = parse_tier(tier);
          std::erase_if(claims, [t](const ClaimSpec& c) { return c.tier != t; });
        }
        return run_claims(claims, jobs).to_json().dump();
      },
      py::arg("tier") = "core", py::arg("jobs") = 1);
}
