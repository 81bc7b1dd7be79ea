#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tmc/coloring.hpp"
#include "tmc/error.hpp"
#include "tmc/graph_io.hpp"
#include "tmc/isomorphism.hpp"
#include "tmc/randgraph.hpp"
#include "tmc/solver.hpp"
#include "tmc/spanning.hpp"
#include "tmc/theorems.hpp"

namespace py = pybind11;

namespace {

using EdgeTuple = std::pair<int, int>;

std::vector<EdgeTuple> edge_tuples(const std::vector<tmc::Edge>& edges) {
  std::vector<EdgeTuple> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

py::dict coloring_dict(const tmc::Graph& g, const tmc::TotalColoring& col) {
  py::dict d;
  d["vertex_colors"] = col.vertex_color;
  py::list edges;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    edges.append(py::make_tuple(g.edges()[i].u, g.edges()[i].v, col.edge_color[i]));
  }
  d["edge_colors"] = edges;
  d["num_colors"] = col.num_colors();
  return d;
}

tmc::TotalColoring coloring_from(const tmc::Graph& g, const std::vector<int>& vertex_colors,
                                 const std::vector<std::tuple<int, int, int>>& edge_colors) {
  tmc::TotalColoring col;
  col.vertex_color = vertex_colors;
  col.edge_color.assign(g.size(), -1);
  for (const auto& [u, v, c] : edge_colors) {
    int idx = (u >= 0 && v >= 0 && u < g.order() && v < g.order()) ? g.edge_index(u, v) : -1;
    if (idx < 0) throw tmc::Error("edge " + std::to_string(u) + "-" + std::to_string(v) + " is not in the graph");
    col.edge_color[idx] = c;
  }
  if (static_cast<int>(edge_colors.size()) != g.size()) throw tmc::Error("edge color count does not match the graph");
  return col;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Total monochromatic connection number of graphs";

  static py::exception<tmc::Error> tmc_error(m, "TmcError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const tmc::Error& e) {
      py::set_error(tmc_error, e.what());
    }
  });

  py::class_<tmc::Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<EdgeTuple>& edges) { return tmc::Graph(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<EdgeTuple>{})
      .def_property_readonly("n", &tmc::Graph::order)
      .def_property_readonly("m", &tmc::Graph::size)
      .def_property_readonly("edges", [](const tmc::Graph& g) { return edge_tuples(g.edges()); })
      .def("graph6", &tmc::emit_graph6)
      .def("edge_list", &tmc::emit_edge_list)
      .def("is_connected", &tmc::is_connected)
      .def("__eq__", [](const tmc::Graph& a, const tmc::Graph& b) { return a == b; })
      .def("__repr__", [](const tmc::Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("parse_graph6", &tmc::parse_graph6, py::arg("text"));
  m.def("enumerate_connected_graphs", &tmc::enumerate_connected_graphs, py::arg("n"),
        "One representative per connected isomorphism class (n <= 7).");

  m.def(
      "spanning_stats",
      [](const tmc::Graph& g) {
        auto s = tmc::spanning_stats(g);
        py::dict d;
        d["l"] = s.l;
        d["q"] = s.q;
        d["gamma_c"] = s.gamma_c;
        d["witness_tree"] = edge_tuples(s.witness_tree);
        d["witness_cds"] = s.witness_cds;
        d["degenerate"] = s.degenerate;
        return d;
      },
      py::arg("g"));
  m.def("leaf_lower_bound", &tmc::leaf_lower_bound, py::arg("g"));

  m.def("tmc_lower_bound", &tmc::tmc_lower_bound, py::arg("g"));
  m.def("tmc_upper_bound", &tmc::tmc_upper_bound, py::arg("g"));
  m.def("tmc_oracle", &tmc::tmc_oracle, py::arg("g"));
  m.def(
      "tmc_exact",
      [](const tmc::Graph& g, int max_n) {
        auto out = tmc::tmc_exact(g, tmc::SolverOptions{.max_n = max_n});
        py::dict d;
        d["tmc"] = out.value ? py::cast(*out.value) : py::none();
        d["lower"] = out.lower;
        d["upper"] = out.upper;
        d["method"] = out.method;
        d["certificate"] = out.certificate ? py::object(coloring_dict(g, *out.certificate)) : py::none();
        return d;
      },
      py::arg("g"), py::arg("max_n") = 8);

  m.def(
      "classify",
      [](const tmc::Graph& g) {
        auto v = tmc::classify(g);
        py::dict d;
        d["rule"] = v.rule;
        d["value"] = v.value ? py::cast(*v.value) : py::none();
        d["detail"] = v.detail;
        py::list hits;
        for (const auto& h : v.hits) hits.append(py::make_tuple(h.rule, h.value));
        d["hits"] = hits;
        return d;
      },
      py::arg("g"));

  m.def(
      "construct_theorem1", [](const tmc::Graph& g) { return coloring_dict(g, tmc::construct_theorem1(g)); },
      py::arg("g"));
  m.def(
      "verify_tmc",
      [](const tmc::Graph& g, const std::vector<int>& vertex_colors,
         const std::vector<std::tuple<int, int, int>>& edge_colors) {
        auto r = tmc::verify_tmc(g, coloring_from(g, vertex_colors, edge_colors));
        return py::make_tuple(r.ok, r.failing_pair ? py::cast(*r.failing_pair) : py::none());
      },
      py::arg("g"), py::arg("vertex_colors"), py::arg("edge_colors"),
      "Returns (ok, failing_pair). edge_colors holds (u, v, color) triples.");

  m.def(
      "sweep",
      [](int n_max, int jobs) {
        auto r = tmc::sweep_crosscheck(tmc::SweepOptions{.n_max = n_max, .jobs = jobs});
        py::dict d;
        d["classes"] = r.total_classes();
        d["passed"] = r.passed();
        d["discrepancies"] = r.discrepancies;
        return d;
      },
      py::arg("n_max") = 6, py::arg("jobs") = 1);

  m.def(
      "threshold_p", [](int n, const std::string& f) { return tmc::threshold_p(n, tmc::parse_fspec(f)); },
      py::arg("n"), py::arg("f"));
  m.def("sample_gnp", &tmc::sample_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("connectivity_probability", &tmc::connectivity_probability, py::arg("n"), py::arg("a"), py::arg("trials"),
        py::arg("seed"), py::arg("jobs") = 1);
  m.def("connectivity_limit", &tmc::connectivity_limit, py::arg("a"));
}
