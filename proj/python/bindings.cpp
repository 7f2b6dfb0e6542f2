#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twinless/digraph.hpp"
#include "twinless/edge_cutpairs.hpp"
#include "twinless/errors.hpp"
#include "twinless/generators.hpp"
#include "twinless/graph.hpp"
#include "twinless/oracles.hpp"
#include "twinless/twinless.hpp"
#include "twinless/undirected.hpp"
#include "twinless/vertex_cutpairs.hpp"

namespace py = pybind11;
using namespace twinless;

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

std::vector<Edge> to_edges(const EdgeList& list) {
  std::vector<Edge> out;
  out.reserve(list.size());
  for (const auto& [u, v] : list) out.push_back({u, v});
  return out;
}

template <class G>
EdgeList from_edges(const G& g) {
  EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

const char* kind_name(TwinlessKind k) { return k == TwinlessKind::kStrong ? "strong" : "twinless-only"; }

Method method_of(bool oracle) { return oracle ? Method::kBruteForce : Method::kDominators; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Twinless strong connectivity and cut-pair counting";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);

  py::enum_<Method>(m, "Method").value("DOMINATORS", Method::kDominators).value("BRUTE_FORCE", Method::kBruteForce);

  py::class_<UnGraph>(m, "UnGraph")
      .def(py::init([](Vertex n, const EdgeList& edges) { return UnGraph(n, to_edges(edges)); }), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("num_vertices", &UnGraph::num_vertices)
      .def_property_readonly("num_edges", &UnGraph::num_edges)
      .def_property_readonly("edges", &from_edges<UnGraph>)
      .def("find_edge", &UnGraph::find_edge)
      .def("__eq__", &UnGraph::operator==)
      .def("__str__", [](const UnGraph& g) { return serialize(g); })
      .def("__repr__", [](const UnGraph& g) {
        return "UnGraph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
      });

  py::class_<Digraph>(m, "Digraph")
      .def(py::init([](Vertex n, const EdgeList& edges) { return Digraph(n, to_edges(edges)); }), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("num_vertices", &Digraph::num_vertices)
      .def_property_readonly("num_edges", &Digraph::num_edges)
      .def_property_readonly("edges", &from_edges<Digraph>)
      .def("find_edge", &Digraph::find_edge)
      .def("reversed", &Digraph::reversed)
      .def("__eq__", &Digraph::operator==)
      .def("__str__", [](const Digraph& g) { return serialize(g); })
      .def("__repr__", [](const Digraph& g) {
        return "Digraph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("parse_graph", [](const std::string& text) -> py::object {
    auto g = parse_graph(text);
    if (auto* u = std::get_if<UnGraph>(&g)) return py::cast(std::move(*u));
    return py::cast(std::get<Digraph>(std::move(g)));
  });
  m.def("read_graph_file", [](const std::string& path) -> py::object {
    auto g = read_graph_file(path);
    if (auto* u = std::get_if<UnGraph>(&g)) return py::cast(std::move(*u));
    return py::cast(std::get<Digraph>(std::move(g)));
  });
  m.def("underlying", [](const Digraph& g) { return underlying(g).graph; });

  m.def("bridges", [](const UnGraph& g) { return bridges_and_articulation_points(g).bridges; });
  m.def("articulation_points", [](const UnGraph& g) { return bridges_and_articulation_points(g).articulation_points; });
  m.def("two_edge_connected_components", [](const UnGraph& g) { return two_edge_connected_components(g).classes(); });

  m.def("count_vertex_cutpairs", [](const UnGraph& g) { return count_vertex_cutpairs(g).count; });
  m.def("query_cut_edges", [](const UnGraph& g, Vertex v) { return query_cut_edges(count_vertex_cutpairs(g), v); });
  m.def("count_edge_cutpairs", [](const UnGraph& g) { return count_edge_cutpairs(g).count; });
  m.def("query_cut_edges_for_edge",
        [](const UnGraph& g, EdgeId e) { return query_cut_edges_for_edge(count_edge_cutpairs(g), e); });

  m.def("sccs", [](const Digraph& g) { return sccs(g).classes(); });
  m.def("is_strongly_connected", &is_strongly_connected);
  m.def("strong_articulation_points", &strong_articulation_points, py::arg("g"),
        py::arg("method") = Method::kDominators);
  m.def("strong_bridges", &strong_bridges, py::arg("g"), py::arg("method") = Method::kDominators);

  m.def("is_twinless_strongly_connected", &is_twinless_strongly_connected);
  m.def("tsccs", [](const Digraph& g) { return tsccs(g).classes(); });
  m.def(
      "twinless_strong_articulation_points",
      [](const Digraph& g, bool oracle) {
        py::list out;
        for (const auto& a : twinless_strong_articulation_points(g, method_of(oracle))) {
          out.append(py::make_tuple(a.vertex, kind_name(a.kind), a.tscc_after));
        }
        return out;
      },
      py::arg("g"), py::arg("oracle") = false);
  m.def(
      "twinless_strong_bridges",
      [](const Digraph& g, bool oracle) {
        py::list out;
        for (const auto& b : twinless_strong_bridges(g, method_of(oracle))) {
          out.append(py::make_tuple(b.edge, kind_name(b.kind), b.tscc_after));
        }
        return out;
      },
      py::arg("g"), py::arg("oracle") = false);
  m.def("tscc_count_after_vertex", &tscc_count_after_vertex);
  m.def("tscc_count_after_edge", &tscc_count_after_edge);
  m.def("twinless_report_json", [](const Digraph& g) { return to_json(analyze_twinless(g), g); });

  m.def("oracle_count_v", &oracle_count_v);
  m.def("oracle_count_e", &oracle_count_e);
  m.def("oracle_tsap", &oracle_tsap);
  m.def("oracle_tsb", &oracle_tsb);

  m.def("gen_cycle", &gen_cycle);
  m.def("gen_clique", &gen_clique);
  m.def("gen_theta", &gen_theta);
  m.def("directed_cycle", &directed_cycle);
  m.def("bidirected", &bidirected);
  m.def("gen_random_2vc", &gen_random_2vc, py::arg("n"), py::arg("m"), py::arg("seed"));
  m.def("gen_random_2ec", &gen_random_2ec, py::arg("n"), py::arg("m"), py::arg("seed"));
  m.def("gen_random_sc", &gen_random_sc, py::arg("n"), py::arg("m"), py::arg("seed"));
  m.def("gen_random_twinless_sc", &gen_random_twinless_sc, py::arg("n"), py::arg("m"), py::arg("seed"));
}
