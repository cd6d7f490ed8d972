#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "ijcomp/chordality.hpp"
#include "ijcomp/cover.hpp"
#include "ijcomp/designs.hpp"
#include "ijcomp/families.hpp"
#include "ijcomp/graph_ops.hpp"
#include "ijcomp/io.hpp"
#include "ijcomp/recognition.hpp"

namespace py = pybind11;
using namespace ijcomp;

PYBIND11_MODULE(ijcomp, m) {
  m.doc() = "competition graphs of degree-bounded loopless digraphs";

  py::register_exception<SizeGuardError>(m, "SizeGuardError");
  py::register_exception<ParseError>(m, "ParseError");

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
      .def("to_json", &graph_to_json)
      .def("to_dot", &graph_to_dot)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
      });

  py::class_<Digraph>(m, "Digraph")
      .def(py::init<int, std::vector<Arc>>(), py::arg("n"), py::arg("arcs") = std::vector<Arc>{})
      .def_property_readonly("n", &Digraph::n)
      .def_property_readonly("arcs", [](const Digraph& d) { return d.arcs(); })
      .def("has_arc", &Digraph::has_arc)
      .def("out_neighbors", [](const Digraph& d, int v) { return d.out_neighbors(v); })
      .def("in_neighbors", [](const Digraph& d, int v) { return d.in_neighbors(v); })
      .def("to_json", &digraph_to_json)
      .def("to_dot", &digraph_to_dot)
      .def(py::self == py::self)
      .def("__repr__", [](const Digraph& d) {
        return "Digraph(n=" + std::to_string(d.n()) + ", arcs=" + std::to_string(d.arc_count()) + ")";
      });

  py::class_<Bibd>(m, "Bibd")
      .def(py::init([](int b, int v, int r, int k, int lam, std::vector<std::vector<int>> blocks) {
             return Bibd{b, v, r, k, lam, std::move(blocks)};
           }),
           py::arg("b"), py::arg("v"), py::arg("r"), py::arg("k"), py::arg("lam"), py::arg("blocks"))
      .def_readonly("b", &Bibd::b)
      .def_readonly("v", &Bibd::v)
      .def_readonly("r", &Bibd::r)
      .def_readonly("k", &Bibd::k)
      .def_readonly("lam", &Bibd::lambda)
      .def_readonly("blocks", &Bibd::blocks)
      .def("to_json", &bibd_to_json)
      .def(py::self == py::self);

  m.def("parse_graph", &parse_graph);
  m.def("parse_digraph", &parse_digraph);

  m.def("competition_graph", &competition_graph);
  m.def("is_ij_digraph",
        [](const Digraph& d, int i, int j) { return is_ij_digraph(d, DegreeBounds(i, j)); });
  m.def("necessary_conditions", [](const Graph& g, int i, int j) {
    std::vector<std::string> names;
    for (auto c : necessary_conditions(g, DegreeBounds(i, j)))
      names.push_back(necessary_condition_name(c));
    return names;
  });
  m.def("is_k1t_free", &is_k1t_free);
  m.def("graph_stats", &graph_stats);

  m.def("recognize", [](const Graph& g, int i, int j) {
    auto cert = recognize(g, DegreeBounds(i, j));
    py::dict out;
    out["member"] = cert.member;
    out["witness"] = cert.witness ? py::cast(*cert.witness) : py::none();
    out["obstruction"] = cert.obstruction ? py::cast(cert.obstruction_string()) : py::none();
    return out;
  });
  m.def("recognize_1j", &recognize_1j);
  m.def("recognize_i1", &recognize_i1);

  m.def("search_cover", [](const Graph& g, int i, int j) -> py::object {
    auto cover = search_cover(g, DegreeBounds(i, j));
    if (!cover) return py::none();
    return py::cast(cover->cliques);
  });
  m.def("validate_cover", [](const Graph& g, std::vector<std::vector<int>> cliques, int i, int j) {
    for (auto& c : cliques) std::sort(c.begin(), c.end());
    return validate_cover(g, CliqueCover{std::move(cliques)}, DegreeBounds(i, j));
  });

  m.def("is_chordal", [](const Graph& g) {
    auto hc = is_chordal(g);
    return py::make_tuple(hc.chordal, hc.hole);
  });
  m.def("induces_triangle", &induces_triangle);
  m.def("is_irredundant", &is_irredundant);
  m.def("find_good_subdigraph", [](const Digraph& d) {
    auto report = find_good_subdigraph(d);
    py::dict out;
    out["found"] = report.found;
    out["vertices"] = report.vertices;
    out["arcs"] = report.arcs;
    return out;
  });
  m.def("interval_22", &interval_22);

  m.def("verify_bibd", [](const Bibd& d) -> py::object {
    auto violation = verify_bibd(d);
    if (!violation) return py::none();
    return py::cast(*violation);
  });
  m.def("pair_design", &pair_design);
  m.def("steiner_triple", [](int n) -> py::object {
    auto d = steiner_triple(n);
    if (!d) return py::none();
    return py::cast(*d);
  });
  m.def("bibd_to_digraph", &bibd_to_digraph);
  m.def("extract_bibd", [](const Digraph& d, int i, int j, std::vector<int> clique) {
    return extract_bibd(d, DegreeBounds(i, j), clique);
  });
  m.def("clique_bound", [](int i, int j) { return clique_bound(DegreeBounds(i, j)); });
  m.def("fisher_check", &fisher_check);

  m.def("star_of_cliques", &star_of_cliques);
  m.def("double_clique", &double_clique);
  m.def("hamming_graph", [](int k) {
    auto [g, cover] = hamming_graph(k);
    return py::make_tuple(g, cover.cliques);
  });
  m.def("containment", [](int ai, int aj, int bi, int bj) {
    auto v = containment(DegreeBounds(ai, aj), DegreeBounds(bi, bj));
    py::dict out;
    out["relation"] = relation_name(v.relation);
    out["rationale"] = v.rationale;
    out["witness"] = v.witness ? py::cast(*v.witness) : py::none();
    out["json"] = verdict_to_json(v);
    return out;
  });
  m.def("separation_witness", [](int ai, int aj, int bi, int bj) -> py::object {
    auto w = separation_witness(DegreeBounds(ai, aj), DegreeBounds(bi, bj));
    if (!w) return py::none();
    return py::cast(*w);
  });
}
