#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toppling/divisor.hpp"
#include "toppling/error.hpp"
#include "toppling/flags.hpp"
#include "toppling/io.hpp"
#include "toppling/oracle.hpp"
#include "toppling/resolution.hpp"

namespace py = pybind11;
using namespace toppling;

namespace {

Variant parse_variant(const std::string& v) {
  if (v == "binomial") return Variant::Binomial;
  if (v == "monomial") return Variant::Monomial;
  throw py::value_error("variant must be 'binomial' or 'monomial'");
}

py::dict betti(const PointedGraph& g, const std::string& grading) {
  const BettiTable t = betti_table(FlagCalculus(g));
  py::dict out;
  if (grading == "Z") {
    for (const auto& [key, count] : t.z) out[py::make_tuple(key.first, key.second)] = count;
  } else if (grading == "Pic") {
    for (const auto& [key, count] : t.pic) out[py::make_tuple(key.first, py::tuple(py::cast(key.second)))] = count;
  } else {
    throw py::value_error("grading must be 'Z' or 'Pic'");
  }
  return out;
}

std::vector<std::string> groebner(const PointedGraph& g, const std::string& variant) {
  const FlagCalculus fc(g);
  std::vector<std::string> out;
  for (const auto& p : generator_polynomials(fc, parse_variant(variant), RationalField{}))
    out.push_back(polynomial_to_string(p, g.n(), nullptr));
  return out;
}

std::vector<std::string> flags(const PointedGraph& g, int k) {
  const FlagCalculus fc(g);
  std::vector<std::string> out;
  for (int len = 1; len <= g.n(); ++len)
    if (k == 0 || k == len)
      for (const auto& f : fc.basis(len).flags) out.push_back(format_flag(f));
  return out;
}

std::map<std::string, bool> verify(const PointedGraph& g) {
  const FlagCalculus fc(g);
  const RationalField qq;
  std::map<std::string, bool> out;
  for (Variant v : {Variant::Binomial, Variant::Monomial}) {
    const std::string suffix = v == Variant::Binomial ? "" : "-monomial";
    for (const auto& c : verify_resolution(fc, build_resolution(fc, v, qq)).checks) out[c.name + suffix] = c.ok;
  }
  for (const auto& c : hilbert_check(fc, g.edge_count() + 2).checks) out[c.name] = c.ok;
  const auto sr = schreyer_resolution(generator_polynomials(fc, Variant::Binomial, qq), g, SchreyerOptions{});
  out["schreyer"] = minimalize(sr.complex(g.n()), g) == betti_table(fc);
  return out;
}

}  // namespace

PYBIND11_MODULE(toppling_py, m) {
  m.doc() = "Minimal free resolutions of toppling ideals from connected flags";

  py::register_exception<Error>(m, "TopplingError", PyExc_ValueError);

  py::class_<PointedGraph>(m, "Graph")
      .def_property_readonly("n", &PointedGraph::n)
      .def_property_readonly("q", [](const PointedGraph& g) { return g.q() + 1; })
      .def_property_readonly("edge_count", &PointedGraph::edge_count)
      .def_property_readonly("genus", &PointedGraph::genus)
      .def("with_q", [](const PointedGraph& g, int q) { return g.with_q(q - 1); }, py::arg("q"))
      .def("to_text", &format_graph)
      .def("to_json", &format_graph_json)
      .def("__repr__", [](const PointedGraph& g) {
        return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.edge_count()) +
               " q=" + std::to_string(g.q() + 1) + ">";
      });

  m.def("parse_graph", &parse_graph, py::arg("text"));
  m.def("load_graph", &load_graph, py::arg("path"));
  m.def("betti", &betti, py::arg("graph"), py::arg("grading") = "Z");
  m.def(
      "betti_totals", [](const PointedGraph& g) { return betti_table(FlagCalculus(g)).totals(); },
      py::arg("graph"));
  m.def("groebner", &groebner, py::arg("graph"), py::arg("variant") = "binomial");
  m.def("flags", &flags, py::arg("graph"), py::arg("k") = 0);
  m.def(
      "q_reduce", [](const PointedGraph& g, const Divisor& d) { return q_reduce(g, g.q(), d); }, py::arg("graph"),
      py::arg("divisor"));
  m.def(
      "equivalent", [](const PointedGraph& g, const Divisor& a, const Divisor& b) {
        return linearly_equivalent(g, a, b);
      },
      py::arg("graph"), py::arg("a"), py::arg("b"));
  m.def("spanning_tree_count", &spanning_tree_count, py::arg("graph"));
  m.def("verify", &verify, py::arg("graph"));
}
