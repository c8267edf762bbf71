#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sginv/alexander.hpp"
#include "sginv/constituents.hpp"
#include "sginv/io.hpp"
#include "sginv/moves.hpp"
#include "sginv/quandle.hpp"
#include "sginv/yamada.hpp"

namespace py = pybind11;
using namespace sginv;

namespace {

py::int_ to_py(const Integer& n) { return py::int_(py::module_::import("builtins").attr("int")(n.str())); }

// {exponent: coefficient}
py::dict to_py(const LaurentPoly& p) {
  py::dict out;
  for (const auto& [e, c] : p.terms()) out[py::int_(e)] = to_py(c);
  return out;
}

WeightMap unit_weights(const Diagram& d) {
  WeightMap w;
  auto ep = derive_edges(d);
  for (std::size_t e = 0; e < ep.edges.size(); ++e) w[edge_name(static_cast<int>(e))] = 1;
  return w;
}

ConstituentInvariant invariant(const std::string& name) { return parse_constituent_invariant(name); }

}  // namespace

PYBIND11_MODULE(_sginv, m) {
  m.doc() = "Invariants of spatial graph diagrams";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Diagram>(m, "Diagram")
      .def_property_readonly("vertex_count", [](const Diagram& d) { return d.vertices.size(); })
      .def_property_readonly("crossing_count", [](const Diagram& d) { return d.crossings.size(); })
      .def_property_readonly("free_loops", [](const Diagram& d) { return d.free_loops; })
      .def_property_readonly("segments", [](const Diagram& d) { return segment_ids(d); })
      .def("to_json", [](const Diagram& d) { return serialize(d); })
      .def("__eq__", [](const Diagram& a, const Diagram& b) { return a == b; })
      .def("__repr__", [](const Diagram& d) {
        return "<Diagram vertices=" + std::to_string(d.vertices.size()) +
               " crossings=" + std::to_string(d.crossings.size()) + " free_loops=" + std::to_string(d.free_loops) +
               ">";
      });

  m.def("parse", [](const std::string& text) { return parse_document(text).diagram; }, py::arg("text"));
  m.def(
      "parse_weights", [](const std::string& text) { return parse_document(text).weights; }, py::arg("text"));
  m.def("load", [](const std::string& path) { return parse_document(read_file(path)).diagram; }, py::arg("path"));
  m.def(
      "validate",
      [](const std::string& text) {
        std::vector<std::string> out;
        for (const auto& v : validate(parse_document_unchecked(text).diagram)) out.push_back(to_string(v));
        return out;
      },
      py::arg("text"), "Structural violations of a diagram document, as strings.");
  m.def("edges", [](const Diagram& d) {
    std::vector<std::string> names;
    auto ep = derive_edges(d);
    for (std::size_t e = 0; e < ep.edges.size(); ++e) names.push_back(edge_name(static_cast<int>(e)));
    return names;
  });

  m.def(
      "yamada",
      [](const Diagram& d, bool normalized) {
        LaurentPoly r('A');
        {
          py::gil_scoped_release release;
          r = normalized ? yamada_normalized(d).normalized : yamada_raw(d);
        }
        return to_py(r);
      },
      py::arg("diagram"), py::arg("normalized") = false);
  m.def(
      "alexander",
      [](const Diagram& d, std::optional<WeightMap> w) { return to_py(alexander_polynomial(d, w ? *w : unit_weights(d))); },
      py::arg("diagram"), py::arg("weights") = py::none());
  m.def(
      "determinant",
      [](const Diagram& d, std::optional<WeightMap> w) { return to_py(graph_determinant(d, w ? *w : unit_weights(d))); },
      py::arg("diagram"), py::arg("weights") = py::none());
  m.def(
      "wirtinger",
      [](const Diagram& d) {
        Presentation p = wirtinger_presentation(d);
        std::vector<std::string> rels;
        for (const auto& r : p.relators) rels.push_back(to_string(r));
        return py::make_tuple(p.generators, rels);
      },
      py::arg("diagram"));

  m.def(
      "colorings",
      [](const Diagram& d, std::optional<int> dihedral, std::optional<std::vector<std::vector<int>>> table) {
        if (dihedral.has_value() == table.has_value())
          throw std::invalid_argument("give exactly one of dihedral= or table=");
        FiniteQuandle q = dihedral ? dihedral_quandle(*dihedral) : FiniteQuandle::from_table(*table);
        return to_py(count_colorings(d, q));
      },
      py::arg("diagram"), py::kw_only(), py::arg("dihedral") = py::none(), py::arg("table") = py::none());
  m.def("is_p_colorable", &is_p_colorable, py::arg("diagram"), py::arg("p"));
  m.def(
      "quandle_violations",
      [](const std::vector<std::vector<int>>& table) {
        std::vector<std::string> out;
        for (const auto& v : verify_quandle(table)) out.push_back(to_string(v));
        return out;
      },
      py::arg("table"));

  m.def("constituent_count", [](const Diagram& d) { return to_py(constituent_count(d)); }, py::arg("diagram"));
  m.def(
      "constituents",
      [](const Diagram& d) {
        std::vector<std::pair<VertexChoice, Diagram>> out;
        for (auto& c : enumerate_constituents(d)) out.emplace_back(c.choice, c.diagram);
        return out;
      },
      py::arg("diagram"));
  m.def(
      "constituent_fingerprint",
      [](const Diagram& d, const std::string& inv) { return constituent_fingerprint(d, invariant(inv)); },
      py::arg("diagram"), py::arg("invariant"), py::call_guard<py::gil_scoped_release>());
  m.def("conway_gordon_sum", &conway_gordon_sum, py::arg("diagram"));

  m.def("mirror", &mirror, py::arg("diagram"));
  m.def("apply_r1", &apply_r1, py::arg("diagram"), py::arg("segment"), py::arg("chirality"));
  m.def(
      "apply_r2",
      [](const Diagram& d, SegmentId first, SegmentId second, bool first_over, int face_choice) {
        return apply_r2(d, first, second, {first_over, face_choice});
      },
      py::arg("diagram"), py::arg("first"), py::arg("second"), py::arg("first_over") = true,
      py::arg("face_choice") = 0);
}
