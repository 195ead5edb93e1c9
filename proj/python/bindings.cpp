#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wba/antipode.hpp"
#include "wba/catalog.hpp"
#include "wba/io.hpp"
#include "wba/report.hpp"

namespace py = pybind11;
using namespace wba;

namespace {

std::vector<std::string> strings(const Vector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(toString(x));
  return out;
}

std::vector<std::vector<std::string>> strings(const Matrix& m) {
  std::vector<std::vector<std::string>> out;
  for (int i = 0; i < m.rows(); ++i) out.push_back(strings(m.row(i)));
  return out;
}

// Scalars cross the boundary as "p/q" strings; the Python side turns them into Fractions.
SpecFile load(const std::string& text) { return parseSpecText(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with finite-dimensional weak bialgebras";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<SpecFile>(m, "Spec")
      .def(py::init(&load), py::arg("text"))
      .def_property_readonly("dim", [](const SpecFile& s) { return s.algebra.dim(); })
      .def_property_readonly("labels", [](const SpecFile& s) { return s.algebra.labels(); })
      .def_property_readonly("counit", [](const SpecFile& s) { return strings(s.algebra.counit()); })
      .def_property_readonly("unit", [](const SpecFile& s) { return strings(s.algebra.one()); })
      .def("to_json", &emitSpec)
      .def("dual", &dualSpec)
      .def("validate", [](const SpecFile& s) {
        ValidationReport r = validate(s.algebra);
        std::vector<std::string> laws;
        for (const auto& w : r.violations) laws.push_back(w.law);
        return py::make_tuple(r.ok, laws);
      })
      .def("axioms", [](const SpecFile& s) { return axiomsJson(decideAxioms(s.algebra), s.algebra.labels(), 1).dump(); })
      .def("antipode", [](const SpecFile& s) -> py::object {
        AntipodeStatus st = solveAntipode(s.algebra);
        if (!st.map) return py::none();
        return py::make_tuple(kindName(st.kind), strings(*st.map));
      })
      .def("report", [](const SpecFile& s) { return buildReport(s).doc.dump(); })
      .def("__eq__", [](const SpecFile& a, const SpecFile& b) { return a.algebra == b.algebra; });

  m.def("catalog_names", &catalogNames);
  m.def("catalog", [](const std::string& name) { return SpecFile{catalog(name).algebra, Json::object()}; }, py::arg("name"));
}
