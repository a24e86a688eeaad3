#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qell/character.hpp"
#include "qell/errors.hpp"
#include "qell/power.hpp"
#include "qell/qell.hpp"
#include "qell/spec.hpp"
#include "qell/tate.hpp"

namespace py = pybind11;
using namespace qell;

namespace {

struct PyGroup {
  GroupPtr g;
  std::string label;
};

std::string rational_text(const mpq_class& q) { return rational_str(q); }

py::list class_reps(const PyGroup& g) {
  py::list out;
  for (auto rep : g.g->conjugacy().reps) out.append(g.g->element(rep).str());
  return out;
}

py::list components(const PyGroup& g) {
  py::list out;
  for (auto rep : g.g->conjugacy().reps) {
    const auto ctx = lambda_context(g.g, rep);
    py::list grades;
    for (const auto& b : canonical_basis(ctx)) grades.append(rational_text(b.grade));
    py::dict d;
    d["rep"] = g.g->element(rep).str();
    d["rank"] = ctx->rank();
    d["grades"] = grades;
    d["presentation"] = presentation(ctx);
    out.append(d);
  }
  return out;
}

std::vector<std::vector<std::string>> table(const PyGroup& g) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : g.g->character_table().irr) {
    std::vector<std::string> r;
    for (const auto& v : row) r.push_back(v.str());
    out.push_back(std::move(r));
  }
  return out;
}

py::dict tate_report(std::size_t n, std::size_t max_n) {
  TateOptions opt;
  opt.max_n = max_n;
  opt.throw_on_failure = false;
  const auto r = quotient_and_match(n, opt);
  py::list classes;
  for (const auto& c : r.classes) {
    py::dict d;
    d["sigma"] = c.sigma.str();
    d["case"] = c.case_id;
    d["d"] = c.d;
    d["e"] = c.e;
    d["generators"] = c.generators;
    d["survivors"] = c.survivors;
    d["torsion_free"] = c.torsion_free;
    d["passed"] = c.passed;
    d["failure"] = c.failure;
    classes.append(d);
  }
  py::dict out;
  out["n"] = r.n;
  out["total_rank"] = r.total_rank;
  out["expected_rank"] = r.expected_rank;
  out["passed"] = r.passed;
  out["classes"] = classes;
  return out;
}

py::dict axioms(const QEllElem& v, const QEllElem& w, std::size_t n, std::size_t m, bool extended) {
  AxiomOptions opt;
  opt.extended = extended;
  opt.throw_on_failure = false;
  py::dict out;
  for (const auto& r : check_axioms(v, w, n, m, opt).results) {
    const char* s = r.status == AxiomStatus::Pass ? "pass" : r.status == AxiomStatus::Fail ? "fail" : "skipped";
    out[py::str(r.axiom)] = s;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact quasi-elliptic cohomology of finite groups, power operations and Tate verification";

  auto base = py::register_exception<Error>(m, "QellError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  py::class_<PyGroup>(m, "Group")
      .def(py::init([](const std::string& spec) {
             const auto s = parse_group_spec(spec);
             return PyGroup{s.build(), s.str()};
           }),
           py::arg("spec"))
      .def_property_readonly("order", [](const PyGroup& g) { return g.g->order(); })
      .def_property_readonly("degree", [](const PyGroup& g) { return g.g->degree(); })
      .def_property_readonly("class_count", [](const PyGroup& g) { return g.g->class_count(); })
      .def("class_reps", &class_reps)
      .def("components", &components)
      .def("rank", [](const PyGroup& g) { return qell_rank(g.g); })
      .def("component_ranks", [](const PyGroup& g) { return qell_component_ranks(g.g); })
      .def("character_table", &table)
      .def("__repr__", [](const PyGroup& g) { return "Group('" + g.label + "')"; });

  py::class_<QEllElem>(m, "Element")
      .def(py::init([](const PyGroup& g, const std::string& text) { return parse_element(g.g, text); }),
           py::arg("group"), py::arg("text"))
      .def_static("unit", [](const PyGroup& g) { return QEllElem::unit(g.g); })
      .def_static("q", [](const PyGroup& g) { return QEllElem::q(g.g); })
      .def_property_readonly("group_order", [](const QEllElem& a) { return a.group()->order(); })
      .def("component", [](const QEllElem& a, std::size_t cls) { return a.component(cls).str(); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__str__", &element_str)
      .def("__repr__", [](const QEllElem& a) { return "Element('" + element_str(a) + "')"; });

  m.def("power_total", [](const QEllElem& v, std::size_t n) { return power_total(Wreath(v.group(), n), v); },
        py::arg("v"), py::arg("n"), "Total power operation into the wreath product G wr S_n");
  m.def("check_axioms", &axioms, py::arg("v"), py::arg("w"), py::arg("n"), py::arg("m"), py::arg("extended") = false);
  m.def("quotient_and_match", &tate_report, py::arg("n"), py::arg("max_n") = 6);
}
