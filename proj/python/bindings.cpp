#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qalpha/dynamics.hpp"
#include "qalpha/factorize.hpp"
#include "qalpha/sequence.hpp"
#include "qalpha/suites.hpp"
#include "qalpha/transform.hpp"

namespace py = pybind11;
using namespace qalpha;

namespace {

FieldElement to_element(const FieldSpec& spec, const py::object& value) {
  if (py::isinstance<FieldElement>(value)) return value.cast<FieldElement>();
  if (py::isinstance<py::int_>(value)) return spec.element(value.cast<Bits>());
  const auto text = value.cast<std::string>();
  if (text == "root") return spec.root();
  return FieldElement::parse(spec, text);
}

py::tuple split_tuple(const SplitResult& r) {
  if (!r.is_split()) return py::make_tuple(r.g1());
  return py::make_tuple(r.g1(), r.g2());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Irreducible polynomial sequences over GF(2^s) via (Q,alpha)-transforms";

  // QalphaError(ValueError) whose message starts with the error code.
  static PyObject* error_type = py::register_exception<Error>(m, "QalphaError", PyExc_ValueError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error_type, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<FieldSpec>(m, "FieldSpec")
      .def_static("conway", &FieldSpec::conway, py::arg("s"))
      .def_static("with_modulus", &FieldSpec::with_modulus, py::arg("s"), py::arg("modulus"))
      .def_static("parse", &FieldSpec::parse, py::arg("text"))
      .def_property_readonly("degree", &FieldSpec::degree)
      .def_property_readonly("modulus", &FieldSpec::modulus)
      .def_property_readonly("size", &FieldSpec::size)
      .def_property_readonly("uses_conway_modulus", &FieldSpec::uses_conway_modulus)
      .def("element", [](const FieldSpec& s, const py::object& v) { return to_element(s, v); }, py::arg("value"))
      .def("root", &FieldSpec::root)
      .def("zero", &FieldSpec::zero)
      .def("one", &FieldSpec::one)
      .def("generator", &FieldSpec::generator)
      .def("__eq__", [](const FieldSpec& a, const FieldSpec& b) { return a == b; })
      .def("__str__", &FieldSpec::to_string)
      .def("__repr__", [](const FieldSpec& s) { return "FieldSpec('" + s.to_string() + "')"; });

  py::class_<FieldElement>(m, "FieldElement")
      .def_property_readonly("bits", &FieldElement::bits)
      .def_property_readonly("spec", &FieldElement::spec)
      .def("inverse", &FieldElement::inverse)
      .def("square", &FieldElement::square)
      .def("sqrt", [](const FieldElement& a) { return sqrt(a); })
      .def("trace", [](const FieldElement& a) { return trace(a); })
      .def("pow", &FieldElement::pow, py::arg("e"))
      .def("exponent_string", &FieldElement::to_exponent_string)
      .def("__add__", [](const FieldElement& a, const FieldElement& b) { return a + b; })
      .def("__sub__", [](const FieldElement& a, const FieldElement& b) { return a - b; })
      .def("__mul__", [](const FieldElement& a, const FieldElement& b) { return a * b; })
      .def("__truediv__", [](const FieldElement& a, const FieldElement& b) { return a / b; })
      .def("__eq__", [](const FieldElement& a, const FieldElement& b) { return a == b; })
      .def("__hash__", [](const FieldElement& a) { return py::hash(py::int_(a.bits())); })
      .def("__str__", &FieldElement::to_string)
      .def("__repr__", [](const FieldElement& a) { return "FieldElement(" + a.to_string() + ")"; });

  py::class_<Polynomial>(m, "Polynomial")
      .def_static("parse", &Polynomial::parse, py::arg("spec"), py::arg("text"))
      .def(py::init<FieldSpec, std::vector<Bits>>(), py::arg("spec"), py::arg("coeffs"))
      .def_property_readonly("degree", &Polynomial::degree)
      .def_property_readonly("spec", &Polynomial::spec)
      .def_property_readonly("coeffs", [](const Polynomial& f) { return f.raw(); })
      .def("is_monic", &Polynomial::is_monic)
      .def("pretty", &Polynomial::pretty)
      .def("__call__", [](const Polynomial& f, const py::object& x) { return eval(f, to_element(f.spec(), x)); })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__lt__", [](const Polynomial& a, const Polynomial& b) { return a < b; })
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& f) { return "Polynomial('" + f.to_string() + "')"; });

  m.def("is_irreducible", py::overload_cast<const Polynomial&>(&is_irreducible), py::arg("f"));
  m.def("is_self_reciprocal", &is_self_reciprocal, py::arg("f"));
  m.def("reciprocal", &reciprocal, py::arg("f"));
  m.def("divrem", &divrem, py::arg("a"), py::arg("b"));
  m.def("gcd", py::overload_cast<const Polynomial&, const Polynomial&>(&gcd), py::arg("a"), py::arg("b"));
  m.def(
      "q_alpha_transform",
      [](const Polynomial& f, const py::object& alpha) { return q_alpha_transform(f, to_element(f.spec(), alpha)); },
      py::arg("f"), py::arg("alpha"));
  m.def("q_transform", &q_transform, py::arg("f"));
  m.def("meyn_condition", &meyn_condition, py::arg("f"));
  m.def(
      "kyuregyan_condition",
      [](const Polynomial& F, const py::object& delta) { return kyuregyan_condition(F, to_element(F.spec(), delta)); },
      py::arg("F"), py::arg("delta"));
  m.def(
      "split_q_image", [](const Polynomial& F, int n, std::uint64_t seed) { return split_tuple(split_q_image(F, n, seed)); },
      py::arg("F"), py::arg("n"), py::arg("seed") = 0);
  m.def(
      "oracle_factor", [](const Polynomial& f) { return oracle_factor(f); }, py::arg("f"));
  m.def("monic_irreducibles", &monic_irreducibles, py::arg("spec"), py::arg("degree"));
  m.def(
      "has_periodic_roots",
      [](const Polynomial& f, const py::object& alpha) { return has_periodic_roots(f, to_element(f.spec(), alpha)); },
      py::arg("f"), py::arg("alpha"));

  m.def(
      "sequence_json",
      [](const FieldSpec& spec, const py::object& alpha, const Polynomial& f0, int target_degree, std::uint64_t seed) {
        const SequenceRun run = generate(spec, to_element(spec, alpha), f0, target_degree, seed);
        return run_record_json(run, verify_run(run), seed, target_degree, -1);
      },
      py::arg("spec"), py::arg("alpha"), py::arg("f0"), py::arg("target_degree"), py::arg("seed") = 0);
  m.def(
      "graph_json",
      [](const FieldSpec& spec, const py::object& alpha) {
        return export_json(build_graph(spec, to_element(spec, alpha)), -1);
      },
      py::arg("spec"), py::arg("alpha"));
  m.def(
      "graph_dot",
      [](const FieldSpec& spec, const py::object& alpha) { return export_dot(build_graph(spec, to_element(spec, alpha))); },
      py::arg("spec"), py::arg("alpha"));
  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed) {
        SuiteResult r = run_suite(name, seed);
        py::dict out;
        out["name"] = r.name;
        out["passed"] = r.passed();
        out["checked"] = r.checked;
        out["failed"] = r.failed;
        out["failures"] = r.failures;
        return out;
      },
      py::arg("name"), py::arg("seed") = 0);
  m.def("suite_names", &suite_names);
}
