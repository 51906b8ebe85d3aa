#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "laurentsys/error.hpp"
#include "laurentsys/field.hpp"
#include "laurentsys/laws.hpp"
#include "laurentsys/operators.hpp"
#include "laurentsys/parser.hpp"
#include "laurentsys/sequence.hpp"
#include "laurentsys/system.hpp"

namespace py = pybind11;
using namespace laurentsys;

namespace {

// Coefficients arrive as str/int/float; all go through the value-token reader.
FieldValue to_value(const py::handle& obj, const Field& field) {
  if (py::isinstance<FieldValue>(obj)) return obj.cast<FieldValue>();
  return field.parse_value(py::str(obj).cast<std::string>());
}

Field to_field(const py::handle& obj) {
  if (py::isinstance<Field>(obj)) return obj.cast<Field>();
  return Field::parse(obj.cast<std::string>());
}

Exponent to_exponent(const py::handle& obj) {
  if (py::isinstance<py::int_>(obj)) return Exponent{obj.cast<std::int64_t>()};
  return Exponent(obj.cast<std::vector<std::int64_t>>());
}

py::tuple exponent_tuple(const Exponent& alpha) { return py::cast(alpha.components()); }

py::dict term_dict(const TermMap& terms) {
  py::dict out;
  for (const auto& [alpha, value] : terms) out[exponent_tuple(alpha)] = value.to_string();
  return out;
}

FiniteSeq finite_from_dict(const py::dict& terms, std::size_t rank, const Field& field) {
  FiniteSeq w(rank, field);
  for (const auto& [key, value] : terms) w.add_term(to_exponent(key), to_value(value, field));
  return w;
}

Sequence to_sequence(const py::handle& obj) {
  if (py::isinstance<FiniteSeq>(obj)) return obj.cast<FiniteSeq>();
  return obj.cast<PeriodicSeq>();
}

py::object from_sequence(const Sequence& w) {
  return std::visit([](const auto& s) -> py::object { return py::cast(s); }, w);
}

SeqVector to_seq_vector(const py::handle& obj) {
  if (py::isinstance<FiniteSeq>(obj)) return SeqVector(std::vector<FiniteSeq>{obj.cast<FiniteSeq>()});
  if (py::isinstance<PeriodicSeq>(obj)) return SeqVector(std::vector<PeriodicSeq>{obj.cast<PeriodicSeq>()});
  const auto items = obj.cast<py::sequence>();
  if (items.size() > 0 && py::isinstance<PeriodicSeq>(items[0])) {
    return SeqVector(obj.cast<std::vector<PeriodicSeq>>());
  }
  return SeqVector(obj.cast<std::vector<FiniteSeq>>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Laurent polynomial operators and autoregressive behaviors over Z^r";

  py::register_exception<Error>(m, "LaurentsysError", PyExc_ValueError);

  py::class_<Field>(m, "Field")
      .def(py::init([](const std::string& spec) { return Field::parse(spec); }), py::arg("spec") = "rational")
      .def_static("rational", &Field::rational)
      .def_static("prime", &Field::prime, py::arg("p"))
      .def_static("real", &Field::real, py::arg("tolerance") = Field::kDefaultTolerance)
      .def_property_readonly("is_exact", &Field::is_exact)
      .def("value", [](const Field& f, const py::handle& v) { return to_value(v, f); })
      .def(py::self == py::self)
      .def("__str__", &Field::to_string)
      .def("__repr__", [](const Field& f) { return "Field('" + f.to_string() + "')"; });

  py::class_<FieldValue>(m, "FieldValue")
      .def_property_readonly("field", &FieldValue::field)
      .def("__str__", &FieldValue::to_string)
      .def("__repr__", [](const FieldValue& v) { return "FieldValue('" + v.to_string() + "')"; })
      .def("__float__", &FieldValue::to_double)
      .def("__eq__", [](const FieldValue& a, const py::handle& b) { return a == to_value(b, a.field()); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self);

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def(py::init([](const std::string& text, std::size_t rank, const py::handle& field) {
             return parse_poly(text, rank, to_field(field));
           }),
           py::arg("text"), py::arg("rank") = 1, py::arg("field") = "rational")
      .def_property_readonly("rank", &LaurentPoly::rank)
      .def_property_readonly("field", &LaurentPoly::field)
      .def("coeff", [](const LaurentPoly& d, const py::handle& a) { return d.coeff(to_exponent(a)); })
      .def("terms", [](const LaurentPoly& d) { return term_dict(d.terms()); })
      .def("is_zero", &LaurentPoly::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &format_poly)
      .def("__repr__", [](const LaurentPoly& d) { return "LaurentPoly('" + format_poly(d) + "')"; });

  py::class_<FiniteSeq>(m, "FiniteSeq")
      .def(py::init([](const py::dict& terms, std::size_t rank, const py::handle& field) {
             return finite_from_dict(terms, rank, to_field(field));
           }),
           py::arg("terms"), py::arg("rank") = 1, py::arg("field") = "rational")
      .def_property_readonly("rank", &FiniteSeq::rank)
      .def_property_readonly("field", &FiniteSeq::field)
      .def("coeff", [](const FiniteSeq& w, const py::handle& a) { return w.coeff(to_exponent(a)); })
      .def("terms", [](const FiniteSeq& w) { return term_dict(w.terms()); })
      .def(py::self + py::self)
      .def(py::self == py::self)
      .def("to_poly", &to_poly)
      .def_static("from_poly", &to_finite_seq);

  py::class_<PeriodicSeq>(m, "PeriodicSeq")
      .def(py::init([](std::vector<std::int64_t> periods, const py::list& values, const py::handle& field) {
             const Field f = to_field(field);
             std::vector<FieldValue> vs;
             for (const auto& v : values) vs.push_back(to_value(v, f));
             return PeriodicSeq(std::move(periods), std::move(vs), f);
           }),
           py::arg("periods"), py::arg("values"), py::arg("field") = "rational")
      .def_property_readonly("rank", &PeriodicSeq::rank)
      .def_property_readonly("periods", &PeriodicSeq::periods)
      .def_property_readonly("field", &PeriodicSeq::field)
      .def("coeff", [](const PeriodicSeq& w, const py::handle& a) { return w.coeff(to_exponent(a)); })
      .def("values", [](const PeriodicSeq& w) {
        std::vector<std::string> out;
        for (const auto& v : w.values()) out.push_back(v.to_string());
        return out;
      })
      .def(py::self + py::self)
      .def(py::self == py::self);

  py::class_<System>(m, "System")
      .def_property_readonly("equations", &System::equations)
      .def_property_readonly("signals", &System::signals)
      .def_property_readonly("rank", &System::rank)
      .def_property_readonly("field", &System::field)
      .def("entry", [](const System& s, std::size_t i, std::size_t j) { return s.matrix()(i, j); })
      .def("to_json", &format_system);

  m.def("parse_poly",
        [](const std::string& text, std::size_t rank, const py::handle& field) {
          return parse_poly(text, rank, to_field(field));
        },
        py::arg("text"), py::arg("rank") = 1, py::arg("field") = "rational");
  m.def("format_poly", &format_poly);
  m.def("parse_system", [](const std::string& text) { return parse_system(text); });

  m.def("scalar_product", [](const LaurentPoly& d, const py::handle& w) { return scalar_product(d, to_sequence(w)); });
  m.def("shift", [](const LaurentPoly& d, const py::handle& w) { return from_sequence(shift(d, to_sequence(w))); });
  m.def("check_adjoint", [](const LaurentPoly& c, const LaurentPoly& d, const py::handle& w) {
    return check_adjoint(c, d, to_sequence(w));
  });
  m.def("periodize", &periodize, py::arg("seq"), py::arg("periods"));

  m.def("behavior_contains",
        [](const System& s, const py::handle& w) { return behavior_contains(s, to_seq_vector(w)); });
  m.def("periodic_system_matrix", [](const System& s, const std::vector<std::int64_t>& periods) {
    const DenseMatrix mat = periodic_system_matrix(s, periods);
    std::vector<std::vector<std::string>> rows(mat.rows());
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      for (const auto& v : mat.row(i)) rows[i].push_back(v.to_string());
    }
    return rows;
  });
  m.def("kernel_dimension", &kernel_dimension, py::arg("system"), py::arg("periods"));
  m.def("periodic_kernel_basis", [](const System& s, const std::vector<std::int64_t>& periods) {
    const KernelBasis k = periodic_kernel_basis(s, periods);
    py::list basis;
    for (const auto& b : k.basis) basis.append(py::cast(b.periodic()));
    return basis;
  });

  m.def("run_selftest",
        [](const py::handle& field, std::size_t trials, std::uint64_t seed) {
          py::list out;
          for (const auto& r : run_all_suites(to_field(field), trials, seed)) {
            py::dict d;
            d["name"] = r.name;
            d["trials"] = r.trials;
            d["failures"] = r.failures;
            d["counterexample"] = r.counterexample;
            out.append(d);
          }
          return out;
        },
        py::arg("field") = "rational", py::arg("trials") = 100, py::arg("seed") = 42);
}
