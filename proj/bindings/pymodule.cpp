#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mdzeta/cache.hpp"
#include "mdzeta/identity.hpp"
#include "mdzeta/numeric.hpp"
#include "mdzeta/shuffle.hpp"
#include "mdzeta/stuffle.hpp"

namespace py = pybind11;
using namespace mdzeta;

namespace {

std::vector<std::pair<std::string, std::string>> combo_terms(const LinearCombo& c) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto& [sym, coeff] : c.terms()) out.emplace_back(coeff.to_string(), to_string(sym));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "multiple Dedekind zeta values: exact shuffle/stuffle expansions and "
            "truncated-sum evaluation over quadratic fields";

  py::register_exception<Error>(m, "MdzetaError");

  py::enum_<Signature>(m, "Signature")
      .value("Real", Signature::Real)
      .value("Imaginary", Signature::Imaginary);

  py::class_<FieldSpec>(m, "FieldSpec")
      .def_readonly("d", &FieldSpec::d)
      .def_property_readonly("signature", [](const FieldSpec& f) { return f.signature; })
      .def_property_readonly("basis",
                             [](const FieldSpec& f) {
                               return f.basis == BasisKind::Sqrt ? "sqrt" : "half_trace";
                             })
      .def("__repr__", [](const FieldSpec& f) {
        return "FieldSpec(Q(sqrt(" + std::to_string(f.d) + ")))";
      });

  py::class_<FieldElement>(m, "FieldElement")
      .def_readonly("x", &FieldElement::x)
      .def_readonly("y", &FieldElement::y)
      .def("__add__", &add)
      .def("__sub__", &sub)
      .def("__neg__", &neg)
      .def("__mul__", &mul)
      .def("__eq__", [](const FieldElement& a, const FieldElement& b) { return a == b; })
      .def("conj", &galois_conj)
      .def("norm", &norm)
      .def("is_totally_positive", &is_totally_positive)
      .def("embed",
           [](const FieldElement& e, int precision) {
             EmbeddingPair p = embed(e, precision);
             return std::make_pair(p.a1, p.a2);
           },
           py::arg("precision") = 30)
      .def("__repr__", [](const FieldElement& e) {
        return "FieldElement(" + std::to_string(e.x) + " + " + std::to_string(e.y) + "*w)";
      });

  m.def("make_field", &make_field, py::arg("d"));
  m.def("make_element", &make_element, py::arg("field"), py::arg("x"), py::arg("y"));
  m.def("sqrt_decimal", &sqrt_decimal, py::arg("n"), py::arg("digits"));

  py::class_<Truncation>(m, "Truncation")
      .def_static("shell", &Truncation::shell)
      .def_static("radius", &Truncation::radius)
      .def_static("cutoff", &Truncation::cutoff)
      .def_readonly("value", &Truncation::value);

  py::class_<RealCone>(m, "RealCone")
      .def_readonly("mu", &RealCone::mu)
      .def_readonly("nu", &RealCone::nu);
  py::class_<UpperCone>(m, "UpperCone");
  py::class_<MzvDomain>(m, "MzvDomain").def(py::init<>());

  m.def("make_real_cone", &make_real_cone);
  m.def("make_upper_cone", &make_upper_cone);
  m.def("enumerate_real",
        [](const RealCone& cone, std::int64_t shell) {
          std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>> out;
          for (auto& ce : enumerate_real(cone, Truncation::shell(shell)))
            out.emplace_back(ce.element.x, ce.element.y, ce.m, ce.n);
          return out;
        },
        py::arg("cone"), py::arg("shell"));
  m.def("enumerate_cplus",
        [](const FieldSpec& field, std::int64_t radius) {
          std::vector<std::pair<std::int64_t, std::int64_t>> out;
          for (auto& e : enumerate_imaginary(field, Truncation::radius(radius)))
            out.emplace_back(e.x, e.y);
          return out;
        },
        py::arg("field"), py::arg("radius"));
  m.def("classify",
        [](const FieldSpec& field, const FieldElement& e) {
          switch (classify_imaginary(field, e)) {
            case Region::Plus: return "plus";
            case Region::Zero: return "zero";
            default: return "minus";
          }
        },
        py::arg("field"), py::arg("element"));

  py::class_<LinearCombo>(m, "LinearCombo")
      .def(py::init<>())
      .def("terms", &combo_terms)
      .def("coeff",
           [](const LinearCombo& c, const std::string& sym) {
             return c.coeff(parse_symbol(sym)).to_string();
           })
      .def("is_zero", &LinearCombo::is_zero)
      .def("__len__", &LinearCombo::size)
      .def("__eq__", [](const LinearCombo& a, const LinearCombo& b) { return a == b; })
      .def("__add__", [](const LinearCombo& a, const LinearCombo& b) { return a + b; })
      .def("__sub__", [](const LinearCombo& a, const LinearCombo& b) { return a - b; })
      .def("scaled", [](const LinearCombo& c, const std::string& f) {
        return c.scaled(Rational::parse(f));
      })
      .def("__str__", [](const LinearCombo& c) { return to_string(c); })
      .def("__repr__", [](const LinearCombo& c) { return "LinearCombo(" + to_string(c) + ")"; });

  m.def("parse_combo", [](const std::string& text) { return parse_combo(text); });
  m.def("canonical_symbol", [](const std::string& text) { return to_string(parse_symbol(text)); });

  m.def("integral_shuffle",
        [](std::pair<int, int> e1, std::pair<int, int> e2) { return integral_shuffle(e1, e2); },
        py::arg("e1"), py::arg("e2"));
  m.def("shuffle_diagram_count", [](std::pair<int, int> e1, std::pair<int, int> e2) {
    return integral_shuffle_diagrams(e1, e2).diagrams.size();
  });
  m.def("mzv_shuffle", [](const std::vector<int>& a, const std::vector<int>& b) {
    return mzv_shuffle(MzvSymbol{a}, MzvSymbol{b});
  });
  m.def("mzv_stuffle", [](const std::vector<int>& a, const std::vector<int>& b) {
    return mzv_stuffle(MzvSymbol{a}, MzvSymbol{b});
  });
  m.def("stuffle_real",
        [](std::pair<int, int> e1, std::pair<int, int> e2) { return stuffle_real(e1, e2); });
  m.def("stuffle_imaginary", [](std::pair<int, int> e1, std::pair<int, int> e2) {
    return stuffle_imaginary(MdzvSymbol::plain(e1.first, e1.second),
                             MdzvSymbol::plain(e2.first, e2.second));
  });
  m.def("lemma_rewrite", [](const LinearCombo& c) { return lemma_rewrite(c); });

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("value", &EvalResult::value)
      .def_readonly("tail", &EvalResult::tail_estimate)
      .def_readonly("term_count", &EvalResult::term_count)
      .def_readonly("warnings", &EvalResult::warnings);

  m.def("eval_symbol",
        [](const EvalDomain& domain, const std::string& sym, const Truncation& t) {
          return eval_symbol(domain, parse_symbol(sym), t);
        },
        py::arg("domain"), py::arg("symbol"), py::arg("truncation"));
  m.def("eval_combo",
        [](const EvalDomain& domain, const LinearCombo& combo, const Truncation& t) {
          return eval_combo(domain, combo, t);
        });
  m.def("eval_mzv", [](const std::vector<int>& e, std::int64_t cutoff) {
    return eval_mzv(MzvSymbol{e}, cutoff);
  });

  py::class_<Relation>(m, "Relation")
      .def_property_readonly("combo", [](const Relation& r) { return r.combo; })
      .def_readonly("provenance", &Relation::provenance);

  m.def("derive_relation",
        [](Signature s, std::pair<int, int> e1, std::pair<int, int> e2) {
          return derive_relation(s, e1, e2);
        });
  m.def("derive_mzv_relation", [](const std::vector<int>& a, const std::vector<int>& b) {
    return derive_mzv_relation(MzvSymbol{a}, MzvSymbol{b});
  });
  m.def("compare_with_printed", [](const Relation& r) {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (auto& d : compare_with_printed(r))
      out.emplace_back(to_string(d.symbol), d.engine.to_string(), d.printed.to_string());
    return out;
  });

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("residuals", &VerificationReport::residuals)
      .def_readonly("printed_residuals", &VerificationReport::printed_residuals)
      .def_readonly("budget", &VerificationReport::budget)
      .def_readonly("verdict", &VerificationReport::verdict)
      .def("to_json", [](const VerificationReport& r) { return to_json(r); })
      .def("__str__", [](const VerificationReport& r) { return to_text(r); });

  m.def("verify_numeric",
        [](const Relation& r, const EvalDomain& domain, const Truncation& t, double floor_tol) {
          return verify_numeric(r, domain, t, floor_tol);
        },
        py::arg("relation"), py::arg("domain"), py::arg("truncation"),
        py::arg("floor_tol") = 1e-9);
}
