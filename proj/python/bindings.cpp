#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cobord/cli.hpp"
#include "cobord/cobordism.hpp"
#include "cobord/genera.hpp"

namespace py = pybind11;
using namespace cobord;

namespace {

// Rationals cross the boundary as "num/den" strings; the Python layer turns them into Fractions.
std::vector<std::string> strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<std::string> strings(const Polynomial& p) {
  std::vector<std::string> out;
  for (int i = 0; i <= p.degree(); ++i) out.push_back(to_string(p.coefficient(static_cast<std::size_t>(i))));
  return out;
}

ManifoldModel model(const std::string& descriptor) { return parse_manifold(descriptor).model; }

Functional functional(const std::string& expr, int dim, int q_order) {
  return resolve(parse_functional(expr, dim), q_order < 0 ? dim / 4 : q_order);
}

py::dict evaluation_dict(const FamilyEvaluation& e) {
  py::dict d;
  d["family"] = e.family;
  d["parameterization"] = e.parameterization;
  d["polynomial"] = strings(e.polynomial);
  d["text"] = e.polynomial.to_string("c");
  return d;
}

}  // namespace

PYBIND11_MODULE(_cobord, m) {
  m.doc() = "Exact characteristic numbers, genera and rational cobordism computations";

  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("dimension", [](const std::string& d) { return model(d).real_dimension(); }, py::arg("manifold"));

  m.def(
      "pontryagin_numbers",
      [](const std::string& d) {
        std::map<std::string, std::string> out;
        for (const auto& [part, value] : pontryagin_numbers(model(d)).values) out[part.key()] = to_string(value);
        return out;
      },
      py::arg("manifold"));

  m.def("signature", [](const std::string& d) { return to_string(signature(model(d))); }, py::arg("manifold"));
  m.def("ahat", [](const std::string& d) { return to_string(ahat(model(d))); }, py::arg("manifold"));
  m.def(
      "twisted_ahat_tangent", [](const std::string& d) { return to_string(twisted_ahat_tangent(model(d))); },
      py::arg("manifold"));
  m.def(
      "elliptic_q_coefficients",
      [](const std::string& d, int order) {
        const ManifoldModel mm = model(d);
        return strings(elliptic_q_coefficients(mm, order < 0 ? mm.real_dimension() / 4 : order));
      },
      py::arg("manifold"), py::arg("q_order") = -1);
  m.def("is_spin", [](const std::string& d) { return is_spin(model(d)); }, py::arg("manifold"));

  m.def(
      "elliptic_span",
      [](int dim, int q_order) {
        const EllipticSpan span = elliptic_span(dim, q_order < 0 ? dim / 4 : q_order);
        std::vector<std::string> functionals;
        for (const auto& f : span.functionals) functionals.push_back(f.to_string());
        return std::make_pair(functionals, span.rank);
      },
      py::arg("dim"), py::arg("q_order") = -1);

  m.def(
      "resolve_functional",
      [](const std::string& expr, int dim) {
        std::map<std::string, std::string> out;
        for (const auto& [part, value] : functional(expr, dim, -1).coefficients) out[part.key()] = to_string(value);
        return out;
      },
      py::arg("expr"), py::arg("dim"));

  m.def(
      "span_membership",
      [](const std::string& expr, int dim, int q_order) {
        const FunctionalExpr parsed = parse_functional(expr, dim);
        const int order = std::max(q_order < 0 ? dim / 4 : q_order, parsed.max_elliptic_index());
        return span_membership(resolve(parsed, order), elliptic_span(dim, order).functionals);
      },
      py::arg("expr"), py::arg("dim"), py::arg("q_order") = -1);

  m.def(
      "family_polynomial",
      [](const std::string& family, const std::string& expr) {
        const FamilySpec fam = family_by_name(family);
        return strings(family_polynomial(fam, functional(expr, fam.dimension, -1)));
      },
      py::arg("family"), py::arg("expr"));

  m.def(
      "unbounded_verdict",
      [](const std::string& expr, int dim) {
        const Verdict v = unbounded_verdict(functional(expr, dim, -1), designated_families(dim));
        py::dict d;
        d["unbounded"] = v.unbounded;
        d["witness"] = v.witness ? py::object(evaluation_dict(*v.witness)) : py::none();
        py::list evaluations;
        for (const auto& e : v.evaluations) evaluations.append(evaluation_dict(e));
        d["evaluations"] = evaluations;
        return d;
      },
      py::arg("expr"), py::arg("dim"));

  m.def(
      "distinct_cobordism_types",
      [](const std::string& family, const std::vector<long>& params) {
        const DistinctnessCertificate cert = distinct_cobordism_types(family_by_name(family), params);
        py::list pairs;
        for (const auto& s : cert.pairs)
          pairs.append(py::make_tuple(s.first, s.second,
                                      s.separator ? py::object(py::str(s.separator->key())) : py::none()));
        return py::make_tuple(cert.distinct, pairs);
      },
      py::arg("family"), py::arg("params"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
