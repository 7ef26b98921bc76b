// Thin pybind11 layer. Structured values cross the boundary as JSON text in
// the same schemas the CLI prints; gtsing/__init__.py decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <string>

#include "gtsing/error.hpp"
#include "gtsing/expression.hpp"
#include "gtsing/serialize.hpp"
#include "gtsing/suites.hpp"

namespace py = pybind11;
using namespace gtsing;

namespace {

using Triple = std::array<int, 3>;

std::optional<Point> point_arg(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  json j;
  try {
    j = json::parse(*text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("point is not valid JSON: ") + e.what());
  }
  return point_from_json(j);
}

GeneratorId generator(int n, int r, int s) {
  if (r < 1 || s < 1 || r > n || s > n) throw DomainError("generator indices must lie in [1, " + std::to_string(n) + "]");
  return {r, s};
}

// Same fallbacks as the CLI: canonical point, then the classifier's witness.
SingularContext context(int n, const std::optional<std::string>& point, const std::optional<Triple>& singular) {
  std::optional<Point> p = point_arg(point);
  Triple kij{2, 1, 2};
  if (singular) {
    kij = *singular;
  } else if (p) {
    PointClass pc = classify_point(*p);
    if (pc.tag != PointClass::Tag::OneSingular) throw DomainError("the point is " + to_string(pc) + ", not 1-singular");
    kij = {pc.k, pc.i, pc.j};
  }
  if (!p) p = canonical_point(n, kij[0], kij[1], kij[2]);
  return SingularContext(*p, kij[0], kij[1], kij[2]);
}

int order(int n, const std::optional<std::string>& point) {
  std::optional<Point> p = point_arg(point);
  int m = p ? p->order() : n;
  if (m < 2 || m > kMaxOrder) throw DomainError("n must lie in [2, " + std::to_string(kMaxOrder) + "]");
  return m;
}

std::string run_suite(const std::string& name, int n, const std::optional<std::string>& point,
                      const std::optional<Triple>& singular, const std::optional<std::string>& convention) {
  if (convention && name != "homomorphism") throw DomainError("convention only applies to the homomorphism suite");
  SuiteReport r;
  if (name == "ring") {
    r = run_ring_suite(order(n, point));
  } else if (name == "homomorphism") {
    Convention conv = calibrated_convention();
    if (convention) conv = parse_convention(*convention);
    r = run_homomorphism_suite(order(n, point), conv);
  } else if (name == "singularity") {
    r = run_singularity_suite(context(n, point, singular));
  } else if (name == "module") {
    r = run_module_suite(context(n, point, singular));
  } else if (name == "appendix") {
    r = run_appendix_suite(context(n, point, singular));
  } else if (name == "generic") {
    std::optional<Point> p = point_arg(point);
    r = run_generic_suite(p ? *p : generic_point(n));
  } else {
    throw DomainError("unknown suite '" + name + "'");
  }
  return suite_report_to_json(r).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for 1-singular Gelfand-Tsetlin modules";

  // Translators run newest first, so the base class goes in before its subclasses.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PoleError>(m, "PoleError", PyExc_ZeroDivisionError);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);

  m.attr("max_order") = kMaxOrder;

  m.def("normalize", [](const std::string& expr, int n) { return to_string(parse_expression(expr, n)); }, py::arg("expr"),
        py::arg("n") = 0, "Canonical text of a rational function expression.");

  m.def("canonical_point", [](int n, int k, int i, int j) { return point_to_json(canonical_point(n, k, i, j)).dump(); },
        py::arg("n"), py::arg("k"), py::arg("i"), py::arg("j"));
  m.def("generic_point", [](int n) { return point_to_json(generic_point(n)).dump(); }, py::arg("n"));

  m.def("classify", [](const std::string& point) { return point_class_to_json(classify_point(*point_arg(point))).dump(); },
        py::arg("point"));

  m.def("phi", [](int n, int r, int s) { return ring_to_json(phi_general(n, generator(n, r, s))).dump(); }, py::arg("n"),
        py::arg("r"), py::arg("s"));
  m.def("phi_text", [](int n, int r, int s) { return to_string(phi_general(n, generator(n, r, s))); }, py::arg("n"), py::arg("r"),
        py::arg("s"));

  m.def(
      "act",
      [](int r, int s, const std::string& basis, int n, const std::optional<std::string>& point, const std::optional<Triple>& singular) {
        SingularContext ctx = context(order(n, point), point, singular);
        BasisVec b = parse_basis_spec(basis, ctx.order());
        validate_basis(ctx, b);
        return dist_to_json(act_lie(ctx, generator(ctx.order(), r, s), b)).dump();
      },
      py::arg("r"), py::arg("s"), py::arg("basis"), py::arg("n") = 3, py::arg("point") = py::none(), py::arg("singular") = py::none());

  m.def("verify", &run_suite, py::arg("suite"), py::arg("n") = 3, py::arg("point") = py::none(), py::arg("singular") = py::none(),
        py::arg("convention") = py::none());
}
