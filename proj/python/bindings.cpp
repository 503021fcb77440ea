#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "preproj/algebra.hpp"
#include "preproj/report.hpp"

namespace py = pybind11;
using namespace preproj;

namespace {

Presentation parse_with_field(const std::string& text, const std::optional<std::uint64_t>& p) {
  Presentation pres = parse_presentation(text);
  if (p) {
    if (!is_prime(*p)) throw std::invalid_argument("field characteristic must be prime");
    pres = with_field(pres, Field{*p});
  }
  return pres;
}

py::dict entries(const Report& r) {
  py::dict d;
  for (const auto& [k, v] : r.entries())
    if (!d.contains(k)) d[py::str(k)] = v;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Higher preprojective algebras of finite-dimensional path algebra quotients";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TruncationError>(m, "TruncationError", PyExc_RuntimeError);

  py::class_<Report>(m, "Report")
      .def_property_readonly("entries", &entries)
      .def("get", &Report::get)
      .def("text", &Report::text)
      .def("kv", &Report::kv)
      .def_property_readonly("status", [](const Report& r) { return static_cast<int>(r.status); })
      .def_property_readonly("presentation",
                             [](const Report& r) -> std::optional<std::string> {
                               if (!r.presentation()) return std::nullopt;
                               return print_presentation(*r.presentation());
                             })
      .def("__getitem__",
           [](const Report& r, const std::string& k) {
             for (const auto& [key, v] : r.entries())
               if (key == k) return v;
             throw py::key_error(k);
           })
      .def("__repr__", [](const Report& r) { return "<Report with " + std::to_string(r.entries().size()) + " entries>"; });

  m.def("normalize", [](const std::string& text) { return print_presentation(parse_presentation(text)); },
        "Canonical text form of a presentation.", py::arg("text"));

  m.def(
      "graded_dims",
      [](const std::string& text, int max_degree, std::optional<std::uint64_t> p) {
        GradedAlgebra A(parse_with_field(text, p), max_degree);
        std::vector<int> dims;
        for (int n = 0; n <= std::min(max_degree, A.computed_degree()); ++n) dims.push_back(A.dim(n));
        while (!dims.empty() && dims.back() == 0) dims.pop_back();
        return dims;
      },
      "Dimensions of the quotient algebra per path-length degree.", py::arg("text"), py::arg("max_degree") = 12,
      py::arg("p") = py::none());

  m.def("compute", [](const std::string& t, std::optional<std::uint64_t> p) { return compute_report(parse_with_field(t, p)); },
        py::arg("text"), py::arg("p") = py::none());
  m.def("dual", [](const std::string& t, std::optional<std::uint64_t> p) { return dual_report(parse_with_field(t, p)); },
        py::arg("text"), py::arg("p") = py::none());
  m.def(
      "jacobi",
      [](const std::string& t, int order, std::optional<std::uint64_t> p) { return jacobi_report(parse_with_field(t, p), order); },
      py::arg("text"), py::arg("order"), py::arg("p") = py::none());
  m.def(
      "verify_jacobi",
      [](const std::string& t, int bound, std::optional<std::uint64_t> p) {
        return verify_jacobi_report(parse_with_field(t, p), bound);
      },
      py::arg("text"), py::arg("bound") = 8, py::arg("p") = py::none());
  m.def(
      "classify",
      [](const std::string& t, int bound, int dim_cap, std::optional<std::uint64_t> p) {
        return classify_report(parse_with_field(t, p), bound, dim_cap);
      },
      py::arg("text"), py::arg("bound") = 8, py::arg("dim_cap") = 20000, py::arg("p") = py::none());
  m.def(
      "certify",
      [](const std::string& t, int bound, int window, std::optional<std::uint64_t> p) {
        return certify_report(parse_with_field(t, p), bound, window);
      },
      py::arg("text"), py::arg("bound") = 8, py::arg("window") = 3, py::arg("p") = py::none());
  m.def("typea", &typea_report, py::arg("d"), py::arg("s"), py::arg("expected_pi") = false);
  m.def(
      "resolve",
      [](const std::string& t, int steps, std::optional<std::string> vertex, bool left, bool over_pi, int bound,
         std::optional<std::uint64_t> p) { return resolve_report(parse_with_field(t, p), steps, vertex, left, over_pi, bound); },
      py::arg("text"), py::arg("steps") = 4, py::arg("vertex") = py::none(), py::arg("left") = false,
      py::arg("over_pi") = false, py::arg("bound") = 8, py::arg("p") = py::none());
}
