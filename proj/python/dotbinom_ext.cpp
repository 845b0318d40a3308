#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dotbinom/cli.hpp"
#include "dotbinom/closed.hpp"
#include "dotbinom/error.hpp"
#include "dotbinom/polyq.hpp"

namespace py = pybind11;
using namespace dotbinom;

namespace {

py::int_ to_py(const BigInt& v) {
  const std::string text = v.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dot-binomial coefficients over finite fields of odd characteristic.";

  py::register_exception<Error>(m, "DotbinomError", PyExc_ValueError);

  m.def(
      "bracket",
      [](std::uint64_t q, int n, const std::string& flavor) {
        return to_py(closed::bracket(q, n, closed::parse_flavor(flavor)));
      },
      py::arg("q"), py::arg("n"), py::arg("flavor") = "SpacelikeInDot");
  m.def(
      "dot_binom", [](std::uint64_t q, int n, int k) { return to_py(closed::dot_binom(q, n, k)); }, py::arg("q"),
      py::arg("n"), py::arg("k"));
  m.def(
      "dot_binom_variant",
      [](std::uint64_t q, int n, int k, const std::string& variant) {
        return to_py(closed::dot_binom_variant(q, n, k, closed::parse_variant(variant)));
      },
      py::arg("q"), py::arg("n"), py::arg("k"), py::arg("variant") = "DD");
  m.def(
      "pascal_row",
      [](std::uint64_t q, int n) {
        py::list out;
        for (const auto& v : closed::pascal_row(q, n)) out.append(to_py(v));
        return out;
      },
      py::arg("q"), py::arg("n"));
  m.def(
      "group_order", [](std::uint64_t q, int n) { return to_py(closed::group_order(q, n)); }, py::arg("q"),
      py::arg("n"));
  m.def(
      "poly",
      [](int cls, int n, int k) { return polyq::dot_binom_poly({cls, n, k}).to_string(); }, py::arg("q_class"),
      py::arg("n"), py::arg("k"));
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
