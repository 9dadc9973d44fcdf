#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permderiv/derivatives.hpp"
#include "permderiv/norms.hpp"
#include "permderiv/sym_tensor.hpp"

namespace py = pybind11;
using namespace permderiv;

namespace {

std::vector<std::vector<int>> as_lists(const std::vector<MultiIndex>& v) {
  std::vector<std::vector<int>> out;
  out.reserve(v.size());
  for (const auto& a : v) out.emplace_back(a.entries().begin(), a.entries().end());
  return out;
}

py::tuple sym_result(const SymMatrix& s) {
  return py::make_tuple(as_lists(s.basis().elements()), s.data());
}

Formula parse_formula(const std::string& name) { return formula_from_string(name); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Permanents, symmetric tensor powers and their derivatives";
  m.attr("__version__") = PERMDERIV_VERSION;

  static py::exception<GuardError> guard_error(m, "GuardError", PyExc_RuntimeError);
  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GuardError& e) {
      py::set_error(guard_error, e.what());
    } catch (const DomainError& e) {
      py::set_error(domain_error, e.what());
    }
  });

  m.def("enumerate_Q", [](int k, int n) { return as_lists(enumerate_Q(k, n)); }, py::arg("m"), py::arg("n"),
        "Strictly increasing sequences of length m from 1..n, lexicographic.");
  m.def("enumerate_G", [](int k, int n) { return as_lists(enumerate_G(k, n)); }, py::arg("k"), py::arg("n"),
        "Nondecreasing sequences of length k from 1..n, lexicographic.");
  m.def("multiplicity", [](std::vector<int> alpha, int n) { return multiplicity(MultiIndex(std::move(alpha), n)); },
        py::arg("alpha"), py::arg("n"));

  m.def("permanent", [](const Matrix& a) { return permanent(a); }, py::arg("a"));
  m.def("per_naive", [](const Matrix& a) { return per_naive(a); }, py::arg("a"));
  m.def("per_ryser", [](const Matrix& a, unsigned chunks) { return per_ryser(a, chunks); }, py::arg("a"),
        py::arg("chunks") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("padj", &padj, py::arg("a"));
  m.def("mixed_permanent", [](const std::vector<Matrix>& ts) { return mixed_permanent(ts); }, py::arg("ts"));

  m.def("sym_power", [](const Matrix& a, int k) { return sym_result(sym_power(a, k)); }, py::arg("a"),
        py::arg("k"), "Returns (basis, matrix).");
  m.def("mixed_sym_product", [](const std::vector<Matrix>& xs) { return sym_result(mixed_sym_product(xs)); },
        py::arg("xs"), "Returns (basis, matrix).");
  m.def(
      "tilde_compound",
      [](const Matrix& a, int order) {
        const auto c = tilde_compound(a, order);
        return py::make_tuple(as_lists(c.index), c.data);
      },
      py::arg("a"), py::arg("m"), "Returns (index, matrix) with (J,I)-entry per A(I|J).");
  m.def("tensor_power", [](const Matrix& a, int k) { return tensor_power(a, k); }, py::arg("a"), py::arg("k"));
  m.def("symmetrizer", [](int k, int n) { return symmetrizer(k, n); }, py::arg("k"), py::arg("n"));

  m.def(
      "dper",
      [](const Matrix& a, const std::vector<Matrix>& xs, const std::string& formula) {
        return std::get<Complex>(dper(parse_formula(formula), a, xs).value);
      },
      py::arg("a"), py::arg("xs"), py::arg("formula") = "columns",
      "m-th derivative of per at A in the directions xs; formula is one of "
      "jacobi, columns, laplace, mixed, trace, oracle.");
  m.def(
      "dsym_power",
      [](const Matrix& a, int k, const std::vector<Matrix>& xs) { return sym_result(dsym_power(a, k, xs)); },
      py::arg("a"), py::arg("k"), py::arg("xs"), "Returns (basis, matrix).");
  m.def(
      "dtensor_power", [](const Matrix& a, int k, const std::vector<Matrix>& xs) { return dtensor_power(a, k, xs); },
      py::arg("a"), py::arg("k"), py::arg("xs"));

  m.def("spectral_norm", &spectral_norm, py::arg("a"));
  m.def("trace_norm", &trace_norm, py::arg("a"));
  m.def("dsym_norm_exact", &dsym_norm_exact, py::arg("a"), py::arg("k"), py::arg("m"));
  m.def(
      "verify_norm_identity",
      [](const Matrix& a, int k, int order, int trials, std::uint64_t seed) {
        const auto r = verify_norm_identity(a, k, order, trials, seed);
        py::dict d;
        d["quantity"] = r.quantity;
        d["computed"] = r.computed;
        d["reference"] = r.reference;
        d["slack"] = r.slack;
        d["tolerance"] = r.tolerance;
        d["pass"] = r.pass;
        d["detail"] = r.detail;
        return d;
      },
      py::arg("a"), py::arg("k"), py::arg("m"), py::arg("trials") = 20, py::arg("seed") = 0);
}
