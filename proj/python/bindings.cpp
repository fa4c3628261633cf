#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "jcsum/asymptotics.hpp"
#include "jcsum/error.hpp"
#include "jcsum/exact.hpp"
#include "jcsum/hankel.hpp"
#include "jcsum/lambert.hpp"
#include "jcsum/saddle.hpp"

namespace py = pybind11;
using namespace jcsum;

namespace {

std::vector<BranchIndex> to_branches(const std::vector<int>& ns) {
  std::vector<BranchIndex> out;
  for (int n : ns) out.push_back(BranchIndex::for_revival(n));
  return out;
}

RevivalMode mode_of(const std::string& s) {
  if (s == "full") return RevivalMode::full;
  if (s == "simplified") return RevivalMode::simplified;
  throw InvalidParameter("revival mode must be 'full' or 'simplified'");
}

}  // namespace

PYBIND11_MODULE(_jcsum, m) {
  m.doc() = "Atomic inversion of the Jaynes-Cummings model: exact sum, contour quadrature, saddle points";
  m.attr("__version__") = JCSUM_VERSION;

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<NumericalFailure>(m, "NumericalFailure", base.ptr());

  m.def(
      "inversion_exact",
      [](double alpha, double nu, py::array_t<double> t) {
        const auto dist = make_poisson(alpha);
        const auto p = ModelParams::from_nu(alpha, nu);
        return py::vectorize([&](double x) { return inversion_exact(dist, p, x); })(t);
      },
      py::arg("alpha"), py::arg("nu"), py::arg("t"), "Truncated exact sum at lambda*t values t.");

  m.def("static_part", [](double alpha, double nu) { return static_part(alpha, nu * alpha * alpha).value; },
        py::arg("alpha"), py::arg("nu"));

  m.def(
      "inversion_contour",
      [](double alpha, double nu, py::array_t<double> t) {
        const auto p = ModelParams::from_nu(alpha, nu);
        return py::vectorize([&](double x) {
          return nu == 0.0 ? inversion_contour_resonant(alpha, x).value : inversion_contour_detuned(p, x).value;
        })(t);
      },
      py::arg("alpha"), py::arg("nu"), py::arg("t"),
      "Hankel-contour quadrature; for nu > 0 the time-dependent part only.");

  m.def(
      "inversion_saddle",
      [](double alpha, double nu, const std::vector<double>& t, std::vector<int> branches, const std::string& policy) {
        const auto p = ModelParams::from_nu(alpha, nu);
        std::vector<BranchIndex> bs;
        if (branches.empty()) {
          double t_max = 0.0;
          for (double x : t) t_max = std::max(t_max, x);
          bs = default_branches(p, t_max);
        } else {
          bs = to_branches(branches);
        }
        SaddleOptions o;
        if (policy == "max") o.policy = SuperpositionPolicy::max;
        else if (policy != "sum") throw InvalidParameter("policy must be 'sum' or 'max'");
        std::vector<double> out;
        for (const auto& r : inversion_saddle_grid(p, t, bs, o)) out.push_back(r.total);
        return out;
      },
      py::arg("alpha"), py::arg("nu"), py::arg("t"), py::arg("branches") = std::vector<int>{},
      py::arg("policy") = "sum", "Saddle-point sum over revival branches; t must be increasing.");

  m.def(
      "collapse",
      [](double alpha, double nu, py::array_t<double> t) {
        return py::vectorize([&](double x) { return collapse_detuned(alpha, nu, x); })(t);
      },
      py::arg("alpha"), py::arg("nu"), py::arg("t"));

  m.def(
      "revival",
      [](double alpha, double nu, int n, py::array_t<double> t, const std::string& mode) {
        const RevivalMode md = mode_of(mode);
        return py::vectorize([&](double x) { return revival_detuned(alpha, nu, n, x, md); })(t);
      },
      py::arg("alpha"), py::arg("nu"), py::arg("n"), py::arg("t"), py::arg("mode") = "simplified");

  m.def("lambert_w", &lambert_w, py::arg("k"), py::arg("u"));
  m.def(
      "generalized_lambert",
      [](cplx u, double nu, int revival_index) {
        return generalized_lambert({u, nu, BranchIndex::for_revival(revival_index)});
      },
      py::arg("u"), py::arg("nu"), py::arg("revival_index") = 0);
  m.def("critical_detuning", &critical_detuning);
  m.def("revival_times", &revival_times, py::arg("alpha"), py::arg("nu"), py::arg("n_max"));
  m.def(
      "crossing_times",
      [](double alpha, int n_max) {
        std::vector<std::pair<double, double>> out;
        for (const auto& c : crossing_times(alpha, n_max)) out.emplace_back(c.formula, c.refined);
        return out;
      },
      py::arg("alpha"), py::arg("n_max"), "(formula, refined) pairs in lambda*t.");
}
