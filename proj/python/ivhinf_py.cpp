#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ivhinf/error.hpp"
#include "ivhinf/io.hpp"
#include "ivhinf/theorem.hpp"

namespace py = pybind11;
using namespace ivhinf;

namespace {

std::vector<double> coeffs(const RealPolynomial& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

py::dict norm_dict(const NormResult& n) {
  py::dict d;
  d["value"] = n.value;
  d["attained_at"] = n.at_infinity ? py::object(py::none()) : py::object(py::float_(n.attained_at));
  d["at_infinity"] = n.at_infinity;
  d["limit"] = n.limit;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Worst-case sensitivity H-infinity norms of interval feedback systems";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<IntervalPolynomial>(m, "IntervalPolynomial")
      .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("lower"), py::arg("upper"))
      .def_property_readonly("lower", [](const IntervalPolynomial& k) { return k.lower(); })
      .def_property_readonly("upper", [](const IntervalPolynomial& k) { return k.upper(); })
      .def_property_readonly("degree", &IntervalPolynomial::degree)
      .def("__repr__", [](const IntervalPolynomial& k) {
        return "<IntervalPolynomial degree " + std::to_string(k.degree()) + ">";
      });

  m.def(
      "kharitonov_vertices",
      [](const IntervalPolynomial& k) {
        const KharitonovSet v = kharitonov_vertices(k);
        py::dict d;
        d["11"] = coeffs(v.p11);
        d["12"] = coeffs(v.p12);
        d["21"] = coeffs(v.p21);
        d["22"] = coeffs(v.p22);
        return d;
      },
      py::arg("family"), "The four Kharitonov vertices keyed '11', '12', '21', '22'.");

  m.def(
      "is_hurwitz", [](std::vector<double> c) { return is_hurwitz_real(RealPolynomial(std::move(c))).is_hurwitz; },
      py::arg("coeffs"), "Routh test; coefficients ascending by power.");

  m.def(
      "roots", [](std::vector<Complex> c) { return roots_complex(ComplexPolynomial(std::move(c))).roots; },
      py::arg("coeffs"));

  m.def(
      "hinf_norm",
      [](std::vector<double> num, std::vector<double> den) {
        return norm_dict(hinf_norm_exact(RationalFunction(RealPolynomial(std::move(num)), RealPolynomial(std::move(den)))));
      },
      py::arg("num"), py::arg("den"), "Exact H-infinity norm of num/den.");

  m.def(
      "sensitivity_norm",
      [](std::vector<double> g, std::vector<double> f) {
        return norm_dict(hinf_norm_exact(sensitivity(RealPolynomial(std::move(g)), RealPolynomial(std::move(f)))));
      },
      py::arg("g"), py::arg("f"), "Norm of f / (f + g).");

  m.def(
      "check_lemma23",
      [](std::vector<double> g, std::vector<double> f, double gamma, int theta_count) {
        return check_lemma23(RealPolynomial(std::move(g)), RealPolynomial(std::move(f)), gamma, theta_count);
      },
      py::arg("g"), py::arg("f"), py::arg("gamma"), py::arg("theta_count") = kDefaultThetaPoints);

  m.def(
      "octagon",
      [](const IntervalPolynomial& num, const IntervalPolynomial& den, double delta, double theta, double omega) {
        std::vector<std::pair<Complex, std::string>> out;
        for (const auto& v : octagon(num, den, delta, theta, omega).vertices) out.emplace_back(v.point, v.source.label());
        return out;
      },
      py::arg("numerator"), py::arg("denominator"), py::arg("delta"), py::arg("theta"), py::arg("omega"),
      "Clockwise value-set vertices with their J labels.");

  m.def(
      "family_complex_stability",
      [](const IntervalPolynomial& num, const IntervalPolynomial& den, double delta, double theta) {
        return family_complex_stability(num, den, delta, theta);
      },
      py::arg("numerator"), py::arg("denominator"), py::arg("delta"), py::arg("theta"));

  m.def(
      "twelve_tuples",
      [] {
        std::vector<std::string> out;
        for (const auto& t : twelve_tuples()) out.push_back(t.label());
        return out;
      });

  m.def(
      "analyze_json",
      [](const std::string& problem_text, bool run_bisection) {
        ProblemFile pf = parse_problem(problem_text);
        pf.problem.options.run_bisection = run_bisection;
        return report_to_json(pf.problem, analyze(pf.problem)).dump();
      },
      py::arg("problem_text"), py::arg("run_bisection") = true,
      "Run the full analysis on a problem document and return the report as JSON text.");

#ifdef IVHINF_VERSION
  m.attr("__version__") = IVHINF_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
