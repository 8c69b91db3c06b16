#include "ivhinf/theorem.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "ivhinf/error.hpp"

namespace ivhinf {

void AnalysisProblem::validate() const {
  if (numerator.degree() >= denominator.degree()) {
    throw Error(ErrorKind::DegreeOrder, "numerator family degree must be below denominator degree");
  }
  if (!(denominator.lower(denominator.degree()) > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "leading denominator interval must be strictly positive");
  }
  if (options.theta_points < 1) throw Error(ErrorKind::InvalidArgument, "theta_points must be positive");
  if (options.oracle_samples < 0) throw Error(ErrorKind::InvalidArgument, "oracle_samples must be >= 0");
  if (!(options.hurwitz_tol >= 0.0)) throw Error(ErrorKind::InvalidArgument, "hurwitz_tol must be >= 0");
  if (!(options.bisection_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "bisection_tol must be > 0");
}

bool closed_loop_family_stable(const AnalysisProblem& prob) {
  prob.validate();
  const KharitonovSet gv = kharitonov_vertices(prob.numerator);
  const KharitonovSet fv = kharitonov_vertices(prob.denominator);
  const KharitonovSet sum = kharitonov_vertices(sum_family(prob.numerator, prob.denominator));
  bool stable = true;
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const RealPolynomial matched = add(gv.at(i, j), fv.at(i, j));
      if (!(matched == sum.at(i, j))) {
        throw std::logic_error("matched vertex sum differs from the sum family's Kharitonov vertex");
      }
      stable = stable && is_hurwitz_real(matched).is_hurwitz;
    }
  }
  return stable;
}

const std::array<VertexTuple, 12>& twelve_tuples() { return critical_tuples(); }

const std::array<VertexTuple, 4>& excluded_tuples() {
  static const std::array<VertexTuple, 4> tuples{VertexTuple::parse("1122"), VertexTuple::parse("2211"),
                                                 VertexTuple::parse("1221"), VertexTuple::parse("2112")};
  return tuples;
}

NormResult vertex_sensitivity_norm(const KharitonovSet& g_vertices, const KharitonovSet& f_vertices,
                                   const VertexTuple& t) {
  const RealPolynomial& g = g_vertices.at(t.i1, t.j1);
  const RealPolynomial& f = f_vertices.at(t.i2, t.j2);
  try {
    return hinf_norm_exact(sensitivity(g, f));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnstableClosedLoop) throw;
    throw Error(ErrorKind::TheoremPreconditionGap,
                "closed loop f" + t.label().substr(2) + " + g" + t.label().substr(0, 2) + " is not Hurwitz");
  }
}

namespace {

template <std::size_t N>
VertexMaximum vertex_maximum(const AnalysisProblem& prob, const std::array<VertexTuple, N>& tuples) {
  if (!closed_loop_family_stable(prob)) {
    throw Error(ErrorKind::UnstableFamily, "matched Kharitonov vertex sums are not all Hurwitz");
  }
  const KharitonovSet gv = kharitonov_vertices(prob.numerator);
  const KharitonovSet fv = kharitonov_vertices(prob.denominator);
  VertexMaximum out;
  out.worst_norm = -1.0;
  for (const auto& t : tuples) {
    out.per_tuple.push_back({t, vertex_sensitivity_norm(gv, fv, t)});
    if (out.per_tuple.back().norm.value > out.worst_norm) {
      out.worst_norm = out.per_tuple.back().norm.value;
      out.argmax = t;
    }
  }
  return out;
}

RealPolynomial midpoint(const RealPolynomial& a, const RealPolynomial& b) { return scale(add(a, b), 0.5); }

}  // namespace

VertexMaximum max_sensitivity_twelve(const AnalysisProblem& prob) { return vertex_maximum(prob, twelve_tuples()); }

VertexMaximum max_sensitivity_sixteen(const AnalysisProblem& prob) { return vertex_maximum(prob, all_tuples()); }

OracleResult monte_carlo_oracle(const AnalysisProblem& prob, int samples, std::uint64_t seed) {
  if (!closed_loop_family_stable(prob)) {
    throw Error(ErrorKind::UnstableFamily, "matched Kharitonov vertex sums are not all Hurwitz");
  }
  if (samples < 0) throw Error(ErrorKind::InvalidArgument, "sample count must be >= 0");
  OracleResult out;
  out.max_norm = -1.0;
  out.min_norm = std::numeric_limits<double>::infinity();

  auto consider = [&](const RealPolynomial& g, const RealPolynomial& f, const std::string& origin) {
    const RealPolynomial closed = add(f, g);
    if (g.is_zero() || closed.degree() < 1 ||
        !is_hurwitz_complex(ComplexPolynomial(closed), 1e-9).is_hurwitz) {
      ++out.skipped;
      return;
    }
    double value;
    try {
      value = hinf_norm_exact(sensitivity(g, f)).value;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnstableClosedLoop) throw;
      ++out.skipped;
      return;
    }
    ++out.evaluated;
    out.min_norm = std::min(out.min_norm, value);
    if (value > out.max_norm) {
      out.max_norm = value;
      out.argmax_numerator = g;
      out.argmax_denominator = f;
      out.argmax_origin = origin;
    }
  };

  const KharitonovSet gv = kharitonov_vertices(prob.numerator);
  const KharitonovSet fv = kharitonov_vertices(prob.denominator);
  for (const auto& t : all_tuples()) {
    consider(gv.at(t.i1, t.j1), fv.at(t.i2, t.j2), "vertex " + t.label());
    ++out.injected;
  }

  // Edges of the Kharitonov rectangle: 11-12, 12-22, 22-21, 21-11.
  static constexpr int kCycle[4][2] = {{1, 1}, {1, 2}, {2, 2}, {2, 1}};
  auto name = [](char family, const int* ij) {
    return std::string(1, family) + static_cast<char>('0' + ij[0]) + static_cast<char>('0' + ij[1]);
  };
  for (int e = 0; e < 4; ++e) {
    const int* a = kCycle[e];
    const int* b = kCycle[(e + 1) % 4];
    const RealPolynomial g_mid = midpoint(gv.at(a[0], a[1]), gv.at(b[0], b[1]));
    const RealPolynomial f_mid = midpoint(fv.at(a[0], a[1]), fv.at(b[0], b[1]));
    for (const auto& v : kCycle) {
      consider(gv.at(v[0], v[1]), f_mid,
               "edge-midpoint " + name('g', v) + "/" + name('f', a) + "-" + name('f', b));
      consider(g_mid, fv.at(v[0], v[1]),
               "edge-midpoint " + name('g', a) + "-" + name('g', b) + "/" + name('f', v));
      out.injected += 2;
    }
  }

  std::mt19937_64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    RealPolynomial g = sample(prob.numerator, rng);
    RealPolynomial f = sample(prob.denominator, rng);
    consider(g, f, "sample " + std::to_string(k));
  }
  return out;
}

AnalysisReport analyze(const AnalysisProblem& prob) {
  AnalysisReport report;
  report.options = prob.options;
  report.family_stable = closed_loop_family_stable(prob);
  if (!report.family_stable) return report;
  report.twelve = max_sensitivity_twelve(prob);
  report.sixteen = max_sensitivity_sixteen(prob);
  report.oracle = monte_carlo_oracle(prob, prob.options.oracle_samples, prob.options.seed);
  if (prob.options.run_bisection) {
    BisectionOptions b;
    b.tol = prob.options.bisection_tol;
    b.theta_count = prob.options.theta_points;
    b.hurwitz_tol = prob.options.hurwitz_tol;
    report.bisection_norm = family_norm_bisection(prob.numerator, prob.denominator, b);
  }
  return report;
}

}  // namespace ivhinf
