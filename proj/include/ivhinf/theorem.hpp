#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ivhinf/hinf.hpp"
#include "ivhinf/interval.hpp"
#include "ivhinf/valueset.hpp"

namespace ivhinf {

struct AnalysisOptions {
  double hurwitz_tol = kHurwitzTol;
  int theta_points = kDefaultThetaPoints;
  int oracle_samples = 2000;
  std::uint64_t seed = 0;
  double bisection_tol = 1e-4;
  /// Skip the θ-grid bisection cross-check (it dominates the runtime).
  bool run_bisection = true;
};

/// Plant family g/f: numerator K_g of degree m, denominator K_f of degree n.
struct AnalysisProblem {
  IntervalPolynomial numerator;
  IntervalPolynomial denominator;
  AnalysisOptions options;

  /// Throws DegreeOrder unless m < n and InvalidArgument unless the leading
  /// denominator interval is strictly positive.
  void validate() const;
};

/// True iff the four matched sums g_ij + f_ij are Hurwitz; these coincide
/// with the Kharitonov vertices of K_g + K_f, whose stability covers every
/// closed loop f + g in the family.
bool closed_loop_family_stable(const AnalysisProblem& prob);

/// The twelve sensitivity vertices, in the order they are reported.
const std::array<VertexTuple, 12>& twelve_tuples();
/// The four combinations left out: 1122 2211 1221 2112.
const std::array<VertexTuple, 4>& excluded_tuples();

struct TupleNorm {
  VertexTuple tuple;
  NormResult norm;
};

struct VertexMaximum {
  double worst_norm = 0.0;
  VertexTuple argmax;
  std::vector<TupleNorm> per_tuple;
};

/// ‖f_{i2j2} / (f_{i2j2} + g_{i1j1})‖∞ for one tuple. Throws
/// TheoremPreconditionGap when that closed loop is not Hurwitz.
NormResult vertex_sensitivity_norm(const KharitonovSet& g_vertices, const KharitonovSet& f_vertices,
                                   const VertexTuple& t);

/// Max over the twelve tuples; ties keep the earlier tuple. Throws
/// UnstableFamily when closed_loop_family_stable() fails.
VertexMaximum max_sensitivity_twelve(const AnalysisProblem& prob);
/// Same over all sixteen tuples, lexicographic order.
VertexMaximum max_sensitivity_sixteen(const AnalysisProblem& prob);

struct OracleResult {
  double max_norm = 0.0;
  /// Smallest norm seen; bounded below by 1 for every valid sensitivity.
  double min_norm = 0.0;
  RealPolynomial argmax_numerator;
  RealPolynomial argmax_denominator;
  /// "vertex 1212", "edge-midpoint g12-g22/f11" or "sample 17".
  std::string argmax_origin;
  int evaluated = 0;
  /// Draws whose closed loop came within 1e-9 of the imaginary axis.
  int skipped = 0;
  int injected = 0;
};

/// Worst ‖S‖∞ over the sixteen vertex pairs, the Kharitonov edge-midpoint
/// pairs and `samples` uniform draws from the coefficient boxes.
OracleResult monte_carlo_oracle(const AnalysisProblem& prob, int samples, std::uint64_t seed);

struct AnalysisReport {
  bool family_stable = false;
  std::optional<VertexMaximum> twelve;
  std::optional<VertexMaximum> sixteen;
  std::optional<OracleResult> oracle;
  std::optional<double> bisection_norm;
  AnalysisOptions options;
};

/// Full pipeline. An unstable family yields a report with only the
/// stability verdict filled in.
AnalysisReport analyze(const AnalysisProblem& prob);

}  // namespace ivhinf
