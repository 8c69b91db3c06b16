#pragma once

#include <array>
#include <string>
#include <vector>

#include "ivhinf/interval.hpp"
#include "ivhinf/poly.hpp"
#include "ivhinf/stability.hpp"

namespace ivhinf {

/// Index quadruple (i1 j1 i2 j2) selecting g_{i1 j1} and f_{i2 j2}.
struct VertexTuple {
  int i1 = 1;
  int j1 = 1;
  int i2 = 1;
  int j2 = 1;

  /// Parses a four-digit label such as "1212".
  static VertexTuple parse(const std::string& label);
  std::string label() const;

  friend bool operator==(const VertexTuple&, const VertexTuple&) = default;
};

/// All sixteen tuples, lexicographic.
const std::array<VertexTuple, 16>& all_tuples();

/// The twelve vertex polynomials whose stability certifies the whole complex
/// family: 1111 1212 2222 2121 1112 1222 2221 2111 1211 2212 2122 1121.
const std::array<VertexTuple, 12>& critical_tuples();

/// Value-set vertices when ω·arg(1 + δe^{jθ}) > 0, and when it is < 0.
const std::array<VertexTuple, 8>& ccw_rotation_tuples();
const std::array<VertexTuple, 8>& cw_rotation_tuples();

/// J(s) = g_{i1 j1}(s) + (1 + δ e^{jθ}) f_{i2 j2}(s). Throws DeltaRange
/// unless 0 < δ < 1.
ComplexPolynomial j_polynomial(const KharitonovSet& g_vertices, const KharitonovSet& f_vertices,
                               const VertexTuple& t, double delta, double theta);

struct PolygonVertex {
  Complex point;
  VertexTuple source;
};

/// W(jω) for the family g + (1 + δe^{jθ}) f: the convex hull of the sixteen
/// J(jω) values, listed clockwise.
struct ValueSetPolygon {
  std::vector<PolygonVertex> vertices;
  double omega = 0.0;
  double delta = 0.0;
  double theta = 0.0;
};

/// Tuples allowed on the hull at this (ω, δ, θ). On the boundary cases
/// ω = 0 or arg = 0 both predicted lists apply.
std::vector<VertexTuple> predicted_tuples(double omega, double delta, double theta);

/// Builds the hull and checks every hull vertex against
/// predicted_tuples(); throws HullMismatch when one lies farther than
/// 1e-9 (relative to the point scale) from the predicted polygon.
ValueSetPolygon octagon(const IntervalPolynomial& numerator, const IntervalPolynomial& denominator,
                        double delta, double theta, double omega);

struct OriginExclusion {
  bool excluded = false;
  /// Signed distance from the origin to the polygon, positive outside.
  double margin = 0.0;
};

inline constexpr double kExclusionMargin = 1e-12;

OriginExclusion origin_excluded(const ValueSetPolygon& polygon);

/// Signed distance from z to the convex polygon given clockwise (positive
/// outside). Handles points and segments.
double signed_distance(std::span<const Complex> polygon, Complex z);

/// All twelve critical J polynomials Hurwitz.
bool family_complex_stability(const IntervalPolynomial& numerator, const IntervalPolynomial& denominator,
                              double delta, double theta, double tol = kHurwitzTol);
bool family_complex_stability(const KharitonovSet& g_vertices, const KharitonovSet& f_vertices,
                              double delta, double theta, double tol = kHurwitzTol);

/// Radius beyond which no member of g + (1 + δe^{jθ}) f has roots, so the
/// value set cannot contain the origin for |ω| above it.
double family_cauchy_bound(const IntervalPolynomial& numerator, const IntervalPolynomial& denominator,
                           double delta);

/// Frequencies uniform in asinh(ω) over [−omega_max, omega_max].
std::vector<double> sweep_frequencies(double omega_max, int points);

struct SweepResult {
  bool excluded = false;
  bool anchor_stable = false;
  double min_margin = 0.0;
  double omega_at_min = 0.0;
};

/// Zero-exclusion check of the family on a frequency grid, anchored by the
/// stability of J1111. Throws InvalidArgument when omega_max is below
/// family_cauchy_bound().
SweepResult zero_exclusion_sweep(const IntervalPolynomial& numerator, const IntervalPolynomial& denominator,
                                 double delta, double theta, double omega_max, int points,
                                 double tol = kHurwitzTol);

}  // namespace ivhinf
