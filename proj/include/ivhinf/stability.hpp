#pragma once

#include <optional>
#include <vector>

#include "ivhinf/poly.hpp"

namespace ivhinf {

/// Default dead zone for root-based Hurwitz verdicts.
inline constexpr double kHurwitzTol = 1e-9;

enum class StabilityMethod { Routh, Roots };

struct StabilityVerdict {
  bool is_hurwitz = false;
  /// −max Re(root); only set for root-based verdicts.
  std::optional<double> margin;
  StabilityMethod method = StabilityMethod::Routh;
};

struct RootSet {
  std::vector<Complex> roots;
  /// Largest normalized backward error max |p(z)| / Σ|c_i||z|^i.
  double residual = 0.0;
};

/// Routh array test. Any zero or negative entry in the first column (after
/// making the leading coefficient positive) means "not Hurwitz". Constant
/// nonzero polynomials have no roots and are reported Hurwitz. Throws
/// ZeroPolynomial for p = 0.
StabilityVerdict is_hurwitz_real(const RealPolynomial& p);

struct RootFinderOptions {
  int max_iterations = 200;
  /// Stop once every correction is below this multiple of the Cauchy bound.
  double step_tol = 1e-13;
  /// Largest accepted backward error.
  double residual_tol = 1e-9;
  /// |c_n| below this multiple of max |c_i| is treated as degenerate.
  double degenerate_leading = 1e-14;
};

/// All roots by Aberth–Ehrlich simultaneous iteration started on a
/// perturbed circle of Cauchy-bound radius, with one restart on a rotated
/// circle. Throws DegenerateLeading, ZeroPolynomial or NoConvergence.
RootSet roots_complex(const ComplexPolynomial& p, const RootFinderOptions& opts = {});
RootSet roots_real(const RealPolynomial& p, const RootFinderOptions& opts = {});

/// Hurwitz iff max Re(root) < −tol.
StabilityVerdict is_hurwitz_complex(const ComplexPolynomial& p, double tol = kHurwitzTol);

}  // namespace ivhinf
