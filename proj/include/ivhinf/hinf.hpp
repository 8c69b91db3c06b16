#pragma once

#include <vector>

#include "ivhinf/interval.hpp"
#include "ivhinf/poly.hpp"
#include "ivhinf/stability.hpp"

namespace ivhinf {

/// num(s) / den(s) with deg(num) <= deg(den) and den != 0.
class RationalFunction {
 public:
  RationalFunction(RealPolynomial num, RealPolynomial den);

  const RealPolynomial& num() const { return num_; }
  const RealPolynomial& den() const { return den_; }
  Complex eval_at_jomega(double omega) const;
  /// lim |S(jω)| as ω → ∞.
  double limit_at_infinity() const;

 private:
  RealPolynomial num_;
  RealPolynomial den_;
};

struct FrequencyMagnitude {
  double omega = 0.0;
  double magnitude = 0.0;
};

struct NormResult {
  double value = 0.0;
  /// Frequency of the peak; meaningless when at_infinity is set.
  double attained_at = 0.0;
  /// The supremum is the ω → ∞ limit and is not reached at finite ω.
  bool at_infinity = false;
  /// ω = 0 followed by the stationary points, ascending in ω.
  std::vector<FrequencyMagnitude> candidates;
  double limit = 0.0;
};

/// S = f / (f + g) for the plant g / f under unity negative feedback.
/// Throws DegreeOrder unless deg g < deg f, InvalidArgument for g = 0 and
/// UnstableClosedLoop when f + g fails the Routh test.
RationalFunction sensitivity(const RealPolynomial& g, const RealPolynomial& f);

/// Supremum of |S(jω)| from the stationary points of |num|²/|den|² in
/// x = ω², plus x = 0 and the x → ∞ limit. Ties go to the smallest ω.
NormResult hinf_norm_exact(const RationalFunction& s);

/// Lower bound from a log-spaced grid of `points` frequencies on
/// [omega_max·1e-9, omega_max] together with ω = 0 and the limit.
double hinf_norm_grid(const RationalFunction& s, double omega_max, int points);

/// g + (1 + δ e^{jθ}) f.
ComplexPolynomial perturbed_closed_loop(const RealPolynomial& g, const RealPolynomial& f, double delta,
                                        double theta);

/// θ_k = −π + 2πk / count, k = 0..count−1 (θ = π coincides with −π).
std::vector<double> theta_grid(int count);

inline constexpr int kDefaultThetaPoints = 720;

/// True iff g + (1 + e^{jθ}/γ) f is Hurwitz for every θ on the grid, which
/// is equivalent to ‖f/(f+g)‖∞ < γ up to grid resolution.
bool check_lemma23(const RealPolynomial& g, const RealPolynomial& f, double gamma,
                   int theta_count = kDefaultThetaPoints, double tol = kHurwitzTol);

struct BisectionOptions {
  double tol = 1e-4;
  int theta_count = kDefaultThetaPoints;
  double hurwitz_tol = kHurwitzTol;
  double gamma_cap = 4294967296.0;
};

/// Worst-case ‖S‖∞ over the family by bisecting γ on the twelve-vertex
/// complex stability test with δ = 1/γ. Throws UnstableFamily when the
/// matched vertex sums are not Hurwitz and NoUpperBracket past gamma_cap.
double family_norm_bisection(const IntervalPolynomial& numerator, const IntervalPolynomial& denominator,
                             const BisectionOptions& opts = {});

}  // namespace ivhinf
