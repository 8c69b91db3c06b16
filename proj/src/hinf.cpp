#include "ivhinf/hinf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ivhinf/error.hpp"
#include "ivhinf/valueset.hpp"

namespace ivhinf {

RationalFunction::RationalFunction(RealPolynomial num, RealPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "rational function with zero denominator");
  if (num_.degree() > den_.degree()) {
    throw Error(ErrorKind::DegreeOrder, "rational function is not proper");
  }
}

Complex RationalFunction::eval_at_jomega(double omega) const {
  return num_.eval_at_jomega(omega) / den_.eval_at_jomega(omega);
}

double RationalFunction::limit_at_infinity() const {
  if (num_.degree() < den_.degree()) return 0.0;
  return std::abs(num_.leading() / den_.leading());
}

RationalFunction sensitivity(const RealPolynomial& g, const RealPolynomial& f) {
  if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "plant numerator is the zero polynomial");
  if (g.degree() >= f.degree()) {
    throw Error(ErrorKind::DegreeOrder, "plant g/f must be strictly proper (deg g < deg f)");
  }
  RealPolynomial closed = add(f, g);
  if (!is_hurwitz_real(closed).is_hurwitz) {
    throw Error(ErrorKind::UnstableClosedLoop, "closed-loop polynomial f + g is not Hurwitz");
  }
  return {f, std::move(closed)};
}

namespace {

// N(x) = Mn'(x)·Md(x) − Mn(x)·Md'(x) = Σ_{i>j} (i−j)(Mn_i Md_j − Mn_j Md_i) x^{i+j−1}.
// Pairing the terms makes N vanish exactly when Mn and Md are proportional
// coefficient for coefficient, e.g. num = den.
RealPolynomial stationarity_polynomial(const RealPolynomial& mn, const RealPolynomial& md) {
  const int top = std::max(mn.degree(), md.degree());
  if (top < 1) return {};
  std::vector<double> c(static_cast<std::size_t>(2 * top), 0.0);
  for (int i = 1; i <= top; ++i) {
    for (int j = 0; j < i; ++j) {
      const double term = mn.coeff(i) * md.coeff(j) - mn.coeff(j) * md.coeff(i);
      c[i + j - 1] += (i - j) * term;
    }
  }
  // Noise-level leading coefficients would spawn spurious roots near infinity.
  double max_abs = 0.0;
  for (double v : c) max_abs = std::max(max_abs, std::abs(v));
  while (!c.empty() && std::abs(c.back()) <= 1e-13 * max_abs) c.pop_back();
  return RealPolynomial(std::move(c));
}

}  // namespace

NormResult hinf_norm_exact(const RationalFunction& s) {
  if (!is_hurwitz_real(s.den()).is_hurwitz) {
    throw Error(ErrorKind::UnstableDenominator, "H-infinity norm needs a Hurwitz denominator");
  }
  const RealPolynomial mn = magnitude_squared(s.num());
  const RealPolynomial md = magnitude_squared(s.den());
  const RealPolynomial stationary = stationarity_polynomial(mn, md);

  std::vector<double> xs{0.0};
  if (stationary.degree() >= 1) {
    for (const Complex& r : roots_real(stationary).roots) {
      const double mag = std::abs(r);
      if (mag == 0.0 || r.real() <= 0.0) continue;
      if (std::abs(r.imag()) < 1e-8 * mag) xs.push_back(r.real());
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  NormResult out;
  out.limit = s.limit_at_infinity();
  out.candidates.reserve(xs.size());
  double best = -1.0;
  for (double x : xs) {
    const double omega = std::sqrt(x);
    const double m = std::abs(s.eval_at_jomega(omega));
    out.candidates.push_back({omega, m});
    if (m > best) {
      best = m;
      out.attained_at = omega;
    }
  }
  out.value = best;
  if (out.limit > best) {
    out.value = out.limit;
    out.at_infinity = true;
    out.attained_at = std::numeric_limits<double>::infinity();
  }
  return out;
}

double hinf_norm_grid(const RationalFunction& s, double omega_max, int points) {
  if (points < 2) throw Error(ErrorKind::InvalidArgument, "grid needs at least two points");
  if (!(omega_max > 0.0)) throw Error(ErrorKind::InvalidArgument, "grid upper frequency must be positive");
  double best = std::max(std::abs(s.eval_at_jomega(0.0)), s.limit_at_infinity());
  const double lo = std::log(omega_max) - 9.0 * std::numbers::ln10;
  const double step = (std::log(omega_max) - lo) / (points - 1);
  for (int k = 0; k < points; ++k) {
    best = std::max(best, std::abs(s.eval_at_jomega(std::exp(lo + step * k))));
  }
  return best;
}

ComplexPolynomial perturbed_closed_loop(const RealPolynomial& g, const RealPolynomial& f, double delta,
                                        double theta) {
  const Complex c = 1.0 + std::polar(delta, theta);
  return add(ComplexPolynomial(g), scale(f, c));
}

std::vector<double> theta_grid(int count) {
  if (count < 1) throw Error(ErrorKind::InvalidArgument, "theta grid needs at least one point");
  std::vector<double> out(count);
  for (int k = 0; k < count; ++k) out[k] = -std::numbers::pi + 2.0 * std::numbers::pi * k / count;
  return out;
}

bool check_lemma23(const RealPolynomial& g, const RealPolynomial& f, double gamma, int theta_count,
                   double tol) {
  if (!(gamma > 1.0)) throw Error(ErrorKind::InvalidArgument, "gamma must exceed 1");
  if (!is_hurwitz_real(add(f, g)).is_hurwitz) {
    throw Error(ErrorKind::UnstableClosedLoop, "closed-loop polynomial f + g is not Hurwitz");
  }
  const double delta = 1.0 / gamma;
  for (double theta : theta_grid(theta_count)) {
    if (!is_hurwitz_complex(perturbed_closed_loop(g, f, delta, theta), tol).is_hurwitz) return false;
  }
  return true;
}

double family_norm_bisection(const IntervalPolynomial& numerator, const IntervalPolynomial& denominator,
                             const BisectionOptions& opts) {
  const KharitonovSet gv = kharitonov_vertices(numerator);
  const KharitonovSet fv = kharitonov_vertices(denominator);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      if (!is_hurwitz_real(add(gv.at(i, j), fv.at(i, j))).is_hurwitz) {
        throw Error(ErrorKind::UnstableFamily, "matched Kharitonov vertex sums are not all Hurwitz");
      }

  const std::vector<double> thetas = theta_grid(opts.theta_count);
  auto below = [&](double gamma) {
    for (double theta : thetas) {
      if (!family_complex_stability(gv, fv, 1.0 / gamma, theta, opts.hurwitz_tol)) return false;
    }
    return true;
  };

  double lo = 1.0 + 1e-9;
  double hi = 2.0;
  while (!below(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > opts.gamma_cap) {
      throw Error(ErrorKind::NoUpperBracket, "no gamma up to the cap certifies the family");
    }
  }
  while (hi - lo > opts.tol) {
    const double mid = 0.5 * (lo + hi);
    (below(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace ivhinf
