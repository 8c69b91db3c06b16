#include "ivhinf/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ivhinf/error.hpp"

namespace ivhinf {

StabilityVerdict is_hurwitz_real(const RealPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Hurwitz test of the zero polynomial");
  const int n = p.degree();
  StabilityVerdict verdict{true, std::nullopt, StabilityMethod::Routh};
  if (n == 0) return verdict;

  const double sign = p.leading() > 0.0 ? 1.0 : -1.0;
  const std::size_t width = static_cast<std::size_t>(n) / 2 + 1;
  std::vector<double> upper(width, 0.0);
  std::vector<double> lower(width, 0.0);
  for (int k = n, i = 0; k >= 0; k -= 2, ++i) upper[i] = sign * p.coeff(k);
  for (int k = n - 1, i = 0; k >= 0; k -= 2, ++i) lower[i] = sign * p.coeff(k);

  // Rows 0 and 1 are seeded; each pass checks row r and derives row r + 1.
  for (int r = 1; r <= n; ++r) {
    if (!(lower[0] > 0.0)) {
      verdict.is_hurwitz = false;
      return verdict;
    }
    if (r == n) break;
    std::vector<double> next(width, 0.0);
    const double ratio = upper[0] / lower[0];
    for (std::size_t i = 0; i + 1 < width; ++i) next[i] = upper[i + 1] - ratio * lower[i + 1];
    upper = std::move(lower);
    lower = std::move(next);
  }
  return verdict;
}

namespace {

double backward_error(std::span<const Complex> c, Complex z) {
  Complex value{};
  double scale = 0.0;
  const double r = std::abs(z);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    value = value * z + *it;
    scale = scale * r + std::abs(*it);
  }
  return scale > 0.0 ? std::abs(value) / scale : 0.0;
}

// One Aberth–Ehrlich run on a monic polynomial; returns the final residual.
double aberth(std::span<const Complex> monic, double radius, double offset,
              const RootFinderOptions& opts, std::vector<Complex>& z) {
  const int n = static_cast<int>(monic.size()) - 1;
  z.resize(n);
  for (int k = 0; k < n; ++k) {
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * k / n + offset);
  }
  int polish = 2;
  for (int it = 0; it < opts.max_iterations; ++it) {
    double max_step = 0.0;
    for (int k = 0; k < n; ++k) {
      Complex pz = monic[n];
      Complex dpz{};
      for (int i = n - 1; i >= 0; --i) {
        dpz = dpz * z[k] + pz;
        pz = pz * z[k] + monic[i];
      }
      if (pz == Complex{}) continue;
      Complex sum{};
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        const Complex d = z[k] - z[j];
        if (d != Complex{}) sum += 1.0 / d;
      }
      Complex w;
      if (dpz == Complex{}) {
        w = Complex(radius * 1e-8, radius * 1e-8);
      } else {
        const Complex ratio = pz / dpz;
        const Complex denom = 1.0 - ratio * sum;
        w = (denom == Complex{}) ? ratio : ratio / denom;
      }
      z[k] -= w;
      max_step = std::max(max_step, std::abs(w));
    }
    if (max_step <= opts.step_tol * radius && --polish < 0) break;
  }
  double residual = 0.0;
  for (const Complex& root : z) residual = std::max(residual, backward_error(monic, root));
  return residual;
}

}  // namespace

RootSet roots_complex(const ComplexPolynomial& p, const RootFinderOptions& opts) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  const auto c = p.coeffs();
  double max_coeff = 0.0;
  for (const Complex& v : c) max_coeff = std::max(max_coeff, std::abs(v));
  if (std::abs(p.leading()) <= opts.degenerate_leading * max_coeff) {
    throw Error(ErrorKind::DegenerateLeading, "leading coefficient is negligible");
  }

  RootSet out;
  // Exact zero roots come off first.
  std::size_t zeros = 0;
  while (zeros < c.size() - 1 && c[zeros] == Complex{}) ++zeros;
  out.roots.assign(zeros, Complex{});

  std::vector<Complex> monic(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
  const Complex lead = monic.back();
  for (auto& v : monic) v /= lead;
  const int n = static_cast<int>(monic.size()) - 1;
  if (n == 0) return out;
  if (n == 1) {
    out.roots.push_back(-monic[0]);
    return out;
  }

  double bound = 0.0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(monic[i]));
  bound += 1.0;

  std::vector<Complex> z;
  double residual = aberth(monic, bound, 0.4, opts, z);
  if (residual > opts.residual_tol) {
    // Rotate the starting circle by half a spacing and try again.
    residual = aberth(monic, bound, 0.4 + std::numbers::pi / n, opts, z);
  }
  if (residual > opts.residual_tol) {
    throw Error(ErrorKind::NoConvergence, "root iteration did not reach the residual tolerance");
  }
  out.roots.insert(out.roots.end(), z.begin(), z.end());
  out.residual = residual;
  return out;
}

RootSet roots_real(const RealPolynomial& p, const RootFinderOptions& opts) {
  return roots_complex(ComplexPolynomial(p), opts);
}

StabilityVerdict is_hurwitz_complex(const ComplexPolynomial& p, double tol) {
  const RootSet rs = roots_complex(p);
  double max_re = -std::numeric_limits<double>::infinity();
  for (const Complex& r : rs.roots) max_re = std::max(max_re, r.real());
  StabilityVerdict verdict;
  verdict.method = StabilityMethod::Roots;
  if (rs.roots.empty()) {
    verdict.is_hurwitz = true;
    verdict.margin = std::numeric_limits<double>::infinity();
    return verdict;
  }
  verdict.margin = -max_re;
  verdict.is_hurwitz = max_re < -tol;
  return verdict;
}

}  // namespace ivhinf
