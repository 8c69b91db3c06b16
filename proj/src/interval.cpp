#include "ivhinf/interval.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ivhinf/error.hpp"

namespace ivhinf {

IntervalPolynomial::IntervalPolynomial(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty()) throw Error(ErrorKind::InvalidArgument, "interval polynomial has no coefficients");
  if (lower_.size() != upper_.size()) {
    throw Error(ErrorKind::InvalidArgument, "lower and upper bound counts differ");
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i])) {
      throw Error(ErrorKind::InvalidArgument, "coefficient " + std::to_string(i) + " has a non-finite bound");
    }
    if (lower_[i] > upper_[i]) {
      throw Error(ErrorKind::InvalidArgument,
                  "coefficient " + std::to_string(i) + " has lower bound above upper bound");
    }
  }
}

IntervalPolynomial IntervalPolynomial::point(const RealPolynomial& p) {
  std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
  if (c.empty()) c.push_back(0.0);
  return {c, c};
}

double IntervalPolynomial::lower(int i) const {
  return (i >= 0 && i <= degree()) ? lower_[i] : 0.0;
}

double IntervalPolynomial::upper(int i) const {
  return (i >= 0 && i <= degree()) ? upper_[i] : 0.0;
}

RealPolynomial IntervalPolynomial::midpoint() const {
  std::vector<double> c(lower_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.5 * (lower_[i] + upper_[i]);
  return RealPolynomial(std::move(c));
}

bool IntervalPolynomial::contains(const RealPolynomial& p, double slack) const {
  if (p.degree() > degree()) return false;
  for (int i = 0; i <= degree(); ++i) {
    const double c = p.coeff(i);
    if (c < lower_[i] - slack || c > upper_[i] + slack) return false;
  }
  return true;
}

const RealPolynomial& KharitonovSet::at(int i, int j) const {
  if (i == 1 && j == 1) return p11;
  if (i == 1 && j == 2) return p12;
  if (i == 2 && j == 1) return p21;
  if (i == 2 && j == 2) return p22;
  throw Error(ErrorKind::InvalidArgument, "Kharitonov index outside {1, 2}");
}

KharitonovSet kharitonov_vertices(const IntervalPolynomial& family) {
  // Coefficient k picks lower or upper by the pattern low, low, high, high
  // repeating with period 4 for the "1" halves; the "2" halves take the
  // complement. Even positions come from α^(i), odd ones from β^(j).
  const int n = family.degree();
  auto build = [&](int i, int j) {
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      const int which = (k % 2 == 0) ? i : j;
      const bool low_first = ((k / 2) % 2 == 0);
      const bool take_lower = (which == 1) ? low_first : !low_first;
      c[k] = take_lower ? family.lower(k) : family.upper(k);
    }
    return RealPolynomial(std::move(c));
  };
  return {build(1, 1), build(1, 2), build(2, 1), build(2, 2)};
}

bool Rectangle::contains(Complex z, double slack) const {
  return z.real() >= re_lo - slack && z.real() <= re_hi + slack && z.imag() >= im_lo - slack &&
         z.imag() <= im_hi + slack;
}

Rectangle value_rectangle(const IntervalPolynomial& family, double omega) {
  const KharitonovSet v = kharitonov_vertices(family);
  const Complex low = v.p11.eval_at_jomega(omega);
  const Complex high = v.p22.eval_at_jomega(omega);
  Rectangle r{low.real(), high.real(), low.imag(), high.imag()};
  // ω·β(−ω²) reverses order for negative ω.
  if (omega < 0.0) std::swap(r.im_lo, r.im_hi);
  return r;
}

RealPolynomial sample(const IntervalPolynomial& family, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> c(family.lower().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double lo = family.lower()[i];
    const double hi = family.upper()[i];
    const double u = unit(rng);
    c[i] = (lo == hi) ? lo : std::clamp(lo + (hi - lo) * u, lo, hi);
  }
  return RealPolynomial(std::move(c));
}

IntervalPolynomial sum_family(const IntervalPolynomial& numerator, const IntervalPolynomial& denominator) {
  if (numerator.degree() >= denominator.degree()) {
    throw Error(ErrorKind::DegreeOrder, "numerator family degree must be below denominator degree");
  }
  std::vector<double> lo(denominator.lower());
  std::vector<double> hi(denominator.upper());
  for (int i = 0; i <= numerator.degree(); ++i) {
    lo[i] += numerator.lower(i);
    hi[i] += numerator.upper(i);
  }
  return {std::move(lo), std::move(hi)};
}

}  // namespace ivhinf
