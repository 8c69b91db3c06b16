#pragma once

#include <random>
#include <vector>

#include "ivhinf/poly.hpp"

namespace ivhinf {

/// Family of real polynomials whose coefficients range independently over
/// closed intervals [lower_i, upper_i], i = 0..degree.
class IntervalPolynomial {
 public:
  IntervalPolynomial() = default;
  /// Throws InvalidArgument on mismatched lengths, empty bounds, non-finite
  /// values or lower_i > upper_i.
  IntervalPolynomial(std::vector<double> lower, std::vector<double> upper);

  /// The single-member family {p}.
  static IntervalPolynomial point(const RealPolynomial& p);

  /// Nominal degree (number of intervals minus one). A member may have a
  /// lower actual degree when the top interval contains zero.
  int degree() const { return static_cast<int>(lower_.size()) - 1; }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  double lower(int i) const;
  double upper(int i) const;
  double width(int i) const { return upper(i) - lower(i); }

  RealPolynomial midpoint() const;
  bool contains(const RealPolynomial& p, double slack = 0.0) const;
  bool is_point() const { return lower_ == upper_; }

  friend bool operator==(const IntervalPolynomial&, const IntervalPolynomial&) = default;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// The four Kharitonov vertices p_ij = α^(i)(s²) + s·β^(j)(s²).
struct KharitonovSet {
  RealPolynomial p11;
  RealPolynomial p12;
  RealPolynomial p21;
  RealPolynomial p22;

  /// i, j in {1, 2}.
  const RealPolynomial& at(int i, int j) const;
};

KharitonovSet kharitonov_vertices(const IntervalPolynomial& family);

/// Axis-aligned rectangle in the complex plane.
struct Rectangle {
  double re_lo = 0.0;
  double re_hi = 0.0;
  double im_lo = 0.0;
  double im_hi = 0.0;

  bool contains(Complex z, double slack = 0.0) const;
};

/// Value set {p(jω) : p in family}: a rectangle whose corners are the
/// Kharitonov vertices evaluated at jω.
Rectangle value_rectangle(const IntervalPolynomial& family, double omega);

/// Member drawn with every coefficient uniform on its interval.
RealPolynomial sample(const IntervalPolynomial& family, std::mt19937_64& rng);

/// Coefficientwise interval sum. Throws DegreeOrder unless
/// numerator.degree() < denominator.degree().
IntervalPolynomial sum_family(const IntervalPolynomial& numerator,
                              const IntervalPolynomial& denominator);

}  // namespace ivhinf
