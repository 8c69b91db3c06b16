#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace ivhinf {

using Complex = std::complex<double>;

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

/// Dense real polynomial, coefficients ascending by power. Trailing zero
/// coefficients are dropped on construction so the stored size always
/// equals degree() + 1.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> coeffs);
  RealPolynomial(std::initializer_list<double> coeffs)
      : RealPolynomial(std::vector<double>(coeffs)) {}

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const double> coeffs() const { return coeffs_; }
  /// Coefficient of s^i; zero beyond the degree.
  double coeff(int i) const;
  double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

  double operator()(double x) const;
  Complex operator()(Complex s) const;
  /// p(jω) through the even/odd split: Re = α(−ω²), Im = ω·β(−ω²).
  Complex eval_at_jomega(double omega) const;

  RealPolynomial derivative() const;

  friend bool operator==(const RealPolynomial&, const RealPolynomial&) = default;

 private:
  std::vector<double> coeffs_;
};

/// Dense complex polynomial with the same conventions as RealPolynomial.
class ComplexPolynomial {
 public:
  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::vector<Complex> coeffs);
  ComplexPolynomial(std::initializer_list<Complex> coeffs)
      : ComplexPolynomial(std::vector<Complex>(coeffs)) {}
  explicit ComplexPolynomial(const RealPolynomial& p);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex coeff(int i) const;
  Complex leading() const { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

  Complex operator()(Complex s) const;
  Complex eval_at_jomega(double omega) const { return (*this)(Complex(0.0, omega)); }

  ComplexPolynomial derivative() const;

  friend bool operator==(const ComplexPolynomial&, const ComplexPolynomial&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Halves of p(s) = α(s²) + s·β(s²). Both are stored as polynomials in
/// u = s²; the substitution u = −ω² happens at evaluation.
struct EvenOddParts {
  RealPolynomial alpha;
  RealPolynomial beta;
};

EvenOddParts even_odd_split(const RealPolynomial& p);
RealPolynomial from_even_odd(const EvenOddParts& parts);

/// M(x) with M(ω²) = |p(jω)|², as a polynomial in x = ω².
RealPolynomial magnitude_squared(const RealPolynomial& p);

RealPolynomial add(const RealPolynomial& p, const RealPolynomial& q);
RealPolynomial subtract(const RealPolynomial& p, const RealPolynomial& q);
RealPolynomial multiply(const RealPolynomial& p, const RealPolynomial& q);
RealPolynomial scale(const RealPolynomial& p, double c);
ComplexPolynomial scale(const RealPolynomial& p, Complex c);

ComplexPolynomial add(const ComplexPolynomial& p, const ComplexPolynomial& q);
ComplexPolynomial multiply(const ComplexPolynomial& p, const ComplexPolynomial& q);
ComplexPolynomial scale(const ComplexPolynomial& p, Complex c);

/// 1 + max_i |c_i| / |c_n|: every root lies in the disc of this radius.
double cauchy_bound(const RealPolynomial& p);
double cauchy_bound(const ComplexPolynomial& p);

}  // namespace ivhinf
