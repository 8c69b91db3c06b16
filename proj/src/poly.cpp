#include "ivhinf/poly.hpp"

#include <algorithm>
#include <cmath>

#include "ivhinf/error.hpp"

namespace ivhinf {

namespace {

template <typename T>
void trim(std::vector<T>& c) {
  while (!c.empty() && c.back() == T{}) c.pop_back();
}

template <typename T>
void require_finite(const std::vector<T>& c) {
  for (const auto& v : c) {
    bool finite;
    if constexpr (std::is_same_v<T, double>) {
      finite = std::isfinite(v);
    } else {
      finite = std::isfinite(v.real()) && std::isfinite(v.imag());
    }
    if (!finite) throw Error(ErrorKind::InvalidArgument, "polynomial coefficient is not finite");
  }
}

template <typename T, typename X>
auto horner(std::span<const T> c, X x) {
  using R = decltype(T{} * x);
  R acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  require_finite(coeffs_);
  trim(coeffs_);
}

double RealPolynomial::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0.0;
}

double RealPolynomial::operator()(double x) const { return horner(coeffs(), x); }

Complex RealPolynomial::operator()(Complex s) const { return horner(coeffs(), s); }

Complex RealPolynomial::eval_at_jomega(double omega) const {
  if (coeffs_.empty()) return {};
  const double x = -omega * omega;
  // Walk the even and odd coefficients separately in u = s² = −ω².
  double re = 0.0;
  double im = 0.0;
  const int n = degree();
  for (int i = n - (n % 2); i >= 0; i -= 2) re = re * x + coeffs_[i];
  for (int i = (n % 2 == 1) ? n : n - 1; i >= 1; i -= 2) im = im * x + coeffs_[i];
  return {re, omega * im};
}

RealPolynomial RealPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return RealPolynomial(std::move(d));
}

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  require_finite(coeffs_);
  trim(coeffs_);
}

ComplexPolynomial::ComplexPolynomial(const RealPolynomial& p)
    : coeffs_(p.coeffs().begin(), p.coeffs().end()) {}

Complex ComplexPolynomial::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Complex{};
}

Complex ComplexPolynomial::operator()(Complex s) const { return horner(coeffs(), s); }

ComplexPolynomial ComplexPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return ComplexPolynomial(std::move(d));
}

EvenOddParts even_odd_split(const RealPolynomial& p) {
  std::vector<double> alpha;
  std::vector<double> beta;
  const auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) (i % 2 == 0 ? alpha : beta).push_back(c[i]);
  return {RealPolynomial(std::move(alpha)), RealPolynomial(std::move(beta))};
}

RealPolynomial from_even_odd(const EvenOddParts& parts) {
  const int n = std::max(2 * parts.alpha.degree(), 2 * parts.beta.degree() + 1);
  if (n < 0) return {};
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= parts.alpha.degree(); ++k) c[2 * k] = parts.alpha.coeff(k);
  for (int k = 0; k <= parts.beta.degree(); ++k) c[2 * k + 1] = parts.beta.coeff(k);
  return RealPolynomial(std::move(c));
}

RealPolynomial magnitude_squared(const RealPolynomial& p) {
  // |p(jω)|² = α(−x)² + x·β(−x)² with x = ω².
  const auto [alpha, beta] = even_odd_split(p);
  auto flip = [](const RealPolynomial& q) {
    std::vector<double> c(q.coeffs().begin(), q.coeffs().end());
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return RealPolynomial(std::move(c));
  };
  const RealPolynomial a = flip(alpha);
  const RealPolynomial b = flip(beta);
  return add(multiply(a, a), multiply(RealPolynomial{0.0, 1.0}, multiply(b, b)));
}

RealPolynomial add(const RealPolynomial& p, const RealPolynomial& q) {
  std::vector<double> c(std::max(p.coeffs().size(), q.coeffs().size()), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i));
  }
  return RealPolynomial(std::move(c));
}

RealPolynomial subtract(const RealPolynomial& p, const RealPolynomial& q) {
  return add(p, scale(q, -1.0));
}

RealPolynomial multiply(const RealPolynomial& p, const RealPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<double> c(p.coeffs().size() + q.coeffs().size() - 1, 0.0);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) c[i + j] += p.coeffs()[i] * q.coeffs()[j];
  return RealPolynomial(std::move(c));
}

RealPolynomial scale(const RealPolynomial& p, double c) {
  std::vector<double> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& v : out) v *= c;
  return RealPolynomial(std::move(out));
}

ComplexPolynomial scale(const RealPolynomial& p, Complex c) {
  std::vector<Complex> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * p.coeffs()[i];
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial add(const ComplexPolynomial& p, const ComplexPolynomial& q) {
  std::vector<Complex> c(std::max(p.coeffs().size(), q.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i));
  }
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial multiply(const ComplexPolynomial& p, const ComplexPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Complex> c(p.coeffs().size() + q.coeffs().size() - 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) c[i + j] += p.coeffs()[i] * q.coeffs()[j];
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial scale(const ComplexPolynomial& p, Complex c) {
  std::vector<Complex> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& v : out) v *= c;
  return ComplexPolynomial(std::move(out));
}

double cauchy_bound(const RealPolynomial& p) { return cauchy_bound(ComplexPolynomial(p)); }

double cauchy_bound(const ComplexPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Cauchy bound of the zero polynomial");
  const double lead = std::abs(p.leading());
  double m = 0.0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, std::abs(p.coeffs()[i]));
  return 1.0 + m / lead;
}

}  // namespace ivhinf
