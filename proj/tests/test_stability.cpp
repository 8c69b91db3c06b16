#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ivhinf/error.hpp"
#include "ivhinf/stability.hpp"
#include "support/oracles.hpp"
#include "support/random_families.hpp"

using namespace ivhinf;
using testkit::uniform;

namespace {

// Greedy nearest matching of two root multisets; returns the worst distance.
double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (const Complex& z : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](Complex p, Complex q) { return std::abs(p - z) < std::abs(q - z); });
    worst = std::max(worst, std::abs(*it - z));
    b.erase(it);
  }
  return worst;
}

RealPolynomial random_real(std::mt19937_64& rng, int degree, double span) {
  std::vector<double> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = uniform(rng, -span, span);
  if (std::abs(c.back()) < 0.1) c.back() = c.back() < 0 ? -0.1 : 0.1;
  return RealPolynomial(c);
}

}  // namespace

TEST(Routh, Examples) {
  EXPECT_TRUE(is_hurwitz_real(RealPolynomial{1.0, 1.0}).is_hurwitz);
  EXPECT_FALSE(is_hurwitz_real(RealPolynomial{1.0, 1.0, 1.0, 1.0}).is_hurwitz);
  EXPECT_FALSE(is_hurwitz_real(RealPolynomial{1.0, -1.0, 1.0}).is_hurwitz);
  EXPECT_TRUE(is_hurwitz_real(RealPolynomial{1.0, 1.0, 1.0}).is_hurwitz);
  EXPECT_TRUE(is_hurwitz_real(RealPolynomial{-2.0, -3.0, -1.0}).is_hurwitz);
  EXPECT_FALSE(is_hurwitz_real(RealPolynomial{0.0, 1.0, 1.0}).is_hurwitz);
  EXPECT_EQ(is_hurwitz_real(RealPolynomial{1.0, 1.0}).method, StabilityMethod::Routh);
  EXPECT_FALSE(is_hurwitz_real(RealPolynomial{1.0, 1.0}).margin.has_value());
  EXPECT_THROW(is_hurwitz_real(RealPolynomial{}), Error);
}

TEST(Roots, Examples) {
  const RootSet lin = roots_complex(ComplexPolynomial{Complex(1.0, -1.0), Complex(1.0, 0.0)});
  ASSERT_EQ(lin.roots.size(), 1u);
  EXPECT_NEAR(std::abs(lin.roots[0] - Complex(-1.0, 1.0)), 0.0, 1e-14);

  const RootSet quad = roots_real(RealPolynomial{2.0, 3.0, 1.0});
  EXPECT_LT(multiset_distance(quad.roots, {Complex(-1.0), Complex(-2.0)}), 1e-12);
  EXPECT_LT(quad.residual, 1e-9);

  const RootSet dbl = roots_complex(ComplexPolynomial{Complex(-1.0), Complex(0.0, -2.0), Complex(1.0)});
  EXPECT_LT(multiset_distance(dbl.roots, {Complex(0.0, 1.0), Complex(0.0, 1.0)}), 1e-6);
  EXPECT_LT(dbl.residual, 1e-9);

  const RootSet zeros = roots_real(RealPolynomial{0.0, 0.0, 1.0, 1.0});
  EXPECT_LT(multiset_distance(zeros.roots, {Complex(0.0), Complex(0.0), Complex(-1.0)}), 1e-12);
}

TEST(Roots, Errors) {
  EXPECT_THROW(roots_real(RealPolynomial{}), Error);
  try {
    roots_real(RealPolynomial{1.0, 1.0, 1e-20});
    FAIL() << "expected DegenerateLeading";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateLeading);
  }
}

TEST(ComplexHurwitz, Examples) {
  const StabilityVerdict a = is_hurwitz_complex(ComplexPolynomial{Complex(1.0), Complex(1.0)});
  EXPECT_TRUE(a.is_hurwitz);
  EXPECT_NEAR(*a.margin, 1.0, 1e-12);
  EXPECT_EQ(a.method, StabilityMethod::Roots);
  EXPECT_FALSE(is_hurwitz_complex(ComplexPolynomial{Complex(0.0, -1.0), Complex(1.0)}).is_hurwitz);
  EXPECT_TRUE(is_hurwitz_complex(ComplexPolynomial{Complex(1.0, -1.0), Complex(2.0, -1.0), Complex(1.0)}).is_hurwitz);
}

TEST(Roots, ProductIsUnion) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    const RealPolynomial p = random_real(rng, testkit::uniform_int(rng, 1, 4), 3.0);
    const RealPolynomial q = random_real(rng, testkit::uniform_int(rng, 1, 4), 3.0);
    std::vector<Complex> both = roots_real(p).roots;
    const auto rq = roots_real(q).roots;
    both.insert(both.end(), rq.begin(), rq.end());
    const auto rpq = roots_real(multiply(p, q)).roots;
    // Close root pairs lose accuracy like sqrt(eps); skip those draws.
    double sep = INFINITY;
    for (std::size_t i = 0; i < both.size(); ++i)
      for (std::size_t j = i + 1; j < both.size(); ++j) sep = std::min(sep, std::abs(both[i] - both[j]));
    if (sep < 1e-2) continue;
    EXPECT_LT(multiset_distance(rpq, both), 1e-8) << k;
  }
}

TEST(Roots, RealPolynomialsGiveConjugatePairs) {
  std::mt19937_64 rng(32);
  for (int k = 0; k < 300; ++k) {
    const RealPolynomial p = random_real(rng, testkit::uniform_int(rng, 1, 8), 5.0);
    const RootSet r = roots_real(p);
    ASSERT_EQ(static_cast<int>(r.roots.size()), p.degree());
    std::vector<Complex> conj;
    for (const Complex& z : r.roots) conj.push_back(std::conj(z));
    EXPECT_LT(multiset_distance(r.roots, conj), 1e-9 * (1.0 + cauchy_bound(p)));
    // Backward error checked independently.
    for (const Complex& z : r.roots) {
      double scale = 0.0;
      for (int i = 0; i <= p.degree(); ++i) scale += std::abs(p.coeff(i)) * std::pow(std::abs(z), i);
      EXPECT_LT(std::abs(testkit::horner(p.coeffs(), z)) / scale, 1e-9);
    }
  }
}

TEST(Stability, RouthAgreesWithRoots) {
  std::mt19937_64 rng(33);
  int borderline = 0;
  for (int k = 0; k < 1000; ++k) {
    const RealPolynomial p = random_real(rng, testkit::uniform_int(rng, 1, 8), 5.0);
    const StabilityVerdict roots = is_hurwitz_complex(ComplexPolynomial(p), 1e-9);
    if (std::abs(*roots.margin) < 1e-7) {
      ++borderline;
      continue;
    }
    EXPECT_EQ(is_hurwitz_real(p).is_hurwitz, roots.is_hurwitz) << k;
  }
  EXPECT_LT(borderline, 50);
}

TEST(Stability, StablePolynomialsFromRoots) {
  std::mt19937_64 rng(34);
  for (int k = 0; k < 200; ++k) {
    const RealPolynomial p = testkit::stable_polynomial(testkit::uniform_int(rng, 1, 10), rng, uniform(rng, 0.5, 3.0));
    EXPECT_TRUE(is_hurwitz_real(p).is_hurwitz);
    EXPECT_TRUE(is_hurwitz_complex(ComplexPolynomial(p)).is_hurwitz);
    const RealPolynomial unstable = multiply(p, RealPolynomial{-uniform(rng, 0.1, 2.0), 1.0});
    EXPECT_FALSE(is_hurwitz_real(unstable).is_hurwitz);
    EXPECT_FALSE(is_hurwitz_complex(ComplexPolynomial(unstable)).is_hurwitz);
  }
}
