#include <gtest/gtest.h>

#include <random>

#include "ivhinf/error.hpp"
#include "ivhinf/interval.hpp"
#include "support/oracles.hpp"
#include "support/random_families.hpp"

using namespace ivhinf;
using testkit::uniform;

namespace {

const IntervalPolynomial kBox2({1.0, 3.0, 5.0}, {2.0, 4.0, 6.0});

IntervalPolynomial random_box(std::mt19937_64& rng, int degree) {
  std::vector<double> lo(static_cast<std::size_t>(degree) + 1), hi(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = uniform(rng, -3.0, 3.0);
    hi[i] = lo[i] + uniform(rng, 0.0, 2.0);
  }
  return {lo, hi};
}

}  // namespace

TEST(Interval, RejectsMalformedBounds) {
  EXPECT_THROW(IntervalPolynomial({1.0}, {0.0}), Error);
  EXPECT_THROW(IntervalPolynomial({1.0, 2.0}, {1.0}), Error);
  EXPECT_THROW(IntervalPolynomial({}, {}), Error);
  EXPECT_THROW(IntervalPolynomial({INFINITY}, {INFINITY}), Error);
  EXPECT_NO_THROW(IntervalPolynomial({1.0}, {1.0}));
}

TEST(Interval, DegreeTwoVertices) {
  const KharitonovSet v = kharitonov_vertices(kBox2);
  EXPECT_EQ(v.p11, (RealPolynomial{1.0, 3.0, 6.0}));
  EXPECT_EQ(v.p12, (RealPolynomial{1.0, 4.0, 6.0}));
  EXPECT_EQ(v.p21, (RealPolynomial{2.0, 3.0, 5.0}));
  EXPECT_EQ(v.p22, (RealPolynomial{2.0, 4.0, 5.0}));
  EXPECT_EQ(&v.at(1, 2), &v.p12);
  EXPECT_EQ(&v.at(2, 1), &v.p21);
}

TEST(Interval, DegreeThreeUnitBox) {
  const KharitonovSet v = kharitonov_vertices(IntervalPolynomial({0, 0, 0, 0}, {1, 1, 1, 1}));
  EXPECT_EQ(v.p11, (RealPolynomial{0.0, 0.0, 1.0, 1.0}));
  EXPECT_EQ(v.p22, (RealPolynomial{1.0, 1.0, 0.0, 0.0}));
}

TEST(Interval, PointFamilyVerticesCoincide) {
  const RealPolynomial p{2.0, -1.0, 3.0, 1.0};
  const KharitonovSet v = kharitonov_vertices(IntervalPolynomial::point(p));
  for (const auto* q : {&v.p11, &v.p12, &v.p21, &v.p22}) EXPECT_EQ(*q, p);
  const Rectangle r = value_rectangle(IntervalPolynomial::point(p), 0.7);
  const Complex z = p.eval_at_jomega(0.7);
  EXPECT_EQ(r.re_lo, z.real());
  EXPECT_EQ(r.re_hi, z.real());
  EXPECT_EQ(r.im_lo, z.imag());
  EXPECT_EQ(r.im_hi, z.imag());
}

TEST(Interval, RectangleAtZeroFrequency) {
  const Rectangle r = value_rectangle(kBox2, 0.0);
  EXPECT_EQ(r.re_lo, 1.0);
  EXPECT_EQ(r.re_hi, 2.0);
  EXPECT_EQ(r.im_lo, 0.0);
  EXPECT_EQ(r.im_hi, 0.0);
}

TEST(Interval, VerticesAreMembers) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 100; ++k) {
    const IntervalPolynomial box = random_box(rng, testkit::uniform_int(rng, 0, 7));
    const KharitonovSet v = kharitonov_vertices(box);
    for (const auto* q : {&v.p11, &v.p12, &v.p21, &v.p22}) EXPECT_TRUE(box.contains(*q));
    // Opposite vertices take opposite bounds at every position.
    for (int i = 0; i <= box.degree(); ++i) {
      EXPECT_EQ(std::min(v.p11.coeff(i), v.p22.coeff(i)), box.lower(i)) << i;
      EXPECT_EQ(std::max(v.p11.coeff(i), v.p22.coeff(i)), box.upper(i)) << i;
      EXPECT_EQ(std::min(v.p12.coeff(i), v.p21.coeff(i)), box.lower(i)) << i;
      EXPECT_EQ(std::max(v.p12.coeff(i), v.p21.coeff(i)), box.upper(i)) << i;
    }
  }
}

TEST(Interval, RectangleCornersAreVertexValues) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 200; ++k) {
    const IntervalPolynomial box = random_box(rng, testkit::uniform_int(rng, 1, 7));
    const KharitonovSet v = kharitonov_vertices(box);
    const double w = uniform(rng, -4.0, 4.0);
    const Rectangle r = value_rectangle(box, w);
    const double scale = 1.0 + std::abs(r.re_lo) + std::abs(r.re_hi) + std::abs(r.im_lo) + std::abs(r.im_hi);
    const Complex lo = testkit::horner(v.p11.coeffs(), Complex(0.0, w));
    const Complex hi = testkit::horner(v.p22.coeffs(), Complex(0.0, w));
    const Complex mixed12 = testkit::horner(v.p12.coeffs(), Complex(0.0, w));
    const Complex mixed21 = testkit::horner(v.p21.coeffs(), Complex(0.0, w));
    EXPECT_NEAR(r.re_lo, lo.real(), 1e-12 * scale);
    EXPECT_NEAR(r.re_hi, hi.real(), 1e-12 * scale);
    EXPECT_NEAR(r.re_lo, mixed12.real(), 1e-12 * scale);
    EXPECT_NEAR(r.re_hi, mixed21.real(), 1e-12 * scale);
    if (w >= 0) {
      EXPECT_NEAR(r.im_lo, lo.imag(), 1e-12 * scale);
      EXPECT_NEAR(r.im_hi, hi.imag(), 1e-12 * scale);
    } else {
      EXPECT_NEAR(r.im_lo, hi.imag(), 1e-12 * scale);
      EXPECT_NEAR(r.im_hi, lo.imag(), 1e-12 * scale);
    }
    EXPECT_LE(r.re_lo, r.re_hi);
    EXPECT_LE(r.im_lo, r.im_hi);
  }
}

TEST(Interval, RectangleMirrorsUnderConjugation) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 100; ++k) {
    const IntervalPolynomial box = random_box(rng, 5);
    const double w = uniform(rng, 0.0, 3.0);
    const Rectangle a = value_rectangle(box, w);
    const Rectangle b = value_rectangle(box, -w);
    EXPECT_EQ(a.re_lo, b.re_lo);
    EXPECT_EQ(a.re_hi, b.re_hi);
    EXPECT_EQ(a.im_lo, -b.im_hi);
    EXPECT_EQ(a.im_hi, -b.im_lo);
  }
}

TEST(Interval, MembersLieInRectangle) {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 20; ++k) {
    const IntervalPolynomial box = random_box(rng, testkit::uniform_int(rng, 1, 6));
    const KharitonovSet v = kharitonov_vertices(box);
    for (int s = 0; s < 50; ++s) {
      const RealPolynomial p = sample(box, rng);
      const double w = uniform(rng, -3.0, 3.0);
      const Complex z = testkit::horner(p.coeffs(), Complex(0.0, w));
      const double scale = 1.0 + std::abs(z);
      EXPECT_TRUE(value_rectangle(box, w).contains(z, 1e-12 * scale));

      // Even and odd parts separately bracketed by the vertex halves.
      const auto [a, b] = even_odd_split(p);
      const double x = -w * w;
      const auto [a1, b1] = even_odd_split(v.p11);
      const auto [a2, b2] = even_odd_split(v.p22);
      EXPECT_GE(a(x), a1(x) - 1e-12 * scale);
      EXPECT_LE(a(x), a2(x) + 1e-12 * scale);
      EXPECT_GE(b(x), b1(x) - 1e-12 * scale);
      EXPECT_LE(b(x), b2(x) + 1e-12 * scale);
    }
  }
}

TEST(Interval, SamplingIsSeededAndInBox) {
  std::mt19937_64 rng(25);
  const IntervalPolynomial box = random_box(rng, 6);
  std::mt19937_64 r1(99), r2(99);
  for (int k = 0; k < 100; ++k) {
    const RealPolynomial a = sample(box, r1);
    EXPECT_EQ(a, sample(box, r2));
    EXPECT_TRUE(box.contains(a));
  }
  const IntervalPolynomial pt = IntervalPolynomial::point(RealPolynomial{1.0, 2.0});
  std::mt19937_64 r3(1);
  EXPECT_EQ(sample(pt, r3), (RealPolynomial{1.0, 2.0}));
}

TEST(Interval, SumFamily) {
  const IntervalPolynomial s =
      sum_family(IntervalPolynomial::point(RealPolynomial{1.0}), IntervalPolynomial::point(RealPolynomial{1.0, 1.0}));
  EXPECT_TRUE(s.is_point());
  EXPECT_EQ(s.midpoint(), (RealPolynomial{2.0, 1.0}));
  EXPECT_THROW(sum_family(kBox2, kBox2), Error);
}

TEST(Interval, SumFamilyVerticesAreMatchedSums) {
  std::mt19937_64 rng(26);
  for (int k = 0; k < 100; ++k) {
    const int n = testkit::uniform_int(rng, 1, 7);
    const IntervalPolynomial g = random_box(rng, testkit::uniform_int(rng, 0, n - 1));
    const IntervalPolynomial f = random_box(rng, n);
    const IntervalPolynomial s = sum_family(g, f);
    const KharitonovSet vs = kharitonov_vertices(s);
    const KharitonovSet vg = kharitonov_vertices(g);
    const KharitonovSet vf = kharitonov_vertices(f);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        const RealPolynomial m = add(vg.at(i, j), vf.at(i, j));
        for (int c = 0; c <= n; ++c) EXPECT_NEAR(vs.at(i, j).coeff(c), m.coeff(c), 1e-15 * (1 + std::abs(m.coeff(c))));
      }
    for (int c = 0; c <= n; ++c) EXPECT_NEAR(s.width(c), g.width(c) + f.width(c), 1e-14);
  }
}
