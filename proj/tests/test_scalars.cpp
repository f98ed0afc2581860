#include <gtest/gtest.h>

#include <random>

#include "starrep/scalars.hpp"

using namespace starrep;

namespace {

constexpr int kIterations = 1000;

Series random_series(std::mt19937_64& rng, bool real, int span = 7) {
  Series s;
  for (int r = 0; r <= s.order(); ++r) {
    long a = static_cast<long>(rng() % (2 * span + 1)) - span;
    long b = real ? 0 : static_cast<long>(rng() % (2 * span + 1)) - span;
    long d = static_cast<long>(rng() % 4) + 1;
    s[r] = Gauss(Rational(a, d), Rational(b, d));
  }
  return s;
}

Series geometric() {
  Series s;
  for (int r = 0; r <= s.order(); ++r) s[r] = Gauss(1);
  return s;
}

}  // namespace

TEST(Series, DifferenceOfSquares) {
  Series l = Series::lambda();
  EXPECT_EQ((1 + l) * (1 - l), 1 - l * l);
}

TEST(Series, ConjugationFixesLambda) {
  Series a = Series(Gauss::i()) * Series::lambda();
  EXPECT_EQ(conj(a), -a);
  EXPECT_EQ(conj(Series::lambda()), Series::lambda());
}

TEST(Series, GeometricSeriesTimesOneMinusLambda) {
  // Independent convolution oracle.
  Series g = geometric();
  Series h = 1 - Series::lambda();
  std::vector<Gauss> conv(static_cast<std::size_t>(g.order()) + 1);
  for (int i = 0; i <= g.order(); ++i)
    for (int j = 0; i + j <= g.order(); ++j) conv[i + j] += g[i] * h[j];
  EXPECT_EQ(g * h, Series::from_coefficients(conv));
  EXPECT_EQ(g * h, Series(1));
}

TEST(Series, OrderMismatchThrows) {
  Series a = Series::zero(3);
  Series b = Series::zero(4);
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "scalars.OrderMismatch");
  }
}

TEST(Series, InvertExamples) {
  EXPECT_EQ(invert(Series(1)), Series(1));
  Series a = 1 + Series::lambda();
  Series inv = invert(a);
  for (int r = 0; r <= inv.order(); ++r) EXPECT_EQ(inv[r], Gauss(r % 2 == 0 ? 1 : -1));
  EXPECT_EQ(a * inv, Series(1));
  try {
    invert(Series::lambda());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "scalars.NonInvertible");
  }
}

TEST(Series, InvertRandomUnits) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < kIterations; ++it) {
    Series a = random_series(rng, false);
    if (a[0].is_zero()) a[0] = Gauss(1);
    EXPECT_EQ(invert(a) * a, Series(1));
  }
}

TEST(Series, SignExamples) {
  Series l = Series::lambda();
  EXPECT_EQ(sign(3 * l * l - 7 * l * l * l), Sign::positive);
  EXPECT_EQ(sign(Series(0)), Sign::zero);
  EXPECT_EQ(sign(-l + 100 * l * l), Sign::negative);
  try {
    sign(Series(Gauss::i()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "scalars.NonRealSeries");
  }
}

TEST(Series, NonArchimedean) {
  Series l = Series::lambda();
  for (long n : {1L, 10L, 1000L, 1000000L}) EXPECT_EQ(sign(1 - Series(n) * l), Sign::positive);
}

TEST(Series, TrichotomyAndConeClosure) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < kIterations; ++it) {
    Series a = random_series(rng, true, 2);
    Series b = random_series(rng, true, 2);
    if (rng() % 3 == 0)
      for (int r = 0; r < 3; ++r) a[r] = Gauss();
    Sign sa = sign(a);
    EXPECT_EQ(sign(-a), static_cast<Sign>(-static_cast<int>(sa)));
    EXPECT_EQ(sa == Sign::zero, a.is_zero());
    if (sa == Sign::positive && sign(b) == Sign::positive) {
      EXPECT_EQ(sign(a + b), Sign::positive);
      EXPECT_EQ(sign(a * b), Sign::positive);
    }
  }
}

TEST(Gauss, NormPositiveIffNonzero) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < kIterations; ++it) {
    Gauss z(Rational(static_cast<long>(rng() % 7) - 3, 2), Rational(static_cast<long>(rng() % 7) - 3, 3));
    Gauss n = z.conj() * z;
    EXPECT_TRUE(n.is_real());
    EXPECT_EQ(sgn(n.re) > 0, !z.is_zero());
  }
}

TEST(Series, SqrtExamples) {
  Series l = Series::lambda();
  EXPECT_EQ(sqrt(1 + 2 * l + l * l), 1 + l);
  EXPECT_EQ(sqrt(Series(4)), Series(2));
  Series r = sqrt(1 + l);
  EXPECT_EQ(r * r, 1 + l);
  EXPECT_EQ(r[1], Gauss(Rational(1, 2)));
  EXPECT_EQ(r[2], Gauss(Rational(-1, 8)));
  try {
    sqrt(Series(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "scalars.NoExactRoot");
  }
  try {
    sqrt(-1 + l);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "scalars.NotPositive");
  }
}

TEST(Series, SqrtRandomSquares) {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 200; ++it) {
    Series a = random_series(rng, true);
    a[0] = Gauss(Rational(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 3) + 1));
    Series sq = a * a;
    Series root = sqrt(sq);
    EXPECT_EQ(root * root, sq);
    EXPECT_GT(sgn(root[0].re), 0);
  }
}

TEST(Series, GradedDivide) {
  Series l = Series::lambda();
  Series b = 2 * l * l;
  Series a = 6 * l * l + 4 * l * l * l;
  Series q = graded_divide(a, b);
  EXPECT_EQ(q, 3 + 2 * l);
}

TEST(Rational, SerializesAsFraction) {
  EXPECT_EQ(to_string(Rational(3)), "3/1");
  EXPECT_EQ(to_string(Rational(-2, 4)), "-1/2");
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
}

TEST(Eigen, SeriesMatrixProduct) {
  SeriesMatrix m = identity_matrix(2);
  m(0, 1) = Series::lambda();
  SeriesMatrix p = m * m;
  EXPECT_EQ(p(0, 1), 2 * Series::lambda());
  SeriesMatrix h = hermitian_adjoint(m);
  EXPECT_EQ(h(1, 0), Series::lambda());
}
