#include <gtest/gtest.h>

#include "starrep/algebras.hpp"
#include "starrep/errors.hpp"
#include "starrep/models.hpp"
#include "starrep/positivity.hpp"
#include "starrep/random.hpp"

using namespace starrep;

namespace {

Series lam(long c, int power) { return Series(c) * Series::lambda(power); }

}  // namespace

TEST(Gram, WickVacuumIsDiagonal) {
  auto w = PolynomialAlgebra::wick();
  std::vector<Element> basis{w->unit(), w->monomial({1, 0}), w->monomial({2, 0})};
  SeriesMatrix g = gram_matrix(wick_vacuum(w), basis);
  SeriesMatrix expect = zero_matrix(3, 3);
  expect(0, 0) = Series(1);
  expect(1, 1) = lam(1, 1);
  expect(2, 2) = lam(2, 2);
  EXPECT_EQ(g, expect);
}

TEST(Gram, WickVacuumFactorialsOnPowers) {
  auto w = PolynomialAlgebra::wick();
  auto omega = wick_vacuum(w);
  long fact = 1;
  for (int r = 0; r <= 5; ++r) {
    if (r > 0) fact *= r;
    for (int s = 0; s <= 5; ++s) {
      Series v = omega(w->multiply(w->monomial({0, r}), w->monomial({s, 0})));
      EXPECT_EQ(v, r == s ? lam(fact, r) : Series(0));
    }
  }
}

TEST(Gram, ZeroFunctionalGivesZeroMatrix) {
  auto t = standard_twisted_matrix(2);
  LinearFunctional zero(t, {}, true);
  EXPECT_TRUE(is_zero(gram_matrix(zero, matrix_units(2))));
}

TEST(Positivity, WickVacuumIsGradedDiagonal) {
  auto w = PolynomialAlgebra::wick();
  auto omega = wick_vacuum(w);
  auto cert = is_positive_functional(omega, polynomial_spanning(*w, 3));
  EXPECT_EQ(cert.kind, PositivityCertificate::Kind::graded_diagonal);
  EXPECT_TRUE(cert.verify(omega));
  std::vector<Series> expect{Series(1), lam(1, 1), lam(2, 2), lam(6, 3)};
  EXPECT_EQ(cert.pivots, expect);
}

TEST(Positivity, MoyalCoefficientOfXHasNegativeWitness) {
  auto m = PolynomialAlgebra::moyal(1);
  LinearFunctional omega(m, {{Monomial{1, 0}, Series(1)}}, true);
  // brute force over a = c0 + c1 x with small integer coefficients
  bool found = false;
  for (long c0 = -2; c0 <= 2 && !found; ++c0)
    for (long c1 = -2; c1 <= 2 && !found; ++c1) {
      Element a = Series(c0) * m->unit() + Series(c1) * m->variable(0);
      found = sign(omega(m->multiply(m->involution(a), a))) == Sign::negative;
    }
  EXPECT_TRUE(found);
  auto cert = is_positive_functional(omega, {m->unit(), m->variable(0)});
  ASSERT_EQ(cert.kind, PositivityCertificate::Kind::witness_negative);
  EXPECT_EQ(sign(cert.witness_value), Sign::negative);
  EXPECT_TRUE(cert.verify(omega));
}

TEST(Positivity, TwistedTraceFactorizes) {
  for (int k : {2, 3}) {
    auto t = standard_twisted_matrix(k);
    // 1/3 is not a norm from Q(i), so M_3 uses the unnormalised trace
    auto omega = k == 2 ? trace_state(t, k) : weighted_trace(t, k, {Rational(1), Rational(1), Rational(2)});
    auto cert = is_positive_functional(omega, matrix_units(k));
    ASSERT_EQ(cert.kind, PositivityCertificate::Kind::gram_factorization) << cert.detail;
    EXPECT_EQ(mul(hermitian_adjoint(cert.factor), cert.factor), cert.gram);
    EXPECT_TRUE(cert.verify(omega));
    // order zero is the classical trace Gram
    auto classical = omega.on(t->classical());
    EXPECT_EQ(coefficient(cert.gram, 0), coefficient(gram_matrix(classical, matrix_units(k)), 0));
  }
}

TEST(Positivity, NormalisedTraceOnThreeIsGradedDiagonal) {
  auto t = standard_twisted_matrix(3);
  auto omega = trace_state(t, 3);
  auto cert = is_positive_functional(omega, matrix_units(3));
  EXPECT_EQ(cert.kind, PositivityCertificate::Kind::graded_diagonal);
  EXPECT_TRUE(cert.verify(omega));
}

TEST(Positivity, DegenerateFunctionalUnderAdversarialTwistIsUnknown) {
  GaussMatrix n = gauss_zero(2, 2);
  n(0, 1) = Gauss(1);
  auto t = twisted_matrix(2, {{left_multiplication_map(n)}});
  auto omega0 = weighted_trace(t->classical(), 2, {Rational(1), Rational(0)});
  auto [omega, cert] = deform_functional(omega0, t, matrix_units(2));
  EXPECT_EQ(cert.kind, PositivityCertificate::Kind::unknown);
  EXPECT_FALSE(cert.positive());
}

TEST(Positivity, DeformedFunctionalsAreCertified) {
  auto t = standard_twisted_matrix(2);
  auto [omega, cert] = deform_functional(trace_state(t->classical(), 2), t, matrix_units(2));
  EXPECT_EQ(cert.kind, PositivityCertificate::Kind::gram_factorization);
  auto w = PolynomialAlgebra::wick();
  auto [wo, wc] = deform_functional(wick_vacuum(std::dynamic_pointer_cast<const PolynomialAlgebra>(w->classical())), w,
                                    polynomial_spanning(*w, 3));
  EXPECT_TRUE(wc.positive());
  EXPECT_TRUE(wc.verify(wo));
}

TEST(Positivity, CertifiedFunctionalsAreReal) {
  auto t = standard_twisted_matrix(2);
  EXPECT_TRUE(is_real_functional(trace_state(t, 2), matrix_units(2)));
  auto w = PolynomialAlgebra::wick();
  EXPECT_TRUE(is_real_functional(wick_vacuum(w), polynomial_spanning(*w, 4)));
  LinearFunctional imaginary(t, {{Monomial{0, 0}, Series(Gauss::i())}}, true);
  EXPECT_FALSE(is_real_functional(imaginary, matrix_units(2)));
}

TEST(CauchySchwarz, EqualArgumentsGiveEquality) {
  auto t = standard_twisted_matrix(2);
  auto omega = trace_state(t, 2);
  auto cert = is_positive_functional(omega, matrix_units(2));
  std::mt19937_64 rng(31);
  Element a = t->random_element(rng);
  EXPECT_TRUE(cauchy_schwarz_check(omega, cert, a, a));
  Series s = omega(t->multiply(t->involution(a), a));
  EXPECT_EQ(s * s.conj(), s * s);
}

TEST(CauchySchwarz, WickLowOrders) {
  auto w = PolynomialAlgebra::wick();
  auto omega = wick_vacuum(w);
  auto cert = is_positive_functional(omega, polynomial_spanning(*w, 3));
  Element z = w->monomial({1, 0}), z2 = w->monomial({2, 0});
  EXPECT_TRUE(cauchy_schwarz_check(omega, cert, z, z2));
  // |omega(zbar z^2)|^2 = 0 < lambda * 2 lambda^2
  EXPECT_EQ(omega(w->multiply(w->involution(z), z2)), Series(0));
  EXPECT_TRUE(cauchy_schwarz_check(omega, cert, w->unit() + z, z + z2));
}

TEST(CauchySchwarz, RandomPairsUnderTraceState) {
  std::mt19937_64 rng(32);
  for (int k : {2, 3}) {
    auto t = standard_twisted_matrix(k);
    auto omega = trace_state(t, k);
    auto cert = is_positive_functional(omega, matrix_units(k));
    for (int s = 0; s < 500; ++s)
      ASSERT_TRUE(cauchy_schwarz_check(omega, cert, t->random_element(rng), t->random_element(rng)));
  }
}

TEST(CauchySchwarz, NeedsCertificate) {
  auto m = PolynomialAlgebra::moyal(1);
  LinearFunctional omega(m, {{Monomial{1, 0}, Series(1)}}, true);
  auto cert = is_positive_functional(omega, {m->unit(), m->variable(0)});
  try {
    cauchy_schwarz_check(omega, cert, m->unit(), m->unit());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "positivity.UncertifiedFunctional");
  }
}

TEST(AlgebraicPositivity, UnitAndSquares) {
  auto m = PolynomialAlgebra::moyal(1);
  auto one = algebraically_positive(*m, {{Series(1), m->unit()}});
  EXPECT_EQ(one.value, m->unit());
  EXPECT_TRUE(one.verify(*m));
  Element x = m->variable(0);
  auto sq = algebraically_positive(*m, {{Series(1), x}});
  EXPECT_EQ(sq.value, m->monomial({2, 0}));
  EXPECT_EQ(sq.terms.size(), 1u);
  try {
    algebraically_positive(*m, {{-Series::lambda(), x}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "positivity.NonPositiveCoefficient");
  }
}

TEST(AlgebraicPositivity, ShippedFunctionalsAreNonnegative) {
  std::mt19937_64 rng(33);
  auto t = standard_twisted_matrix(2);
  auto omega_t = trace_state(t, 2);
  auto w = PolynomialAlgebra::wick();
  auto omega_w = wick_vacuum(w);
  auto wick_span = polynomial_spanning(*w, 2);
  for (int s = 0; s < 50; ++s) {
    std::vector<std::pair<Series, Element>> tt, tw;
    for (int i = 0; i < 3; ++i) {
      Series c = Series(uniform_int(rng, 1, 4)) * Series::lambda(static_cast<int>(uniform_int(rng, 0, 2)));
      tt.emplace_back(c, t->random_element(rng));
      Element f;
      for (const auto& b : wick_span) f += Series(random_gauss(rng)) * b;
      tw.emplace_back(c, f);
    }
    EXPECT_TRUE(is_nonnegative(omega_t(algebraically_positive(*t, tt).value)));
    EXPECT_TRUE(is_nonnegative(omega_w(algebraically_positive(*w, tw).value)));
  }
}

TEST(Functional, FromBasisSolvesOnMonomials) {
  auto t = standard_twisted_matrix(2);
  std::vector<Element> basis{t->unit(), Element::term({0, 0}, Series(1)), Element::term({0, 1}, Series(1)),
                             Element::term({1, 0}, Series(1))};
  EXPECT_THROW(LinearFunctional::from_basis(t, basis, {Series(1), Series(1), Series(0), Series(0)}), Error);
  std::vector<Element> classical{Element::term({0, 0}, Series(1)) + Element::term({1, 1}, Series(1)),
                                 Element::term({0, 0}, Series(1)), Element::term({0, 1}, Series(1)),
                                 Element::term({1, 0}, Series(1))};
  auto omega = LinearFunctional::from_basis(t, classical, {Series(1), Series(Rational(1, 2)), Series(0), Series(0)});
  EXPECT_EQ(omega(Element::term({1, 1}, Series(1))), Series(Rational(1, 2)));
  LinearFunctional partial(t, {{Monomial{0, 0}, Series(1)}});
  EXPECT_THROW(partial(Element::term({1, 1}, Series(1))), Error);
}
