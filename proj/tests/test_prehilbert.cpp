#include <gtest/gtest.h>

#include "starrep/algebras.hpp"
#include "starrep/calculus.hpp"
#include "starrep/errors.hpp"
#include "starrep/prehilbert.hpp"
#include "starrep/random.hpp"

using namespace starrep;

namespace {

SeriesMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  SeriesMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = random_series(rng, 2);
  return m;
}

// G = B^H B with B = 1 + lambda (random), positive definite.
ModulePtr random_module(std::mt19937_64& rng, Eigen::Index n) {
  SeriesMatrix b = identity_matrix(n) + scale(Series::lambda(), random_matrix(rng, n, n));
  return make_module(Ring::formal, mul(hermitian_adjoint(b), b));
}

SeriesMatrix diag(std::vector<Series> d) {
  SeriesMatrix m = zero_matrix(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return m;
}

}  // namespace

TEST(Module, RejectsBadGram) {
  SeriesMatrix g = zero_matrix(2, 2);
  g(0, 1) = Series(1);
  EXPECT_THROW(make_module(Ring::formal, g), Error);
  EXPECT_THROW(make_module(Ring::complex, diag({Series(1), Series::lambda()})), Error);
  EXPECT_NO_THROW(make_module(Ring::formal, diag({Series(1), Series::lambda()})));
}

TEST(Adjoint, IdentityAndTheta) {
  std::mt19937_64 rng(41);
  auto h = random_module(rng, 3);
  EXPECT_TRUE(equal(adjoint(identity_operator(h)), identity_operator(h)));
  SeriesVector phi = random_matrix(rng, 3, 1), psi = random_matrix(rng, 3, 1);
  EXPECT_TRUE(equal(adjoint(theta_operator(h, phi, psi)), theta_operator(h, psi, phi)));
}

TEST(Adjoint, RulesOnRandomOperators) {
  std::mt19937_64 rng(42);
  for (int s = 0; s < 10; ++s) {
    auto h1 = random_module(rng, 2), h2 = random_module(rng, 3), h3 = random_module(rng, 2);
    Operator a{h1, h2, random_matrix(rng, 3, 2)}, b{h1, h2, random_matrix(rng, 3, 2)}, c{h2, h3, random_matrix(rng, 2, 3)};
    Series z = random_series(rng), w = random_series(rng);
    EXPECT_TRUE(equal(adjoint(compose(c, a)), compose(adjoint(a), adjoint(c))));
    EXPECT_TRUE(equal(adjoint(scale(z, a) + scale(w, b)), scale(z.conj(), adjoint(a)) + scale(w.conj(), adjoint(b))));
    EXPECT_TRUE(equal(adjoint(adjoint(a)), a));
    // <A x, y> = <x, A* y> on generators
    Operator as = adjoint(a);
    for (Eigen::Index i = 0; i < 2; ++i)
      for (Eigen::Index j = 0; j < 3; ++j)
        EXPECT_EQ(h2->inner(a(h1->basis_vector(i)), h2->basis_vector(j)), h1->inner(h1->basis_vector(i), as(h2->basis_vector(j))));
    // uniqueness: a second solve gives the same matrix
    EXPECT_EQ(adjoint(a).matrix, as.matrix);
  }
}

TEST(Adjoint, InconsistentSystemIsRejected) {
  auto dom = make_module(Ring::formal, diag({Series(1), Series::lambda()}));
  auto cod = standard_module(Ring::formal, 2);
  try {
    adjoint(Operator{dom, cod, identity_matrix(2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "prehilbert.NotAdjointable");
  }
}

TEST(Isometry, Examples) {
  auto c2 = standard_module(Ring::complex, 2), c3 = standard_module(Ring::complex, 3);
  EXPECT_EQ(classify_isometry(identity_operator(c3)), IsometryClass::unitary);
  SeriesMatrix emb = zero_matrix(3, 2);
  emb(0, 0) = Series(1);
  emb(1, 1) = Series(1);
  EXPECT_EQ(classify_isometry({c2, c3, emb}), IsometryClass::isometric);
  auto l1 = standard_module(Ring::formal, 1);
  SeriesMatrix u(1, 1);
  u(0, 0) = Series(1) + Series::lambda();
  EXPECT_EQ(classify_isometry({l1, l1, u}), IsometryClass::neither);
  // a rotation by a Gaussian-rational unit is unitary
  SeriesMatrix rot(2, 2);
  rot << Series(Rational(3, 5)), Series(Rational(-4, 5)), Series(Rational(4, 5)), Series(Rational(3, 5));
  EXPECT_EQ(classify_isometry({c2, c2, rot}), IsometryClass::unitary);
}

TEST(Theta, StandardExamples) {
  auto c2 = standard_module(Ring::complex, 2);
  SeriesVector e1 = c2->basis_vector(0);
  SeriesMatrix expect = zero_matrix(2, 2);
  expect(0, 0) = Series(1);
  EXPECT_EQ(theta_operator(c2, e1, e1).matrix, expect);

  std::mt19937_64 rng(43);
  auto h = random_module(rng, 3);
  SeriesVector phi = random_matrix(rng, 3, 1), psi = random_matrix(rng, 3, 1), psi2 = random_matrix(rng, 3, 1),
               chi = random_matrix(rng, 3, 1);
  // Theta_{phi,psi} Theta_{psi2,chi} = <psi, psi2> Theta_{phi,chi}
  EXPECT_TRUE(equal(compose(theta_operator(h, phi, psi), theta_operator(h, psi2, chi)),
                    scale(h->inner(psi, psi2), theta_operator(h, phi, chi))));
  Operator b{h, h, random_matrix(rng, 3, 3)};
  EXPECT_TRUE(equal(compose(b, theta_operator(h, phi, psi)), theta_operator(h, b(phi), psi)));
  // rank one
  SeriesMatrix t = theta_operator(h, phi, psi).matrix;
  for (Eigen::Index j = 0; j < 3; ++j) {
    Series c = h->inner(psi, h->basis_vector(j));
    EXPECT_EQ(SeriesVector(t.col(j)), SeriesVector(scale(c, phi)));
  }
}

TEST(ClassicalLimit, ExtendedSpaceIsOriginal) {
  SeriesMatrix g0(2, 2);
  g0 << Series(2), Series(Gauss(Rational(1), Rational(1))), Series(Gauss(Rational(1), Rational(-1))), Series(3);
  auto h = make_module(Ring::formal, g0);
  auto lim = classical_limit_space(h);
  EXPECT_EQ(lim.space->generators(), 2);
  EXPECT_EQ(lim.space->gram(), g0);
  EXPECT_EQ(lim.space->ring(), Ring::complex);
}

TEST(ClassicalLimit, DropsLambdaDirections) {
  auto h = make_module(Ring::formal, diag({Series(1), Series::lambda()}));
  auto lim = classical_limit_space(h);
  EXPECT_EQ(lim.space->generators(), 1);
  auto zero = make_module(Ring::formal, SeriesMatrix(0, 0));
  EXPECT_EQ(classical_limit_space(zero).space->generators(), 0);
}

TEST(ClassicalLimit, IsFunctorialOnOperators) {
  std::mt19937_64 rng(44);
  // Gram with a classical kernel: diag(1, lambda, 2) conjugated by a random unit
  SeriesMatrix b = identity_matrix(3) + scale(Series::lambda(), random_matrix(rng, 3, 3));
  b(0, 1) = random_series(rng);
  auto h = make_module(Ring::formal, mul(hermitian_adjoint(b), mul(diag({Series(1), Series::lambda(), Series(2)}), b)));
  auto lim = classical_limit_space(h);
  EXPECT_EQ(lim.space->generators(), 2);
  EXPECT_TRUE(equal(classical_limit_operator(identity_operator(h), lim, lim), identity_operator(lim.space)));
  auto m3 = MatrixAlgebra::make(ScalarAlgebra::instance(), 3);
  SeriesMatrix binv = element_matrix(star_inverse(*m3, matrix_element(b)), 3);
  // B^-1 M B is adjointable iff M maps into the lambda-direction only through lambda
  auto random_adjointable = [&]() {
    SeriesMatrix m = random_matrix(rng, 3, 3);
    m(0, 1) *= Series::lambda();
    m(2, 1) *= Series::lambda();
    return Operator{h, h, mul(binv, mul(m, b))};
  };
  EXPECT_THROW(adjoint(Operator{h, h, mul(binv, mul(lift(gauss_identity(3)) + lift(coefficient(random_matrix(rng, 3, 3), 0)), b))}), Error);
  for (int s = 0; s < 8; ++s) {
    Operator x = random_adjointable(), y = random_adjointable();
    Operator cx = classical_limit_operator(x, lim, lim), cy = classical_limit_operator(y, lim, lim);
    EXPECT_TRUE(equal(classical_limit_operator(compose(x, y), lim, lim), compose(cx, cy)));
    EXPECT_TRUE(equal(classical_limit_operator(adjoint(x), lim, lim), adjoint(cx)));
  }
}

TEST(Intertwiner, IdentityAndMutation) {
  auto c2 = standard_module(Ring::complex, 2);
  Representation pi;
  pi.carrier = c2;
  Element a = Element::term({0}, Series(1)), b = Element::term({1}, Series(1));
  pi.spanning = {a, b};
  pi.act = [](const Element& e) {
    SeriesMatrix m = zero_matrix(2, 2);
    m(0, 0) = e.coefficient({0});
    m(1, 1) = e.coefficient({1});
    return m;
  };
  auto r = verify_intertwiner(identity_operator(c2), pi, pi);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.isometry, IsometryClass::unitary);
  SeriesMatrix swap = zero_matrix(2, 2);
  swap(0, 1) = Series(1);
  swap(1, 0) = Series(1);
  auto bad = verify_intertwiner({c2, c2, swap}, pi, pi);
  EXPECT_FALSE(bad.pass);
  EXPECT_NE(bad.detail.find(to_string(a)), std::string::npos);
}
