#include "starrep/positivity.hpp"

#include <set>

#include "starrep/algebras.hpp"
#include "starrep/calculus.hpp"
#include "starrep/errors.hpp"

namespace starrep {

LinearFunctional::LinearFunctional(AlgebraPtr algebra, std::map<Monomial, Series> values, bool zero_elsewhere)
    : algebra_(std::move(algebra)), zero_elsewhere_(zero_elsewhere) {
  for (auto& [m, v] : values)
    if (!v.is_zero() || !zero_elsewhere) values_.emplace(m, v);
}

LinearFunctional LinearFunctional::from_basis(AlgebraPtr algebra, const std::vector<Element>& basis,
                                              const std::vector<Series>& values, bool zero_elsewhere) {
  if (basis.size() != values.size()) throw Error("positivity.InconsistentFunctional", "basis and values differ in length");
  std::set<Monomial> monos;
  for (const auto& b : basis) {
    if (classical_part(b) != b) throw Error("positivity.InconsistentFunctional", "spanning elements must be lambda-free");
    for (const auto& [m, c] : b.terms()) monos.insert(m);
  }
  std::vector<Monomial> cols(monos.begin(), monos.end());
  const auto nb = static_cast<Eigen::Index>(basis.size()), nm = static_cast<Eigen::Index>(cols.size());
  const int n = default_order();
  GaussMatrix a = gauss_zero(nb, nm), rhs = gauss_zero(nb, n + 1);
  for (Eigen::Index i = 0; i < nb; ++i) {
    for (Eigen::Index j = 0; j < nm; ++j) a(i, j) = basis[static_cast<std::size_t>(i)].coefficient(cols[static_cast<std::size_t>(j)])[0];
    for (int r = 0; r <= n; ++r) rhs(i, r) = values[static_cast<std::size_t>(i)][r];
  }
  if (gauss_rank(a) != nm)
    throw Error("positivity.InconsistentFunctional", "spanning list does not determine the functional on its monomials");
  auto x = gauss_solve(a, rhs);
  if (!x) throw Error("positivity.InconsistentFunctional", "values are inconsistent with the linear relations of the basis");
  std::map<Monomial, Series> vals;
  for (Eigen::Index j = 0; j < nm; ++j) {
    Series s;
    for (int r = 0; r <= n; ++r) s[r] = (*x)(j, r);
    vals.emplace(cols[static_cast<std::size_t>(j)], s);
  }
  return {std::move(algebra), vals, zero_elsewhere};
}

Series LinearFunctional::operator()(const Element& a) const {
  Series acc;
  for (const auto& [m, c] : a.terms()) {
    auto it = values_.find(m);
    if (it == values_.end()) {
      if (zero_elsewhere_) continue;
      throw Error("positivity.OutsideSpan", "functional is not defined on monomial " + to_string(Element::term(m, Series(1))));
    }
    acc += c * it->second;
  }
  return acc;
}

SeriesMatrix gram_matrix(const LinearFunctional& omega, const std::vector<Element>& basis) {
  const Algebra& a = *omega.algebra();
  const auto m = static_cast<Eigen::Index>(basis.size());
  SeriesMatrix g(m, m);
  std::vector<Element> stars;
  for (const auto& b : basis) stars.push_back(a.involution(b));
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index k = 0; k < m; ++k)
      g(j, k) = omega(a.multiply(stars[static_cast<std::size_t>(j)], basis[static_cast<std::size_t>(k)]));
  return g;
}

Element combine(const std::vector<Element>& basis, const SeriesVector& c) {
  Element e;
  for (std::size_t i = 0; i < basis.size(); ++i) e += c(static_cast<Eigen::Index>(i)) * basis[i];
  return e;
}

std::string to_string(PositivityCertificate::Kind k) {
  switch (k) {
    case PositivityCertificate::Kind::gram_factorization:
      return "gram_factorization";
    case PositivityCertificate::Kind::graded_diagonal:
      return "graded_diagonal";
    case PositivityCertificate::Kind::witness_negative:
      return "witness_negative";
    case PositivityCertificate::Kind::unknown:
      return "unknown";
  }
  return "?";
}

namespace {

SeriesMatrix diagonal_of(const std::vector<Series>& d, Eigen::Index size) {
  SeriesMatrix m = zero_matrix(size, size);
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return m;
}

// z in Q(i) with |z|^2 = d, searching d = n / q^2 with n a sum of two squares.
std::optional<Gauss> gaussian_root(const Rational& d) {
  if (sgn(d) <= 0) return std::nullopt;
  mpz_class q = d.get_den();
  mpz_class n = d.get_num() * q;
  if (n > 100000000) return std::nullopt;
  const long nn = n.get_si();
  for (long a = 0; 2 * a * a <= nn; ++a) {
    mpz_class b;
    mpz_class rest = nn - a * a;
    if (!mpz_perfect_square_p(rest.get_mpz_t())) continue;
    b = sqrt(rest);
    return Gauss(Rational(b, q), Rational(a, q));
  }
  return std::nullopt;
}

// B with B^H B = G when G_0 is definite and each pivot is a norm from Q(i).
std::optional<SeriesMatrix> factorize(const SeriesMatrix& g) {
  const Eigen::Index m = g.rows();
  if (m == 0) return std::nullopt;
  SeriesMatrix g0 = lift(coefficient(g, 0));
  GramQuotient q0 = GramQuotient::compute(g0);
  if (q0.status() != GramQuotient::Status::positive || q0.null_vectors().cols() != 0) return std::nullopt;
  // U^H G0 U = D with the pivot order as column order.
  GaussMatrix u = coefficient(q0.residuals(), 0);
  GaussMatrix uinv = gauss_inverse(u);
  GaussMatrix b0 = uinv;
  for (Eigen::Index p = 0; p < m; ++p) {
    const Gauss& d = q0.pivot_values()[static_cast<std::size_t>(p)][0];
    if (!d.is_real()) return std::nullopt;
    auto root = gaussian_root(d.re);
    if (!root) return std::nullopt;
    for (Eigen::Index j = 0; j < m; ++j) b0(p, j) = *root * uinv(p, j);
  }
  auto ma = MatrixAlgebra::make(ScalarAlgebra::instance(), static_cast<int>(m));
  Element b = star_square_root(*ma, matrix_element(g), matrix_element(lift(b0)));
  return element_matrix(b, static_cast<int>(m));
}

}  // namespace

bool PositivityCertificate::verify(const LinearFunctional& omega) const {
  if (gram_matrix(omega, basis) != gram) return false;
  switch (kind) {
    case Kind::gram_factorization:
      return mul(hermitian_adjoint(factor), factor) == gram;
    case Kind::graded_diagonal: {
      for (const auto& p : pivots)
        if (sign(p) != Sign::positive) return false;
      return mul(hermitian_adjoint(congruence), mul(gram, congruence)) == diagonal_of(pivots, congruence.cols());
    }
    case Kind::witness_negative: {
      const Algebra& a = *omega.algebra();
      Series v = omega(a.multiply(a.involution(witness), witness));
      return v == witness_value && sign(v) == Sign::negative;
    }
    case Kind::unknown:
      return true;
  }
  return false;
}

PositivityCertificate is_positive_functional(const LinearFunctional& omega, const std::vector<Element>& basis) {
  PositivityCertificate c;
  c.basis = basis;
  c.gram = gram_matrix(omega, basis);
  GramQuotient q = GramQuotient::compute(c.gram);
  c.detail = q.detail();
  if (q.status() == GramQuotient::Status::unknown) return c;
  if (q.status() == GramQuotient::Status::negative) {
    const Algebra& a = *omega.algebra();
    c.witness = combine(basis, q.witness());
    c.witness_value = omega(a.multiply(a.involution(c.witness), c.witness));
    if (c.witness_value.is_real() && sign(c.witness_value) == Sign::negative)
      c.kind = PositivityCertificate::Kind::witness_negative;
    else
      c.detail = "graded elimination found no replayable witness: " + q.detail();
    return c;
  }
  if (auto b = factorize(c.gram)) {
    c.kind = PositivityCertificate::Kind::gram_factorization;
    c.factor = *b;
    return c;
  }
  c.kind = PositivityCertificate::Kind::graded_diagonal;
  const Eigen::Index m = c.gram.rows();
  c.congruence = SeriesMatrix(m, q.residuals().cols() + q.null_vectors().cols());
  c.congruence << q.residuals(), q.null_vectors();
  c.pivots = q.pivot_values();
  return c;
}

bool cauchy_schwarz_check(const LinearFunctional& omega, const PositivityCertificate& cert, const Element& a,
                          const Element& b) {
  if (!cert.positive()) throw Error("positivity.UncertifiedFunctional", "Cauchy-Schwarz needs a positive certificate");
  const Algebra& alg = *omega.algebra();
  Element as = alg.involution(a), bs = alg.involution(b);
  Series s = omega(alg.multiply(as, b));
  Series lhs = s * s.conj();
  Series rhs = omega(alg.multiply(as, a)) * omega(alg.multiply(bs, b));
  return is_nonnegative(rhs - lhs);
}

bool is_real_functional(const LinearFunctional& omega, const std::vector<Element>& spanning) {
  for (const auto& s : spanning)
    if (omega(omega.algebra()->involution(s)) != omega(s).conj()) return false;
  return true;
}

bool PositiveSum::verify(const Algebra& a) const {
  Element acc;
  for (const auto& [c, x] : terms) {
    if (!c.is_real() || sign(c) != Sign::positive) return false;
    acc += c * a.multiply(a.involution(x), x);
  }
  return acc == value;
}

PositiveSum algebraically_positive(const Algebra& a, const std::vector<std::pair<Series, Element>>& terms) {
  PositiveSum out;
  for (const auto& [c, x] : terms) {
    if (!c.is_real() || sign(c) != Sign::positive)
      throw Error("positivity.NonPositiveCoefficient", "coefficient " + to_string(c) + " is not positive");
    out.value += c * a.multiply(a.involution(x), x);
    out.terms.emplace_back(c, x);
  }
  return out;
}

std::pair<LinearFunctional, PositivityCertificate> deform_functional(const LinearFunctional& omega0,
                                                                     AlgebraPtr deformed,
                                                                     const std::vector<Element>& basis) {
  LinearFunctional omega = omega0.on(std::move(deformed));
  PositivityCertificate cert = is_positive_functional(omega, basis);
  return {omega, cert};
}

}  // namespace starrep
