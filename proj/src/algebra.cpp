#include "starrep/algebra.hpp"

#include <ostream>
#include <sstream>

#include "starrep/linalg.hpp"

namespace starrep {

Element Element::term(Monomial m, Series c) {
  Element e;
  e.add(m, c);
  return e;
}

Series Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Series::zero(default_order()) : it->second;
}

void Element::add(const Monomial& m, const Series& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Element& Element::operator*=(const Series& s) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator-(Element a) { return a *= Series(-1); }
Element operator*(const Series& s, Element a) { return a *= s; }

bool operator==(const Element& a, const Element& b) {
  if (a.size() != b.size()) return false;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

std::string to_string(const Element& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")[";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << "]";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << to_string(e); }

int valuation(const Element& e) {
  int v = default_order() + 1;
  for (const auto& [m, c] : e.terms()) v = std::min(v, c.valuation());
  return v;
}

Element lambda_part(const Element& e, int r) {
  Element out;
  for (const auto& [m, c] : e.terms())
    if (r <= c.order() && !c[r].is_zero()) out.add(m, Series(c[r]));
  return out;
}

Element classical_part(const Element& e) { return lambda_part(e, 0); }

Element truncated_below(const Element& e, int r) {
  Element out;
  for (const auto& [m, c] : e.terms()) {
    Series s = Series::zero(c.order());
    for (int k = 0; k < r && k <= c.order(); ++k) s[k] = c[k];
    out.add(m, s);
  }
  return out;
}

SeriesVector coordinates(const Algebra& a, const Element& e) {
  auto basis = a.basis_monomials();
  if (basis.empty()) throw Error("staralg.NoBasis", a.id() + " is not presented with a finite basis");
  SeriesVector c(static_cast<Eigen::Index>(basis.size()));
  std::size_t found = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    c(static_cast<Eigen::Index>(i)) = e.coefficient(basis[i]);
    if (!c(static_cast<Eigen::Index>(i)).is_zero()) ++found;
  }
  if (found != e.size()) throw Error("staralg.NotInAlgebra", "element has monomials outside the basis of " + a.id());
  return c;
}

Element from_coordinates(const Algebra& a, const SeriesVector& c) {
  auto basis = a.basis_monomials();
  Element e;
  for (std::size_t i = 0; i < basis.size(); ++i) e.add(basis[i], c(static_cast<Eigen::Index>(i)));
  return e;
}

Element Algebra::classical_inverse(const Element& u0) const {
  AlgebraPtr cl = classical();
  auto basis = cl->basis_monomials();
  if (basis.empty())
    throw Error("staralg.NonInvertibleClassicalPart", "no classical inversion procedure for " + id());
  const auto dim = static_cast<Eigen::Index>(basis.size());
  GaussMatrix left = gauss_zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    Element prod = cl->multiply(u0, Element::term(basis[static_cast<std::size_t>(j)], Series(1)));
    for (Eigen::Index i = 0; i < dim; ++i) left(i, j) = prod.coefficient(basis[static_cast<std::size_t>(i)])[0];
  }
  Element one = classical_part(cl->unit());
  GaussMatrix rhs(dim, 1);
  for (Eigen::Index i = 0; i < dim; ++i) rhs(i, 0) = one.coefficient(basis[static_cast<std::size_t>(i)])[0];
  if (gauss_rank(left) != dim)
    throw Error("staralg.NonInvertibleClassicalPart", "classical part is singular in " + id());
  auto x = gauss_solve(left, rhs);
  Element inv;
  for (Eigen::Index i = 0; i < dim; ++i) inv.add(basis[static_cast<std::size_t>(i)], Series((*x)(i, 0)));
  return inv;
}

Gauss root_of_unity(const Rational& q) {
  Rational four = q * 4;
  four.canonicalize();
  if (four.get_den() != 1) throw Error("staralg.DomainRestriction", "exp(2 pi i q) is not exact for q = " + to_string(q));
  mpz_class k = four.get_num() % 4;
  if (k < 0) k += 4;
  switch (k.get_si()) {
    case 0:
      return Gauss(1);
    case 1:
      return Gauss::i();
    case 2:
      return Gauss(-1);
    default:
      return -Gauss::i();
  }
}

Rational quarter_turns(const Gauss& z) {
  if (z == Gauss(1)) return Rational(0);
  if (z == Gauss::i()) return Rational(1, 4);
  if (z == Gauss(-1)) return Rational(1, 2);
  if (z == -Gauss::i()) return Rational(3, 4);
  throw Error("staralg.DomainRestriction", "classical phase " + to_string(z) + " is not a fourth root of unity");
}

namespace {

// q with e == q * u for lambda-free u, or nullopt.
std::optional<Gauss> proportionality(const Element& e, const Element& u) {
  if (u.is_zero()) return std::nullopt;
  const auto& [m0, c0] = *u.terms().begin();
  Gauss q = e.coefficient(m0)[0] / c0[0];
  if (Series(q) * u != e) return std::nullopt;
  return q;
}

}  // namespace

Element Algebra::phase_exponential(const Element& turns) const {
  if (turns.is_zero()) return unit();
  Element one = classical_part(unit());
  auto q = proportionality(turns, one);
  if (!q || !q->is_real())
    throw Error("staralg.DomainRestriction", "phase must be a rational multiple of the unit in " + id());
  return Series(root_of_unity(q->re)) * unit();
}

Element Algebra::phase_logarithm(const Element& u0) const {
  Element one = classical_part(unit());
  auto z = proportionality(u0, one);
  if (!z) throw Error("staralg.DomainRestriction", "classical part is not a multiple of the unit in " + id());
  return Series(Gauss(quarter_turns(*z))) * one;
}

}  // namespace starrep
