#pragma once

// Algebra elements and the star-algebra interface.
//
// Every element is a finite linear combination of monomials with formal
// scalar coefficients. What a monomial means is up to the algebra:
// exponent vectors for polynomial algebras, [p] for point indicators of a
// discrete algebra, [i, j, inner...] for the (i, j) entry of a matrix over
// another algebra.

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "starrep/scalars.hpp"

namespace starrep {

using Monomial = std::vector<int>;

class Element {
 public:
  Element() = default;
  static Element term(Monomial m, Series c);
  static Element scalar(const Series& c) { return term({}, c); }

  const std::map<Monomial, Series>& terms() const { return terms_; }
  Series coefficient(const Monomial& m) const;
  void add(const Monomial& m, const Series& c);
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Series& s);

 private:
  std::map<Monomial, Series> terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator-(Element a);
Element operator*(const Series& s, Element a);
bool operator==(const Element& a, const Element& b);
inline bool operator!=(const Element& a, const Element& b) { return !(a == b); }
std::string to_string(const Element& e);
std::ostream& operator<<(std::ostream& os, const Element& e);

/// Least lambda-degree present (default_order()+1 for zero).
int valuation(const Element& e);
/// Coefficient of lambda^r, as a lambda-free element.
Element lambda_part(const Element& e, int r);
Element classical_part(const Element& e);
/// Keeps the orders strictly below r.
Element truncated_below(const Element& e, int r);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A unital associative *-algebra over C[[lambda]], truncated at the
/// default order.
class Algebra {
 public:
  virtual ~Algebra() = default;

  virtual std::string id() const = 0;
  virtual Element multiply(const Element& f, const Element& g) const = 0;
  virtual Element involution(const Element& f) const = 0;
  virtual Element unit() const = 0;
  /// Same carrier with the undeformed product.
  virtual AlgebraPtr classical() const = 0;
  /// Generators used for centrality and ideal checks.
  virtual std::vector<Element> generators() const = 0;
  virtual Element random_element(std::mt19937_64& rng) const = 0;

  /// Monomials forming a basis, for finite-dimensional algebras; empty
  /// otherwise.
  virtual std::vector<Monomial> basis_monomials() const { return {}; }
  virtual bool is_commutative() const { return false; }

  /// Inverse of a lambda-free element in the undeformed algebra. Throws
  /// staralg.NonInvertibleClassicalPart.
  virtual Element classical_inverse(const Element& u0) const;

  /// exp(2 pi i * turns) for a central lambda-free element with rational
  /// values in (1/4)Z. Throws staralg.DomainRestriction.
  virtual Element phase_exponential(const Element& turns) const;
  /// Inverse of phase_exponential on classical parts in {1, i, -1, -i}.
  virtual Element phase_logarithm(const Element& u0) const;

  Element star(const Element& f, const Element& g) const { return multiply(f, g); }
};

/// Coordinates with respect to basis_monomials(); throws if e has other monomials.
SeriesVector coordinates(const Algebra& a, const Element& e);
Element from_coordinates(const Algebra& a, const SeriesVector& c);

/// exp(2 pi i q) for q in (1/4)Z.
Gauss root_of_unity(const Rational& q);
/// q in [0, 1) with exp(2 pi i q) = z, for z in {1, i, -1, -i}.
Rational quarter_turns(const Gauss& z);

}  // namespace starrep
