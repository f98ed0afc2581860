#pragma once

// Star calculus over any Algebra: powers, inverses, binomial series,
// exponential and logarithm on the decidable domain, square roots B*B = A,
// and sampled axiom checks.

#include <random>
#include <string>

#include "starrep/algebra.hpp"

namespace starrep {

Element star_power(const Algebra& a, const Element& x, int k);

/// Two-sided inverse. Throws staralg.NonInvertibleClassicalPart.
Element star_inverse(const Algebra& a, const Element& u);

/// (1 + X)^exponent as a binomial series in X. Throws
/// staralg.NonNilpotentInput unless X = O(lambda).
Element binomial_series(const Algebra& a, const Element& x, const Rational& exponent);
inline Element binomial_invsqrt(const Algebra& a, const Element& x) { return binomial_series(a, x, Rational(-1, 2)); }
inline Element binomial_sqrt(const Algebra& a, const Element& x) { return binomial_series(a, x, Rational(1, 2)); }

/// Logarithm data: exp(2 pi i turns) * Exp(rest), with turns central,
/// lambda-free and rational in (1/4)Z, and rest = O(lambda).
struct LogElement {
  Element turns;
  Element rest;
};
bool operator==(const LogElement& a, const LogElement& b);
LogElement operator+(const LogElement& a, const LogElement& b);
LogElement operator-(const LogElement& a);
std::ostream& operator<<(std::ostream& os, const LogElement& l);

Element star_exp(const Algebra& a, const LogElement& t);
/// Throws staralg.DomainRestriction outside the decidable domain.
LogElement star_log(const Algebra& a, const Element& u);
/// Log(Exp(s) * Exp(t)).
LogElement bch_compose(const Algebra& a, const LogElement& s, const LogElement& t);

/// B with B* B = target and classical part B0. Throws
/// staralg.ClassicalMismatch unless target_0 = B0* B0 classically.
Element star_square_root(const Algebra& a, const Element& target, const Element& b0);

struct AxiomReport {
  bool pass = true;
  int samples = 0;
  int first_order = -1;  ///< least lambda-order of the first counterexample
  std::string counterexample;
};

/// (f g) h = f (g h) on random triples.
AxiomReport check_associativity(const Algebra& a, int samples, std::mt19937_64& rng);
/// (f g)* = g* f* and f** = f on random pairs.
AxiomReport check_hermitian(const Algebra& a, int samples, std::mt19937_64& rng);
/// 1 f = f = f 1 on random elements.
AxiomReport check_unit(const Algebra& a, int samples, std::mt19937_64& rng);

/// Commutes with every generator.
bool is_central(const Algebra& a, const Element& x);
Element commutator(const Algebra& a, const Element& x, const Element& y);

}  // namespace starrep
