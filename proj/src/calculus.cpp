#include "starrep/calculus.hpp"

#include <ostream>

#include "starrep/errors.hpp"

namespace starrep {

Element star_power(const Algebra& a, const Element& x, int k) {
  Element out = a.unit();
  for (int i = 0; i < k; ++i) out = a.multiply(out, x);
  return out;
}

namespace {

// sum_k c_k X^k for X = O(lambda); the sum is finite modulo lambda^(N+1).
template <typename Coef>
Element nilpotent_series(const Algebra& a, const Element& x, Coef coef, bool constant = true) {
  if (!x.is_zero() && valuation(x) < 1)
    throw Error("staralg.NonNilpotentInput", "argument has a nonzero classical part");
  Element out = constant ? a.unit() : Element();
  Element power = a.unit();
  for (int k = 1; k <= default_order(); ++k) {
    power = a.multiply(power, x);
    if (power.is_zero()) break;
    out += Series(Gauss(coef(k))) * power;
  }
  return out;
}

}  // namespace

Element star_inverse(const Algebra& a, const Element& u) {
  Element v0 = a.classical_inverse(classical_part(u));
  Element e = a.unit() - a.multiply(u, v0);
  Element v = a.multiply(v0, nilpotent_series(a, e, [](int) -> Rational { return Rational(1); }));
  if (a.multiply(u, v) != a.unit() || a.multiply(v, u) != a.unit())
    throw Error("staralg.NonInvertibleClassicalPart", "inverse does not replay in " + a.id());
  return v;
}

Element binomial_series(const Algebra& a, const Element& x, const Rational& exponent) {
  return nilpotent_series(a, x, [&](int k) -> Rational {
    Rational c(1);
    for (int j = 0; j < k; ++j) c *= (exponent - j) / Rational(j + 1);
    return c;
  });
}

bool operator==(const LogElement& a, const LogElement& b) { return a.turns == b.turns && a.rest == b.rest; }
LogElement operator+(const LogElement& a, const LogElement& b) { return {a.turns + b.turns, a.rest + b.rest}; }
LogElement operator-(const LogElement& a) { return {-a.turns, -a.rest}; }
std::ostream& operator<<(std::ostream& os, const LogElement& l) {
  return os << "turns " << l.turns << "; rest " << l.rest;
}

Element star_exp(const Algebra& a, const LogElement& t) {
  Rational fact(1);
  Element series = nilpotent_series(a, t.rest, [&](int k) -> Rational {
    fact *= k;
    return Rational(1) / fact;
  });
  if (t.turns.is_zero()) return series;
  if (valuation(t.turns) < 1 && lambda_part(t.turns, 0) != t.turns)
    throw Error("staralg.DomainRestriction", "phase part must be lambda-free");
  return a.multiply(a.phase_exponential(t.turns), series);
}

LogElement star_log(const Algebra& a, const Element& u) {
  Element turns = a.phase_logarithm(classical_part(u));
  Element w = a.multiply(a.phase_exponential(-turns), u);
  Element y = w - a.unit();
  if (!y.is_zero() && valuation(y) < 1)
    throw Error("staralg.DomainRestriction", "classical part is not a phase times the unit");
  Element rest = nilpotent_series(a, y, [](int k) -> Rational { return Rational(k % 2 ? 1 : -1) / k; }, false);
  // Zero turns are kept as the zero element.
  Element clean;
  for (const auto& [m, c] : turns.terms())
    if (!c.is_zero()) clean.add(m, c);
  return {clean, rest};
}

LogElement bch_compose(const Algebra& a, const LogElement& s, const LogElement& t) {
  Element product = a.multiply(star_exp(a, {Element(), s.rest}), star_exp(a, {Element(), t.rest}));
  LogElement r = star_log(a, product);
  // product = 1 + O(lambda), so r.turns vanishes.
  Element turns = s.turns + t.turns;
  return {turns, r.rest};
}

Element star_square_root(const Algebra& a, const Element& target, const Element& b0) {
  Element b0inv = star_inverse(a, b0);
  Element c = a.multiply(a.involution(b0inv), a.multiply(target, b0inv));
  Element x = c - a.unit();
  if (!x.is_zero() && valuation(x) < 1)
    throw Error("staralg.ClassicalMismatch", "classical part of the target is not B0* B0");
  Element b = a.multiply(binomial_sqrt(a, x), b0);
  if (a.multiply(a.involution(b), b) != target)
    throw Error("staralg.ClassicalMismatch", "square root does not replay (target not Hermitian?)");
  return b;
}

namespace {

void record(AxiomReport& r, const Element& lhs, const Element& rhs, const std::string& what) {
  ++r.samples;
  if (!r.pass || lhs == rhs) return;
  r.pass = false;
  r.first_order = valuation(lhs - rhs);
  r.counterexample = what + ": lambda^" + std::to_string(r.first_order) +
                     " coefficient differs: " + to_string(lambda_part(lhs - rhs, r.first_order));
}

}  // namespace

AxiomReport check_associativity(const Algebra& a, int samples, std::mt19937_64& rng) {
  AxiomReport r;
  for (int s = 0; s < samples; ++s) {
    Element f = a.random_element(rng), g = a.random_element(rng), h = a.random_element(rng);
    record(r, a.multiply(a.multiply(f, g), h), a.multiply(f, a.multiply(g, h)),
           "f=" + to_string(f) + " g=" + to_string(g) + " h=" + to_string(h));
  }
  return r;
}

AxiomReport check_hermitian(const Algebra& a, int samples, std::mt19937_64& rng) {
  AxiomReport r;
  for (int s = 0; s < samples; ++s) {
    Element f = a.random_element(rng), g = a.random_element(rng);
    record(r, a.involution(a.multiply(f, g)), a.multiply(a.involution(g), a.involution(f)),
           "f=" + to_string(f) + " g=" + to_string(g));
    record(r, a.involution(a.involution(f)), f, "involutivity f=" + to_string(f));
  }
  return r;
}

AxiomReport check_unit(const Algebra& a, int samples, std::mt19937_64& rng) {
  AxiomReport r;
  const Element one = a.unit();
  for (int s = 0; s < samples; ++s) {
    Element f = a.random_element(rng);
    record(r, a.multiply(one, f), f, "left unit f=" + to_string(f));
    record(r, a.multiply(f, one), f, "right unit f=" + to_string(f));
  }
  return r;
}

Element commutator(const Algebra& a, const Element& x, const Element& y) { return a.multiply(x, y) - a.multiply(y, x); }

bool is_central(const Algebra& a, const Element& x) {
  for (const auto& g : a.generators())
    if (!commutator(a, x, g).is_zero()) return false;
  return true;
}

}  // namespace starrep
