#pragma once

// Linear functionals over C[[lambda]], Gram matrices and positivity
// certificates.

#include <map>
#include <optional>

#include "starrep/algebra.hpp"
#include "starrep/linalg.hpp"

namespace starrep {

/// omega(monomial) for listed monomials. With `zero_elsewhere` the
/// functional vanishes on every other monomial; otherwise evaluating an
/// element outside the listed span throws positivity.OutsideSpan.
class LinearFunctional {
 public:
  LinearFunctional() = default;
  LinearFunctional(AlgebraPtr algebra, std::map<Monomial, Series> values, bool zero_elsewhere = false);
  /// From values on a lambda-free spanning list, solved order by order.
  /// Throws positivity.InconsistentFunctional.
  static LinearFunctional from_basis(AlgebraPtr algebra, const std::vector<Element>& basis,
                                     const std::vector<Series>& values, bool zero_elsewhere = false);

  Series operator()(const Element& a) const;
  const AlgebraPtr& algebra() const { return algebra_; }
  const std::map<Monomial, Series>& values() const { return values_; }
  bool zero_elsewhere() const { return zero_elsewhere_; }
  /// Same values over another algebra with the same carrier.
  LinearFunctional on(AlgebraPtr other) const { return {std::move(other), values_, zero_elsewhere_}; }

 private:
  AlgebraPtr algebra_;
  std::map<Monomial, Series> values_;
  bool zero_elsewhere_ = false;
};

/// G_jk = omega(b_j* b_k).
SeriesMatrix gram_matrix(const LinearFunctional& omega, const std::vector<Element>& basis);

/// sum_i c_i b_i
Element combine(const std::vector<Element>& basis, const SeriesVector& c);

struct PositivityCertificate {
  enum class Kind { gram_factorization, graded_diagonal, witness_negative, unknown };
  Kind kind = Kind::unknown;
  std::vector<Element> basis;
  SeriesMatrix gram;
  SeriesMatrix factor;          ///< B with B^H B = gram (gram_factorization)
  SeriesMatrix congruence;      ///< U with U^H gram U = diag(pivots, 0) (graded_diagonal)
  std::vector<Series> pivots;
  Element witness;              ///< a with omega(a* a) < 0
  Series witness_value;
  std::string detail;

  bool positive() const { return kind == Kind::gram_factorization || kind == Kind::graded_diagonal; }
  /// Re-derives the certified identity from the stored data.
  bool verify(const LinearFunctional& omega) const;
};

std::string to_string(PositivityCertificate::Kind k);

PositivityCertificate is_positive_functional(const LinearFunctional& omega, const std::vector<Element>& basis);

/// |omega(a* b)|^2 <= omega(a* a) omega(b* b). Throws
/// positivity.UncertifiedFunctional unless the certificate is positive.
bool cauchy_schwarz_check(const LinearFunctional& omega, const PositivityCertificate& cert, const Element& a,
                          const Element& b);

/// omega(a*) = conj(omega(a)) on the spanning list.
bool is_real_functional(const LinearFunctional& omega, const std::vector<Element>& spanning);

struct PositiveSum {
  Element value;
  std::vector<std::pair<Series, Element>> terms;  ///< replay data (b_i, B_i)
  bool verify(const Algebra& a) const;
};
/// sum_i b_i B_i* B_i. Throws positivity.NonPositiveCoefficient.
PositiveSum algebraically_positive(const Algebra& a, const std::vector<std::pair<Series, Element>>& terms);

/// The lambda-linear extension of a classical functional to a deformed
/// product, with its certificate on `basis`.
std::pair<LinearFunctional, PositivityCertificate> deform_functional(const LinearFunctional& omega0,
                                                                     AlgebraPtr deformed,
                                                                     const std::vector<Element>& basis);

}  // namespace starrep
