#pragma once

// Projections and their deformations, deformed projective modules,
// inner-product bimodules, Rieffel induction and conjugate bimodules.

#include <optional>

#include "starrep/algebras.hpp"
#include "starrep/calculus.hpp"
#include "starrep/gns.hpp"
#include "starrep/prehilbert.hpp"

namespace starrep {

/// P = 1/2 + (P0 - 1/2) (1 + 4(P0 P0 - P0))^{-1/2}. Throws
/// morita.NotClassicalProjection unless P0 is a lambda-free Hermitian
/// idempotent of the undeformed product.
Element deform_projection(const Algebra& a, const Element& p0);

/// Solves F(x) = z for a linear F = id + O(lambda), by repeated correction.
/// Throws morita.SolveFailure if the iteration does not settle.
Element solve_unipotent(const std::function<Element(const Element&)>& f, const Element& z);

/// E = P0 M[[lambda]] with the structure pulled back along x -> P x, and the
/// endomorphisms P0 M P0 [[lambda]] along B -> P B P.
class DeformedModule {
 public:
  DeformedModule(AlgebraPtr ambient, Element p0, Element p);

  const AlgebraPtr& ambient() const { return ambient_; }
  const Element& classical_projection() const { return p0_; }
  const Element& projection() const { return p_; }

  /// I(x) = P x and its inverse on P M.
  Element transport(const Element& x) const;
  Element pullback(const Element& y) const;
  /// x . f = I^{-1}(I(x) f)
  Element right_action(const Element& x, const Element& f) const;
  /// h(x, y) = I(x)* I(y)
  Element inner(const Element& x, const Element& y) const;

  /// J(B) = P B P and its inverse on P M P.
  Element endo_transport(const Element& b) const;
  Element endo_pullback(const Element& y) const;
  /// B *' C = J^{-1}(J(B) J(C))
  Element endo_product(const Element& b, const Element& c) const;
  Element endo_unit() const { return endo_pullback(p_); }
  /// B . x = I^{-1}(J(B) I(x))
  Element left_action(const Element& b, const Element& x) const;

  /// Classical projection of a sample: P0 a and P0 a P0 in the undeformed product.
  Element classical_vector(const Element& a) const;
  Element classical_endomorphism(const Element& a) const;

 private:
  AlgebraPtr ambient_;
  AlgebraPtr classical_;
  Element p0_;
  Element p_;
};

/// deform_projection followed by the pull-back structures.
DeformedModule deform_module(const AlgebraPtr& a, const Element& p0);

/// The algebra in which traces of the ambient live: the base of a matrix
/// algebra (or of a twisted matrix algebra), and the trace itself.
AlgebraPtr trace_algebra(const AlgebraPtr& ambient);
Element matrix_trace(const AlgebraPtr& ambient, const Element& m);

struct FullnessVerdict {
  enum class Kind { full, not_full, unknown };
  Kind kind = Kind::unknown;
  Element tau;
  std::string detail;
};
std::string to_string(FullnessVerdict::Kind k);

/// tr P0 = tau* tau with tau invertible, checked with a supplied witness or
/// by exact square roots pointwise in commutative finite models.
FullnessVerdict is_strongly_full(const AlgebraPtr& ambient, const Element& p0,
                                 const std::optional<Element>& witness = std::nullopt);

/// tau with tau* tau = tr P in the deformed trace algebra and classical part
/// tau0. Throws morita.ClassicalMismatch.
Element deform_fullness_witness(const AlgebraPtr& ambient, const Element& tau0, const Element& p);

/// The unitary U = (P' P + (1-P')(1-P)) (1 - (P-P')^2)^{-1/2}, with U P U* = P'.
Element idempotent_conjugator(const Algebra& a, const Element& p, const Element& p_prime);

/// S = I_2^{-1} (U I_1(.)) between two deformations of the same P0.
struct ModuleIsomorphism {
  Element conjugator;
  std::function<Element(const Element&)> map;
};
ModuleIsomorphism equivalence_of_deformations(const DeformedModule& d1, const DeformedModule& d2);

/// A finitely generated B-A bimodule with inner products, given by
/// operations on a carrier of elements.
struct InnerProductBimodule {
  std::string name;
  AlgebraPtr left;
  AlgebraPtr right;
  std::vector<Element> generators;     ///< generate E as a right A-module
  std::vector<Element> left_spanning;  ///< spans B
  std::vector<Element> right_spanning; ///< spans A
  std::function<Element(const Element&, const Element&)> left_act;     ///< (b, x) -> b . x
  std::function<Element(const Element&, const Element&)> right_act;    ///< (x, a) -> x . a
  std::function<Element(const Element&, const Element&)> right_inner;  ///< <x, y>_A
  std::function<Element(const Element&, const Element&)> left_inner;   ///< Theta_{x,y} in B
};

/// E = P M with left algebra P M P and inner products x* y and x y*.
InnerProductBimodule projection_bimodule(const AlgebraPtr& ambient, const Element& p,
                                         const std::vector<Element>& ambient_spanning);
/// E = A as an A-C bimodule with <x, y> = omega(x* y); C acts by scalars.
InnerProductBimodule functional_bimodule(const LinearFunctional& omega, const std::vector<Element>& spanning);
/// The complex-conjugate bimodule: a . xbar = (x . a*)bar, xbar . b = (b* . x)bar.
InnerProductBimodule conjugate_bimodule(const InnerProductBimodule& e);

struct BimoduleReport {
  bool right_linear = true;      ///< <x, y.a> = <x, y> a
  bool hermitian = true;         ///< <x, y>* = <y, x>, both sides
  bool compatible_left = true;   ///< <b.x, y> = <x, b*.y>
  bool compatible_right = true;  ///< Theta_{x, y.a} = Theta_{x.a*, y}
  bool theta_compatible = true;  ///< Theta_{x,y} . z = x . <y, z>
  bool positive = true;          ///< <x, x> has a positive-sum certificate
  std::string detail;
  bool pass() const {
    return right_linear && hermitian && compatible_left && compatible_right && theta_compatible && positive;
  }
};
BimoduleReport check_bimodule(const InnerProductBimodule& e);
/// The span of <x_i, x_j> is all of A (finite-dimensional A only).
bool is_full(const InnerProductBimodule& e);

struct InducedRepresentation {
  Representation rep;
  SeriesMatrix gram;
  GramQuotient quotient;
  Eigen::Index inner_generators = 0;  ///< generator (i, j) of E (x) H has index i * inner + j
};

/// Representation of B on E (x)_A H. Throws morita.PositivityFailure when
/// the induced Gram is not certified positive.
InducedRepresentation rieffel_induce(const InnerProductBimodule& e, const Representation& pi);
/// C acting on C by multiplication.
Representation scalar_representation();

/// V(x (x) phi) = x (x) U phi
Operator rieffel_on_morphism(const InducedRepresentation& from, const InducedRepresentation& to, const Operator& u);

/// The canonical map xbar (x) (y (x) phi) -> pi(<x, y>) phi from the double
/// induction back to the original carrier.
Operator double_induction_map(const InnerProductBimodule& e, const InducedRepresentation& twice, const Representation& pi);

/// U with U pi(a_j) xi = rho(a_j) eta for the spanning list of pi, solved
/// through the Gram quotient of the orbit. Throws morita.SolveFailure when
/// the orbit of xi does not span the carrier.
Operator solve_cyclic_intertwiner(const Representation& pi, const SeriesVector& xi, const Representation& rho,
                                  const SeriesVector& eta);

}  // namespace starrep
