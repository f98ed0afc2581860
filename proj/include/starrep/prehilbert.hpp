#pragma once

// Finitely generated pre-Hilbert modules over C or C[[lambda]], operators
// on them, representations and the classical limit.
//
// A module is presented by m generators and a Hermitian Gram matrix; a
// vector is a coordinate column, and two vectors are equal when their
// difference has length zero, i.e. G (v - w) = 0. Modules over C use
// lambda-free Gram matrices.

#include <functional>
#include <memory>

#include "starrep/algebra.hpp"
#include "starrep/linalg.hpp"

namespace starrep {

enum class Ring { complex, formal };
std::string to_string(Ring r);

class PreHilbertModule {
 public:
  PreHilbertModule(Ring ring, SeriesMatrix gram, SeriesMatrix relations = SeriesMatrix());

  Ring ring() const { return ring_; }
  Eigen::Index generators() const { return gram_.rows(); }
  const SeriesMatrix& gram() const { return gram_; }
  /// Null-vector basis (columns), from the presentation or the graded elimination.
  const SeriesMatrix& relations() const { return relations_; }
  const GramQuotient& quotient() const { return quotient_; }
  /// Positive definite on the quotient (graded elimination succeeded).
  bool is_positive() const { return quotient_.status() == GramQuotient::Status::positive; }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(quotient_.pivots().size()); }

  Series inner(const SeriesVector& x, const SeriesVector& y) const { return sesquilinear(x, gram_, y); }
  bool equal(const SeriesVector& x, const SeriesVector& y) const;
  bool is_null(const SeriesVector& x) const;
  SeriesVector basis_vector(Eigen::Index i) const;

 private:
  Ring ring_;
  SeriesMatrix gram_;
  SeriesMatrix relations_;
  GramQuotient quotient_;
};

using ModulePtr = std::shared_ptr<const PreHilbertModule>;
ModulePtr make_module(Ring ring, SeriesMatrix gram, SeriesMatrix relations = SeriesMatrix());
/// C^n or C[[lambda]]^n with the standard inner product.
ModulePtr standard_module(Ring ring, Eigen::Index n);

struct Operator {
  ModulePtr domain;
  ModulePtr codomain;
  SeriesMatrix matrix;  ///< codomain generators x domain generators

  SeriesVector operator()(const SeriesVector& v) const { return mul(matrix, v); }
};

Operator identity_operator(const ModulePtr& m);
Operator compose(const Operator& c, const Operator& a);
Operator operator+(const Operator& a, const Operator& b);
Operator scale(const Series& s, const Operator& a);
/// Equal as maps of the quotient modules: G_cod (A - B) = 0.
bool equal(const Operator& a, const Operator& b);
/// Respects the null vectors of the domain.
bool well_defined(const Operator& a);

/// Solves <A x, y> = <x, A* y> on generators. Throws prehilbert.NotAdjointable.
Operator adjoint(const Operator& a);

enum class IsometryClass { isometric, unitary, neither };
std::string to_string(IsometryClass c);
IsometryClass classify_isometry(const Operator& u);

/// Theta_{phi,psi}(chi) = phi <psi, chi>.
Operator theta_operator(const ModulePtr& m, const SeriesVector& phi, const SeriesVector& psi);

/// A *-representation on a presented module: matrices for a spanning list,
/// plus a rule for arbitrary elements.
struct Representation {
  AlgebraPtr algebra;
  ModulePtr carrier;
  std::vector<Element> spanning;
  std::function<SeriesMatrix(const Element&)> act;

  Operator operator()(const Element& a) const { return {carrier, carrier, act(a)}; }
};

struct RepresentationReport {
  bool multiplicative = true;
  bool star_preserving = true;
  bool unital = true;  ///< strongly non-degenerate: pi(1) = id
  std::string detail;
  bool pass() const { return multiplicative && star_preserving && unital; }
};
/// Replays pi(a b) = pi(a) pi(b) for a in `left` (default: the spanning
/// list) and b in the spanning list, pi(a*) = pi(a)* and pi(1) = id. With
/// `column_ok`, multiplicativity is only compared on the carrier generators
/// it accepts (compressed carriers).
RepresentationReport check_representation(
    const Representation& pi, const std::vector<Element>& left = {},
    const std::function<bool(const Element&, const Element&, Eigen::Index)>& column_ok = {});

struct IntertwinerReport {
  bool pass = true;
  IsometryClass isometry = IsometryClass::neither;
  std::string detail;
};
/// U pi(a) = rho(a) U on pi's spanning list, plus the isometry class of U.
IntertwinerReport verify_intertwiner(const Operator& u, const Representation& pi, const Representation& rho);

/// The classical limit of a module over C[[lambda]]: order-zero Gram on a
/// complement of its kernel, with the quotient map c (r x m, lambda-free)
/// and a section s (m x r) of c.
struct ClassicalLimit {
  ModulePtr space;
  SeriesMatrix quotient_map;
  SeriesMatrix section;
};
ClassicalLimit classical_limit_space(const ModulePtr& h);
/// c(A) on classical limits. Throws prehilbert.NotAdjointable.
Operator classical_limit_operator(const Operator& a, const ClassicalLimit& dom, const ClassicalLimit& cod);
/// c(pi) acting on the classical limit of the carrier through the classical algebra.
Representation classical_limit_representation(const Representation& pi, const ClassicalLimit& lim);

}  // namespace starrep
