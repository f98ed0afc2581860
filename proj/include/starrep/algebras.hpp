#pragma once

// Concrete star algebras: Weyl-Moyal and Wick polynomial algebras, formal
// scalars, discrete pointwise functions, matrices over an algebra, algebras
// twisted by an equivalence transform, and corner algebras P * A * P.

#include <functional>
#include <mutex>

#include "starrep/algebra.hpp"

namespace starrep {

constexpr int kDefaultDegreeCap = 10;

/// Polynomial star products. Moyal(n): monomial [a_1..a_n, b_1..b_n] is
/// x^a p^b, with
///   f * g = sum_{alpha,beta} (i lambda/2)^{|alpha|+|beta|} (-1)^{|beta|} / (alpha! beta!)
///           (d_x^alpha d_p^beta f)(d_p^alpha d_x^beta g).
/// Wick: monomial [a, b] is z^a zbar^b, with
///   f * g = sum_r lambda^r / r! (d_zbar^r f)(d_z^r g).
class PolynomialAlgebra : public Algebra {
 public:
  enum class Kind { moyal, wick };

  static std::shared_ptr<const PolynomialAlgebra> moyal(int n, int degree_cap = kDefaultDegreeCap);
  static std::shared_ptr<const PolynomialAlgebra> wick(int degree_cap = kDefaultDegreeCap);

  PolynomialAlgebra(Kind kind, int n, int degree_cap, bool deformed);

  std::string id() const override;
  Element multiply(const Element& f, const Element& g) const override;
  Element involution(const Element& f) const override;
  Element unit() const override;
  AlgebraPtr classical() const override;
  std::vector<Element> generators() const override;
  Element random_element(std::mt19937_64& rng) const override;
  Element classical_inverse(const Element& u0) const override;

  Kind kind() const { return kind_; }
  int variables() const { return kind_ == Kind::wick ? 2 : 2 * n_; }
  int degree_cap() const { return degree_cap_; }
  bool deformed() const { return deformed_; }

  /// Generator by index: Moyal x_1..x_n, p_1..p_n; Wick z, zbar.
  Element variable(int index) const;
  /// All monomials of total degree <= d, graded then lexicographic.
  std::vector<Monomial> monomials_up_to(int d) const;
  Element monomial(const Monomial& m) const { return Element::term(m, Series(1)); }
  /// d^times f / d(variable var)^times.
  Element derivative(const Element& f, int var, int times) const;
  /// Undeformed (commutative) product, honouring the degree cap.
  Element commutative_product(const Element& f, const Element& g) const;

 private:
  Kind kind_;
  int n_;
  int degree_cap_;
  bool deformed_;
};

/// C[[lambda]] itself; the single monomial is [].
class ScalarAlgebra : public Algebra {
 public:
  static std::shared_ptr<const ScalarAlgebra> instance();

  std::string id() const override { return "scalar"; }
  Element multiply(const Element& f, const Element& g) const override;
  Element involution(const Element& f) const override;
  Element unit() const override { return Element::scalar(Series(1)); }
  AlgebraPtr classical() const override { return instance(); }
  std::vector<Element> generators() const override { return {unit()}; }
  Element random_element(std::mt19937_64& rng) const override;
  std::vector<Monomial> basis_monomials() const override { return {Monomial{}}; }
  bool is_commutative() const override { return true; }
};

/// Pointwise functions on a finite point set; monomial [p] is the indicator of p.
class DiscreteAlgebra : public Algebra {
 public:
  explicit DiscreteAlgebra(int points) : points_(points) {}
  static std::shared_ptr<const DiscreteAlgebra> make(int points);

  std::string id() const override { return "discrete(" + std::to_string(points_) + ")"; }
  Element multiply(const Element& f, const Element& g) const override;
  Element involution(const Element& f) const override;
  Element unit() const override;
  AlgebraPtr classical() const override;
  std::vector<Element> generators() const override;
  Element random_element(std::mt19937_64& rng) const override;
  std::vector<Monomial> basis_monomials() const override;
  bool is_commutative() const override { return true; }
  Element classical_inverse(const Element& u0) const override;
  Element phase_exponential(const Element& turns) const override;
  Element phase_logarithm(const Element& u0) const override;

  int points() const { return points_; }
  Element indicator(int p) const { return Element::term({p}, Series(1)); }
  Series value(const Element& f, int p) const { return f.coefficient({p}); }

 private:
  int points_;
};

/// k x k matrices over a base algebra; monomial [i, j, m] is E_ij (x) m.
class MatrixAlgebra : public Algebra {
 public:
  MatrixAlgebra(AlgebraPtr base, int k);
  static std::shared_ptr<const MatrixAlgebra> make(AlgebraPtr base, int k);

  std::string id() const override;
  Element multiply(const Element& f, const Element& g) const override;
  Element involution(const Element& f) const override;
  Element unit() const override;
  AlgebraPtr classical() const override;
  std::vector<Element> generators() const override;
  Element random_element(std::mt19937_64& rng) const override;
  std::vector<Monomial> basis_monomials() const override;
  Element classical_inverse(const Element& u0) const override;

  const AlgebraPtr& base() const { return base_; }
  int size() const { return k_; }

  Element entry(const Element& m, int i, int j) const;
  Element embed(int i, int j, const Element& a) const;
  Element from_entries(const std::vector<std::vector<Element>>& entries) const;
  /// diag(a, ..., a)
  Element diagonal(const Element& a) const;
  Element trace(const Element& m) const;

 private:
  AlgebraPtr base_;
  int k_;
};

/// T = id + sum_{r>=1} lambda^r T_r acting on the coordinates of a
/// finite-dimensional algebra. T_r[r-1] is dim x dim.
struct EquivalenceTransform {
  std::vector<GaussMatrix> orders;

  static EquivalenceTransform identity() { return {}; }
  int dimension() const { return orders.empty() ? 0 : static_cast<int>(orders.front().rows()); }
  /// T applied to a coordinate vector.
  SeriesVector apply(const SeriesVector& c) const;
  /// (S o T) with S applied after T.
  static EquivalenceTransform compose(const EquivalenceTransform& s, const EquivalenceTransform& t, int dim);
  /// Inverse series, through order n.
  EquivalenceTransform inverse(int n, int dim) const;
};

/// a *_T b = T^{-1}(T(a) * T(b)) on a finite-dimensional base algebra.
class TwistedAlgebra : public Algebra {
 public:
  TwistedAlgebra(AlgebraPtr base, EquivalenceTransform t);

  std::string id() const override;
  Element multiply(const Element& f, const Element& g) const override;
  Element involution(const Element& f) const override { return base_->involution(f); }
  Element unit() const override;
  AlgebraPtr classical() const override { return base_->classical(); }
  std::vector<Element> generators() const override { return base_->generators(); }
  Element random_element(std::mt19937_64& rng) const override { return base_->random_element(rng); }
  std::vector<Monomial> basis_monomials() const override { return base_->basis_monomials(); }
  Element classical_inverse(const Element& u0) const override { return base_->classical_inverse(u0); }

  const AlgebraPtr& base() const { return base_; }
  const EquivalenceTransform& transform() const { return t_; }
  Element apply(const Element& a) const;
  Element apply_inverse(const Element& a) const;
  /// T(a*) = T(a)* on the basis.
  bool star_compatible() const;

 private:
  const EquivalenceTransform& inverse_transform() const;

  AlgebraPtr base_;
  EquivalenceTransform t_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, EquivalenceTransform> inverse_cache_;
};

/// twisted_matrix(k, T): M_k(C[[lambda]]) twisted by T.
std::shared_ptr<const TwistedAlgebra> twisted_matrix(int k, EquivalenceTransform t);
/// Twisting an algebra; twisting a twisted algebra composes the transforms.
std::shared_ptr<const TwistedAlgebra> twist_algebra(const AlgebraPtr& base, const EquivalenceTransform& t);

/// A scalar matrix as an element of M_k(C[[lambda]]) and back.
Element matrix_element(const SeriesMatrix& m);
SeriesMatrix element_matrix(const Element& e, int k);

/// Matrix of a -> h a h on row-major coordinates of M_k.
GaussMatrix sandwich_map(const GaussMatrix& h);
/// Matrix of a -> h a + a h on row-major coordinates of M_k.
GaussMatrix anticommutator_map(const GaussMatrix& h);
/// Matrix of a -> n a (left multiplication) on row-major coordinates of M_k.
GaussMatrix left_multiplication_map(const GaussMatrix& n);

/// P * A * P for a Hermitian idempotent P of A, with unit P.
class CornerAlgebra : public Algebra {
 public:
  CornerAlgebra(AlgebraPtr ambient, Element projection, std::vector<Element> spanning);

  std::string id() const override { return "corner(" + ambient_->id() + ")"; }
  Element multiply(const Element& f, const Element& g) const override { return ambient_->multiply(f, g); }
  Element involution(const Element& f) const override { return ambient_->involution(f); }
  Element unit() const override { return projection_; }
  AlgebraPtr classical() const override;
  std::vector<Element> generators() const override { return spanning_; }
  Element random_element(std::mt19937_64& rng) const override;

  const AlgebraPtr& ambient() const { return ambient_; }
  const std::vector<Element>& spanning() const { return spanning_; }
  Element compress(const Element& a) const;

 private:
  AlgebraPtr ambient_;
  Element projection_;
  std::vector<Element> spanning_;
};

/// Test hook: a polynomial product with a spurious non-cocycle term
/// lambda^order (d_0^2 f)(d_0^2 g) added to its bidifferential expansion.
class CorruptedAlgebra : public Algebra {
 public:
  CorruptedAlgebra(std::shared_ptr<const PolynomialAlgebra> base, int order)
      : base_(std::move(base)), order_(order) {}

  std::string id() const override { return "corrupted(" + base_->id() + ")"; }
  Element multiply(const Element& f, const Element& g) const override;
  Element involution(const Element& f) const override { return base_->involution(f); }
  Element unit() const override { return base_->unit(); }
  AlgebraPtr classical() const override { return base_->classical(); }
  std::vector<Element> generators() const override { return base_->generators(); }
  Element random_element(std::mt19937_64& rng) const override { return base_->random_element(rng); }

 private:
  std::shared_ptr<const PolynomialAlgebra> base_;
  int order_;
};

}  // namespace starrep
