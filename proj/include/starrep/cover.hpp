#pragma once

// Finite cover models of deformed vector bundles: frames, transition
// cocycles, gluing, endomorphism transport with unit repair, the
// projection (eps, pi, P) of a glued module, and Cech classes built from
// transition logarithms.

#include <map>
#include <optional>
#include <utility>

#include "starrep/algebras.hpp"
#include "starrep/calculus.hpp"

namespace starrep {

using ChartPair = std::pair<int, int>;
using ChartTriple = std::array<int, 3>;

/// Charts are central idempotents e_a of a function algebra F (indicators
/// of point sets in the discrete case, the unit for a single global chart).
/// The partition p_a satisfies sum p_a = 1 and p_a = e_a p_a.
class CoverModel {
 public:
  /// Discrete model on `points` points; charts are point lists.
  static CoverModel discrete(int points, std::vector<std::vector<int>> charts, std::vector<Element> partition);
  /// One chart covering everything, over any algebra.
  static CoverModel single_chart(AlgebraPtr functions);

  const AlgebraPtr& functions() const { return functions_; }
  int charts() const { return static_cast<int>(support_.size()); }
  const Element& support(int a) const { return support_[static_cast<std::size_t>(a)]; }
  /// e_a e_b, zero when the charts do not meet.
  Element overlap(int a, int b) const;
  Element triple_overlap(const ChartTriple& t) const;
  /// Unordered a < b with nonempty overlap; a < b < c with nonempty triple overlap.
  const std::vector<ChartPair>& overlaps() const { return overlaps_; }
  const std::vector<ChartTriple>& triples() const { return triples_; }
  const std::vector<Element>& partition() const { return partition_; }
  /// Point lists of a discrete model; empty otherwise.
  const std::vector<std::vector<int>>& chart_points() const { return chart_points_; }
  /// Points of e (discrete models only).
  std::vector<int> points_of(const Element& e) const;

  /// chi_a with sum chi_a* chi_a = 1 and chi_a* chi_a = p_a, by exact
  /// pointwise square roots. Throws cover.PartitionRepairFailure.
  std::vector<Element> quadratic_partition() const;

 private:
  CoverModel(AlgebraPtr functions, std::vector<Element> support, std::vector<Element> partition,
             std::vector<std::vector<int>> chart_points);

  AlgebraPtr functions_;
  std::vector<Element> support_;
  std::vector<Element> partition_;
  std::vector<std::vector<int>> chart_points_;
  std::vector<ChartPair> overlaps_;
  std::vector<ChartTriple> triples_;
};

/// phi_ab in M_k(F) supported on the overlap, for ordered pairs of distinct
/// meeting charts. phi_aa is e_a times the identity.
struct TransitionData {
  int rank = 1;
  std::map<ChartPair, Element> phi;
};

/// Vectors of F^k are k x k matrices supported in column 0; a family holds
/// one vector (or matrix) per chart.
using Family = std::vector<Element>;

class CoverBundle {
 public:
  /// Checks phi_ab phi_ba = e_ab and phi_ab phi_bc phi_ca = e_abc, and
  /// support. Throws cover.CocycleViolation naming the offending charts.
  CoverBundle(CoverModel model, TransitionData transitions);

  const CoverModel& model() const { return model_; }
  const TransitionData& transitions() const { return transitions_; }
  int rank() const { return transitions_.rank; }
  const std::shared_ptr<const MatrixAlgebra>& matrices() const { return matrices_; }
  /// phi_ab, or its classical part.
  Element phi(int a, int b) const;
  Element classical_phi(int a, int b) const;
  /// phi_ab* = phi_ba.
  bool unitary() const;

  // sections
  Family glue(const Family& classical) const;
  /// The inverse of glue on compatible families. Throws cover.CocycleViolation
  /// if the input is not compatible.
  Family unglue(const Family& glued) const;
  /// phi_ab s_b = e_ab s_a on every overlap, for the deformed or classical transitions.
  bool compatible(const Family& s, bool classical = false) const;
  /// sum_b phi_ab p_b s_b with classical transitions: a classically compatible family.
  Family classical_glue(const Family& local) const;

  /// (s . f) = unglue(glue(s) f) on classical data.
  Family right_action(const Family& s, const Element& f) const;
  /// h(s, t) as a function, assembled as sum_a p_a <s_a, t_a>. Throws
  /// cover.NonUnitaryTransitions.
  Element inner(const Family& s, const Family& t) const;
  /// The local values <s_a, t_a> for glued families, before assembly.
  Family local_inner(const Family& glued_s, const Family& glued_t) const;

  // endomorphisms
  Family classical_endo_glue(const Family& local) const;
  bool covariant(const Family& a, bool classical = false) const;
  /// T~_a(A) = sum_c phi_ac chi_c* A_c chi_c phi_ca.
  Family transport_raw(const Family& a) const;
  /// T_a(A) = W_a^{-1} T~_a(A) W_a^{-1} with W = sqrt(T~(1)), so T(1) = 1.
  Family transport(const Family& a) const;
  /// The inverse of transport on covariant families.
  Family transport_inverse(const Family& y) const;
  /// A *' B = T^{-1}(T(A) T(B)).
  Family endo_product(const Family& a, const Family& b) const;
  Family endo_involution(const Family& a) const;
  Family endo_unit() const;
  /// f 1 as a classical endomorphism family.
  Family scalar_endo(const Element& f) const;

  const Family& repair() const { return w_inverse_; }

 private:
  Family apply_local(const Family& a, const std::function<Element(int, const Element&)>& f) const;

  CoverModel model_;
  TransitionData transitions_;
  std::shared_ptr<const MatrixAlgebra> matrices_;
  std::vector<Element> chi_;
  Family w_inverse_;
};

Family family_add(const Family& a, const Family& b);
Family family_sub(const Family& a, const Family& b);
bool family_is_zero(const Family& a);
std::string to_string(const Family& f);

/// Coefficients c with E c = s for a frame matrix E (columns are the frame
/// vectors). Throws cover.DegenerateFrame.
Element expand_in_frame(const MatrixAlgebra& m, const Element& frame, const Element& s);
/// V = 1 + O(lambda) with V* G V = 1 for the Gram G of a frame that is
/// classically orthonormal. Throws cover.ClassicalNotOrthonormal.
Element orthonormalize_frame(const MatrixAlgebra& m, const Element& gram);

/// eps(s) = (T_a(X_a) s_a)_a, pi(t)_a = sum_c phi_ac T_c(X_c)* t_c, with
/// X_a = chi_a *' V^{-1} and sum X_a* *' X_a = 1; P = eps o pi.
struct SerreSwanData {
  std::shared_ptr<const MatrixAlgebra> big;  ///< M_{mk}(F)
  Family local_x;                            ///< T_a(X_a)
  Element projection;                        ///< P in M_{mk}(F)
  Element classical_projection;              ///< chi_a phi_ac chi_c from the classical data
  std::function<Element(const Family&)> eps;
  std::function<Family(const Element&)> pi;
};
SerreSwanData serre_swan(const CoverBundle& bundle);

struct CenterProbeReport {
  int samples = 0;
  int scalar = 0;          ///< f *' g stayed a multiple of the identity
  int agrees = 0;          ///< and equals f * g
  std::string detail;
  bool closed() const { return scalar == samples; }
};
CenterProbeReport probe_center_closure(const CoverBundle& bundle, int samples, std::mt19937_64& rng);

/// t_ab per ordered overlap, t_abc per triple, and n_abc when integral.
struct CechClassData {
  std::map<ChartPair, LogElement> t;
  std::map<ChartTriple, LogElement> triple;
  std::map<ChartTriple, long> n;
  bool integral = false;
  std::string detail;
};

/// Antisymmetric completion of logs given on a < b.
std::map<ChartPair, LogElement> complete_logs(const CoverModel& model, const std::map<ChartPair, LogElement>& upper);

/// t_abc = t_ab o t_bc o t_ca restricted to the triple overlap; checks
/// centrality and constancy (cover.NotCentral, cover.NotConstant) and
/// reads off n_abc when t_abc = 2 pi i n.
CechClassData cech_relative_class(const CoverModel& model, const std::map<ChartPair, LogElement>& logs);
/// Throws cover.NotIntegral naming the first non-integral triple.
void require_integral(const CechClassData& c);
/// Transitions Exp(t_ab) restricted to the overlaps (rank one).
TransitionData transitions_from_logs(const CoverModel& model, const std::map<ChartPair, LogElement>& logs);
/// sum over the triples with the given signs, when integral.
long pair_with_cycle(const CechClassData& c, const std::map<ChartTriple, int>& cycle);
/// The fundamental cycle of the boundary of a tetrahedron on charts 0..3.
std::map<ChartTriple, int> tetrahedron_cycle();
/// Logs t_ab = s_a - s_b for local phases s_a.
std::map<ChartPair, LogElement> coboundary_logs(const CoverModel& model, const std::vector<LogElement>& s);

/// c + line: logs added overlap-wise and the class recomputed. Throws
/// cover.NerveMismatch.
CechClassData picard_action(const CoverModel& model, const CechClassData& line, const CechClassData& c);
/// Zero class on the model's nerve.
CechClassData zero_class(const CoverModel& model);

}  // namespace starrep
