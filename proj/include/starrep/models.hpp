#pragma once

// The shipped example models: the twist used for twisted matrix algebras,
// the Wick vacuum functional, trace states and evaluation functionals.

#include "starrep/algebras.hpp"
#include "starrep/cover.hpp"
#include "starrep/positivity.hpp"

namespace starrep {

/// T = id + lambda (a -> h a h) + lambda^2 (a -> g a + a g) on M_k with
/// h = diag(1, 0, ..., 0) and g the Hermitian band matrix with (1+i)/2 above the diagonal.
EquivalenceTransform standard_twist(int k);
std::shared_ptr<const TwistedAlgebra> standard_twisted_matrix(int k);

/// Evaluation at the origin on the Wick algebra.
LinearFunctional wick_vacuum(const std::shared_ptr<const PolynomialAlgebra>& wick);
/// Monomials z^a zbar^b of total degree <= d, the unit first.
std::vector<Element> polynomial_spanning(const PolynomialAlgebra& a, int d);

/// omega(a) = sum_i weights_i a_ii on matrices over the scalars (any product).
LinearFunctional weighted_trace(const AlgebraPtr& matrices, int k, const std::vector<Rational>& weights);
inline LinearFunctional trace_state(const AlgebraPtr& matrices, int k) {
  return weighted_trace(matrices, k, std::vector<Rational>(static_cast<std::size_t>(k), Rational(1, k)));
}
/// The matrix units E_ij, row-major.
std::vector<Element> matrix_units(int k);

/// Evaluation at a point of a discrete algebra.
LinearFunctional point_evaluation(const std::shared_ptr<const DiscreteAlgebra>& d, int p);

/// Partition values with exact pointwise roots: 1; 9/25, 16/25; 4/9, 4/9, 1/9; 1/4 each.
std::vector<Element> square_partition(int points, const std::vector<std::vector<int>>& charts);

/// A circle of 4 points covered by two arcs meeting in points 0 and 2.
CoverModel circle_cover();
/// Constant unitary line transitions: 1 on point 0, i on point 2.
TransitionData flat_circle_transitions();

/// Three charts on 7 points meeting in a single triple point.
CoverModel three_chart_cover();
/// phi_ab = h_a g_a g_b* h_b* with pointwise rational unitaries g and
/// unitary lambda-corrections h_a = (1 + K_a)(1 - K_a)^{-1}.
TransitionData corrected_transitions(const CoverModel& model, int k, bool with_corrections = true);

/// The barycentric star cover of the boundary of a tetrahedron: vertices
/// are points 0-3, edge midpoints 4-9, face centres 10-13.
CoverModel tetra_sphere_cover();
/// Logs whose triple sums are 1 on the face (1,2,3) and 0 elsewhere, with
/// optional lambda-corrections of coboundary type.
std::map<ChartPair, LogElement> tetra_sphere_logs(bool with_corrections = true);

}  // namespace starrep
