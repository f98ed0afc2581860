#pragma once

// GNS construction on a finite spanning list: Gel'fand ideal, quotient
// carrier, action psi_B -> psi_{A B} and cyclic vector.

#include "starrep/positivity.hpp"
#include "starrep/prehilbert.hpp"

namespace starrep {

/// Coordinates (columns, with respect to `basis`) spanning the Gel'fand
/// ideal on span(basis). Throws gns.DegenerateGrading.
SeriesMatrix gelfand_ideal(const LinearFunctional& omega, const std::vector<Element>& basis);

struct GNSData {
  LinearFunctional omega;
  std::vector<Element> spanning;  ///< carrier generators psi_{b_j}
  ModulePtr carrier;
  SeriesMatrix ideal;
  Representation pi;
  int cyclic = -1;  ///< index of the unit in `spanning`, if present
  /// When A b_j can leave span(spanning), pi(A) is the compression to it.
  bool compressed = false;
};

/// The action is computed from pairings omega(b_p* A b_q) with the quotient
/// representatives and extended to the other generators through their
/// projections; `compressed` declares that the span is not invariant.
GNSData gns_representation(const LinearFunctional& omega, const std::vector<Element>& spanning, bool compressed = false);

struct GNSReport {
  bool reproduces = true;  ///< omega(A) = <psi_1, pi(A) psi_1>
  bool cyclic = true;      ///< pi(b_j) psi_1 = psi_{b_j}
  bool left_ideal = true;  ///< g J in J for algebra generators g
  bool well_defined = true;  ///< G J = 0
  std::string detail;
  bool pass() const { return reproduces && cyclic && left_ideal && well_defined; }
};
GNSReport verify_gns(const GNSData& data);

/// The psi_1-column of pi(A), without forming pi(A) on the whole carrier.
SeriesVector act_on_cyclic(const GNSData& data, const Element& a);

struct KernelBound {
  SeriesMatrix kernel;  ///< coordinates with respect to the tested elements
  bool sufficiently_many = false;  ///< the bound is {0}
};
/// The intersection over the listed GNS data of ker pi_omega on span(tested).
/// An empty list gives the whole span.
KernelBound kernel_intersection(const std::vector<GNSData>& data, const std::vector<Element>& tested);

}  // namespace starrep
