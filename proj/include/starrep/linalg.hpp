#pragma once

// Exact linear algebra: Gauss-Jordan over Q(i), and lambda-graded
// elimination of Hermitian Gram matrices over C[[lambda]].

#include <optional>
#include <vector>

#include "starrep/scalars.hpp"

namespace starrep {

GaussMatrix gauss_identity(Eigen::Index n);
GaussMatrix gauss_zero(Eigen::Index rows, Eigen::Index cols);

/// Inverse of a square matrix. Throws linalg.Singular.
GaussMatrix gauss_inverse(const GaussMatrix& a);
/// Some solution X of A X = B, or nullopt when inconsistent.
std::optional<GaussMatrix> gauss_solve(const GaussMatrix& a, const GaussMatrix& b);
/// Columns spanning {x : A x = 0}.
GaussMatrix gauss_kernel(const GaussMatrix& a);
int gauss_rank(const GaussMatrix& a);

/// Columns v with M v = 0 exactly, obtained by valuation-pivoted column
/// elimination; torsion directions (M v = O(lambda^(N+1)) only after
/// rescaling by lambda) are not reported.
SeriesMatrix series_kernel(const SeriesMatrix& m);

/// Lambda-graded LDL* elimination of a Hermitian Gram matrix G on m
/// spanning vectors. On success U = [residuals | null_vectors] satisfies
/// U* G U = diag(pivot_values, 0).
class GramQuotient {
 public:
  enum class Status { positive, negative, unknown };

  static GramQuotient compute(const SeriesMatrix& gram);

  Status status() const { return status_; }
  const std::string& detail() const { return detail_; }
  Eigen::Index dimension() const { return gram_.rows(); }
  const SeriesMatrix& gram() const { return gram_; }

  /// Spanning indices chosen as pivots, in elimination order.
  const std::vector<int>& pivots() const { return pivots_; }
  /// m x r; column p is the residual of pivot p.
  const SeriesMatrix& residuals() const { return residuals_; }
  const std::vector<Series>& pivot_values() const { return pivot_values_; }
  /// m x (m - r); coordinates of the null residuals.
  const SeriesMatrix& null_vectors() const { return null_vectors_; }
  /// Coordinates of a vector of negative length (status negative).
  const SeriesVector& witness() const { return witness_; }

  /// Pivot indices sorted ascending: the representatives of the quotient.
  std::vector<int> representatives() const;
  /// Gram matrix restricted to representatives().
  SeriesMatrix representative_gram() const;

  struct Projection {
    SeriesVector coordinates;  ///< with respect to representatives()
    bool exact = true;         ///< the vector lies in the span modulo null vectors
  };
  /// Coordinates of a vector v from its pairings s_j = <v_j, v> with the
  /// spanning vectors. With `norm` = <v, v>, exactness is decided.
  Projection project(const SeriesVector& pairings, const Series* norm = nullptr) const;

 private:
  Status status_ = Status::unknown;
  std::string detail_;
  SeriesMatrix gram_;
  std::vector<int> pivots_;
  SeriesMatrix residuals_;
  std::vector<Series> pivot_values_;
  SeriesMatrix null_vectors_;
  SeriesVector witness_;
};

std::string to_string(GramQuotient::Status s);

bool is_hermitian(const SeriesMatrix& m);
/// x* G y
Series sesquilinear(const SeriesVector& x, const SeriesMatrix& g, const SeriesVector& y);
/// Order-zero part of a series matrix as a series matrix of truncation order 0.
SeriesMatrix order_zero(const SeriesMatrix& m);
/// Product written out entrywise (keeps truncation orders of the operands).
SeriesMatrix mul(const SeriesMatrix& a, const SeriesMatrix& b);

}  // namespace starrep
