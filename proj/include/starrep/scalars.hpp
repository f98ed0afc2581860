#pragma once

// Exact scalars: rationals, Gaussian rationals Q(i), and truncated formal
// power series in lambda with Q(i) coefficients. All arithmetic is exact and
// performed modulo lambda^(N+1), N being the truncation order of the operands.

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "starrep/errors.hpp"

namespace starrep {

using Rational = mpq_class;

std::string to_string(const Rational& q);  // always "p/q"
Rational parse_rational(const std::string& text);

/// Exact square root of a nonnegative rational, if it is a perfect square.
bool rational_sqrt(const Rational& q, Rational& root);

/// Element of Q(i).
struct Gauss {
  Rational re;
  Rational im;

  Gauss() = default;
  Gauss(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Gauss(Rational r) : re(std::move(r)), im(0) { re.canonicalize(); }  // NOLINT
  Gauss(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  static Gauss i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  Gauss conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }
  Gauss inverse() const;

  Gauss& operator+=(const Gauss& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gauss& operator-=(const Gauss& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gauss& operator*=(const Gauss& o);
};

Gauss operator+(Gauss a, const Gauss& b);
Gauss operator-(Gauss a, const Gauss& b);
Gauss operator-(const Gauss& a);
Gauss operator*(const Gauss& a, const Gauss& b);
Gauss operator/(const Gauss& a, const Gauss& b);
bool operator==(const Gauss& a, const Gauss& b);
inline bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }
std::ostream& operator<<(std::ostream& os, const Gauss& g);
std::string to_string(const Gauss& g);
inline Gauss conj(const Gauss& g) { return g.conj(); }

enum class Sign { negative = -1, zero = 0, positive = 1 };
std::string to_string(Sign s);

/// Truncation order used for newly created series. Default 6.
int default_order();
void set_default_order(int order);

/// RAII override of the default truncation order (tests, CLI).
class ScopedOrder {
 public:
  explicit ScopedOrder(int order) : saved_(default_order()) { set_default_order(order); }
  ~ScopedOrder() { set_default_order(saved_); }
  ScopedOrder(const ScopedOrder&) = delete;
  ScopedOrder& operator=(const ScopedOrder&) = delete;

 private:
  int saved_;
};

/// Truncated formal power series sum_{r=0}^{N} c_r lambda^r over Q(i).
/// Conjugation acts on coefficients and fixes lambda.
class Series {
 public:
  Series() : c_(static_cast<std::size_t>(default_order()) + 1) {}
  Series(long v) : Series() { c_[0] = Gauss(v); }  // NOLINT
  Series(int v) : Series(static_cast<long>(v)) {}  // NOLINT
  Series(const Gauss& g) : Series() { c_[0] = g; }  // NOLINT
  Series(const Rational& q) : Series() { c_[0] = Gauss(q); }  // NOLINT

  static Series zero(int order);
  static Series lambda(int power = 1);  ///< lambda^power (zero if beyond N)
  static Series from_coefficients(std::vector<Gauss> coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Gauss& operator[](int r) const { return c_[static_cast<std::size_t>(r)]; }
  Gauss& operator[](int r) { return c_[static_cast<std::size_t>(r)]; }
  const std::vector<Gauss>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_real() const;
  /// Least r with c_r != 0, or order()+1 for the zero series.
  int valuation() const;
  Series conj() const;
  /// Multiplication by lambda^j (j >= 0), truncating.
  Series shifted(int j) const;
  /// Keeps only the coefficient of lambda^r.
  Series part(int r) const;
  Series classical() const { return part(0); }

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  Series& operator*=(const Gauss& g);

 private:
  std::vector<Gauss> c_;
};

Series operator+(Series a, const Series& b);
Series operator-(Series a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);
bool operator==(const Series& a, const Series& b);
inline bool operator!=(const Series& a, const Series& b) { return !(a == b); }
std::ostream& operator<<(std::ostream& os, const Series& s);
std::string to_string(const Series& s);

inline Series conj(const Series& s) { return s.conj(); }

/// Sign in the canonical order of R[[lambda]]: the sign of the lowest
/// nonvanishing coefficient. Throws scalars.NonRealSeries.
Sign sign(const Series& a);
bool is_nonnegative(const Series& a);

/// Multiplicative inverse mod lambda^(N+1). Throws scalars.NonInvertible.
Series invert(const Series& a);

/// Square root with positive classical part. Throws scalars.NotPositive or
/// scalars.NoExactRoot.
Series sqrt(const Series& a);

/// Quotient a/b for val(a) >= val(b) =: v. Only the first N+1-v coefficients
/// of the result are determined by the data; the rest are set to zero.
/// Throws scalars.NonInvertible when b = 0 or val(a) < val(b).
Series graded_divide(const Series& a, const Series& b);

// Eigen support -------------------------------------------------------------

using SeriesMatrix = Eigen::Matrix<Series, Eigen::Dynamic, Eigen::Dynamic>;
using SeriesVector = Eigen::Matrix<Series, Eigen::Dynamic, 1>;
using GaussMatrix = Eigen::Matrix<Gauss, Eigen::Dynamic, Eigen::Dynamic>;
using GaussVector = Eigen::Matrix<Gauss, Eigen::Dynamic, 1>;

SeriesMatrix hermitian_adjoint(const SeriesMatrix& m);
GaussMatrix hermitian_adjoint(const GaussMatrix& m);
SeriesMatrix classical_part(const SeriesMatrix& m);
GaussMatrix coefficient(const SeriesMatrix& m, int r);
SeriesMatrix lift(const GaussMatrix& m);
SeriesMatrix identity_matrix(Eigen::Index n);
SeriesMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols);
bool is_zero(const SeriesMatrix& m);
int valuation(const SeriesMatrix& m);
SeriesMatrix scale(const Series& s, const SeriesMatrix& m);

}  // namespace starrep

namespace Eigen {

template <>
struct NumTraits<starrep::Gauss> : GenericNumTraits<starrep::Gauss> {
  using Real = starrep::Gauss;
  using NonInteger = starrep::Gauss;
  using Nested = starrep::Gauss;
  using Literal = starrep::Gauss;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 32
  };
  static starrep::Gauss epsilon() { return starrep::Gauss(0); }
  static starrep::Gauss dummy_precision() { return starrep::Gauss(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<starrep::Series> : GenericNumTraits<starrep::Series> {
  using Real = starrep::Series;
  using NonInteger = starrep::Series;
  using Nested = starrep::Series;
  using Literal = starrep::Series;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 64,
    MulCost = 512
  };
  static starrep::Series epsilon() { return starrep::Series(0); }
  static starrep::Series dummy_precision() { return starrep::Series(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
