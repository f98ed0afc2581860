#include "starrep/scalars.hpp"

#include <atomic>
#include <ostream>
#include <sstream>

namespace starrep {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw Error("scalars.ParseError", "bad rational '" + text + "'");
  q.canonicalize();
  if (sgn(q.get_den()) == 0) throw Error("scalars.ParseError", "zero denominator in '" + text + "'");
  return q;
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

// Gauss ----------------------------------------------------------------------

Gauss Gauss::inverse() const {
  Rational n = norm2();
  if (sgn(n) == 0) throw Error("scalars.NonInvertible", "inverse of zero Gaussian rational");
  return {re / n, -im / n};
}

Gauss& Gauss::operator*=(const Gauss& o) {
  if (is_real() && o.is_real()) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
Gauss operator-(const Gauss& a) { return {-a.re, -a.im}; }
Gauss operator*(const Gauss& a, const Gauss& b) {
  Gauss r = a;
  r *= b;
  return r;
}
Gauss operator/(const Gauss& a, const Gauss& b) { return a * b.inverse(); }
bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }

std::string to_string(const Gauss& g) {
  if (g.is_real()) return g.re.get_str();
  if (sgn(g.re) == 0) return g.im.get_str() + "i";
  std::string im = g.im.get_str();
  return "(" + g.re.get_str() + (sgn(g.im) > 0 ? "+" : "") + im + "i)";
}

std::ostream& operator<<(std::ostream& os, const Gauss& g) { return os << to_string(g); }

std::string to_string(Sign s) {
  switch (s) {
    case Sign::negative:
      return "negative";
    case Sign::zero:
      return "zero";
    case Sign::positive:
      return "positive";
  }
  return "?";
}

// Truncation order -----------------------------------------------------------

namespace {
std::atomic<int> g_default_order{6};

void require_same_order(const Series& a, const Series& b) {
  if (a.order() != b.order())
    throw Error("scalars.OrderMismatch",
                "truncation orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
}
}  // namespace

int default_order() { return g_default_order.load(std::memory_order_relaxed); }

void set_default_order(int order) {
  if (order < 0) throw Error("scalars.BadOrder", "negative truncation order");
  g_default_order.store(order, std::memory_order_relaxed);
}

// Series ---------------------------------------------------------------------

Series Series::zero(int order) {
  Series s;
  s.c_.assign(static_cast<std::size_t>(order) + 1, Gauss());
  return s;
}

Series Series::lambda(int power) {
  Series s;
  if (power <= s.order()) s[power] = Gauss(1);
  return s;
}

Series Series::from_coefficients(std::vector<Gauss> coeffs) {
  Series s;
  for (std::size_t r = 0; r < coeffs.size() && r < s.c_.size(); ++r) s.c_[r] = std::move(coeffs[r]);
  return s;
}

bool Series::is_zero() const {
  for (const auto& g : c_)
    if (!g.is_zero()) return false;
  return true;
}

bool Series::is_real() const {
  for (const auto& g : c_)
    if (!g.is_real()) return false;
  return true;
}

int Series::valuation() const {
  for (int r = 0; r <= order(); ++r)
    if (!c_[static_cast<std::size_t>(r)].is_zero()) return r;
  return order() + 1;
}

Series Series::conj() const {
  Series s = *this;
  for (auto& g : s.c_) g.im = -g.im;
  return s;
}

Series Series::shifted(int j) const {
  Series s = zero(order());
  for (int r = 0; r + j <= order(); ++r) s[r + j] = (*this)[r];
  return s;
}

Series Series::part(int r) const {
  Series s = zero(order());
  if (r >= 0 && r <= order()) s[r] = (*this)[r];
  return s;
}

Series& Series::operator+=(const Series& o) {
  require_same_order(*this, o);
  for (std::size_t r = 0; r < c_.size(); ++r)
    if (!o.c_[r].is_zero()) c_[r] += o.c_[r];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  require_same_order(*this, o);
  for (std::size_t r = 0; r < c_.size(); ++r)
    if (!o.c_[r].is_zero()) c_[r] -= o.c_[r];
  return *this;
}

Series& Series::operator*=(const Series& o) {
  *this = *this * o;
  return *this;
}

Series& Series::operator*=(const Gauss& g) {
  for (auto& c : c_)
    if (!c.is_zero()) c *= g;
  return *this;
}

Series operator+(Series a, const Series& b) { return a += b; }
Series operator-(Series a, const Series& b) { return a -= b; }
Series operator-(const Series& a) {
  Series s = a;
  for (int r = 0; r <= s.order(); ++r) s[r] = -s[r];
  return s;
}

Series operator*(const Series& a, const Series& b) {
  require_same_order(a, b);
  const int n = a.order();
  Series out = Series::zero(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

bool operator==(const Series& a, const Series& b) {
  require_same_order(a, b);
  return a.coefficients() == b.coefficients();
}

std::string to_string(const Series& s) {
  std::ostringstream os;
  bool first = true;
  for (int r = 0; r <= s.order(); ++r) {
    if (s[r].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << s[r];
    if (r == 1) os << "*l";
    if (r > 1) os << "*l^" << r;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Series& s) { return os << to_string(s); }

Sign sign(const Series& a) {
  if (!a.is_real()) throw Error("scalars.NonRealSeries", "order predicate on non-real series " + to_string(a));
  const int v = a.valuation();
  if (v > a.order()) return Sign::zero;
  return sgn(a[v].re) > 0 ? Sign::positive : Sign::negative;
}

bool is_nonnegative(const Series& a) { return a.is_real() && sign(a) != Sign::negative; }

Series invert(const Series& a) {
  if (a[0].is_zero()) throw Error("scalars.NonInvertible", "classical part vanishes in " + to_string(a));
  const int n = a.order();
  const Gauss inv0 = a[0].inverse();
  Series b = Series::zero(n);
  b[0] = inv0;
  for (int r = 1; r <= n; ++r) {
    Gauss acc;
    for (int j = 1; j <= r; ++j)
      if (!a[j].is_zero() && !b[r - j].is_zero()) acc += a[j] * b[r - j];
    b[r] = -(acc * inv0);
  }
  return b;
}

Series sqrt(const Series& a) {
  if (!a.is_real()) throw Error("scalars.NonRealSeries", "sqrt of non-real series");
  if (sgn(a[0].re) <= 0) throw Error("scalars.NotPositive", "sqrt needs positive classical part: " + to_string(a));
  Rational r0;
  if (!rational_sqrt(a[0].re, r0))
    throw Error("scalars.NoExactRoot", a[0].re.get_str() + " is not a rational square");
  // Order-by-order: a_r = sum_{j+k=r} b_j b_k, so b_r = (a_r - sum_{0<j<r} b_j b_{r-j}) / (2 b_0).
  const int n = a.order();
  Series b = Series::zero(n);
  b[0] = Gauss(r0);
  const Gauss inv2b0 = Gauss(Rational(1) / (2 * r0));
  for (int r = 1; r <= n; ++r) {
    Gauss acc = a[r];
    for (int j = 1; j < r; ++j) acc -= b[j] * b[r - j];
    b[r] = acc * inv2b0;
  }
  return b;
}

Series graded_divide(const Series& a, const Series& b) {
  require_same_order(a, b);
  const int n = a.order();
  const int v = b.valuation();
  if (v > n) throw Error("scalars.NonInvertible", "division by zero series");
  if (a.valuation() < v)
    throw Error("scalars.NonInvertible", "valuation of " + to_string(a) + " below that of " + to_string(b));
  // a / b = (a / lambda^v) * (b / lambda^v)^{-1}, known through order n - v.
  Series as = Series::zero(n), bs = Series::zero(n);
  for (int r = 0; r + v <= n; ++r) {
    as[r] = a[r + v];
    bs[r] = b[r + v];
  }
  Series q = as * invert(bs);
  for (int r = n - v + 1; r <= n; ++r) q[r] = Gauss();
  return q;
}

// Matrices -------------------------------------------------------------------

SeriesMatrix hermitian_adjoint(const SeriesMatrix& m) {
  SeriesMatrix out(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(j, i) = m(i, j).conj();
  return out;
}

GaussMatrix hermitian_adjoint(const GaussMatrix& m) {
  GaussMatrix out(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(j, i) = m(i, j).conj();
  return out;
}

SeriesMatrix classical_part(const SeriesMatrix& m) {
  return m.unaryExpr([](const Series& s) { return s.classical(); });
}

GaussMatrix coefficient(const SeriesMatrix& m, int r) {
  GaussMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j)[r];
  return out;
}

SeriesMatrix lift(const GaussMatrix& m) {
  SeriesMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Series(m(i, j));
  return out;
}

SeriesMatrix identity_matrix(Eigen::Index n) {
  SeriesMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = Series(i == j ? 1 : 0);
  return out;
}

SeriesMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  SeriesMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = Series(0);
  return out;
}

bool is_zero(const SeriesMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (!m.data()[i].is_zero()) return false;
  return true;
}

int valuation(const SeriesMatrix& m) {
  int v = default_order() + 1;
  for (Eigen::Index i = 0; i < m.size(); ++i) v = std::min(v, m.data()[i].valuation());
  return v;
}

SeriesMatrix scale(const Series& s, const SeriesMatrix& m) {
  return m.unaryExpr([&s](const Series& x) { return s * x; });
}

}  // namespace starrep
