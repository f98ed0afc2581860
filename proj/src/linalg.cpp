#include "starrep/linalg.hpp"

#include <algorithm>

namespace starrep {

GaussMatrix gauss_identity(Eigen::Index n) {
  GaussMatrix m = gauss_zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Gauss(1);
  return m;
}

GaussMatrix gauss_zero(Eigen::Index rows, Eigen::Index cols) {
  GaussMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = Gauss();
  return m;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<Eigen::Index> rref(GaussMatrix& a, Eigen::Index ncols) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < ncols && row < a.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = row; r < a.rows(); ++r)
      if (!a(r, col).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    a.row(sel).swap(a.row(row));
    const Gauss inv = a(row, col).inverse();
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (!a(row, c).is_zero()) a(row, c) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Gauss f = a(r, col);
      for (Eigen::Index c = 0; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

GaussMatrix gauss_inverse(const GaussMatrix& a) {
  if (a.rows() != a.cols()) throw Error("linalg.Singular", "non-square matrix");
  auto x = gauss_solve(a, gauss_identity(a.rows()));
  if (!x || gauss_rank(a) != a.rows()) throw Error("linalg.Singular", "matrix is not invertible");
  return *x;
}

std::optional<GaussMatrix> gauss_solve(const GaussMatrix& a, const GaussMatrix& b) {
  const Eigen::Index n = a.cols();
  GaussMatrix aug(a.rows(), n + b.cols());
  aug << a, b;
  auto pivots = rref(aug, n);
  for (Eigen::Index r = static_cast<Eigen::Index>(pivots.size()); r < aug.rows(); ++r)
    for (Eigen::Index c = n; c < aug.cols(); ++c)
      if (!aug(r, c).is_zero()) return std::nullopt;
  GaussMatrix x = gauss_zero(n, b.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (Eigen::Index c = 0; c < b.cols(); ++c) x(pivots[r], c) = aug(static_cast<Eigen::Index>(r), n + c);
  return x;
}

GaussMatrix gauss_kernel(const GaussMatrix& a) {
  GaussMatrix r = a;
  auto pivots = rref(r, a.cols());
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.push_back(c);
  GaussMatrix k = gauss_zero(a.cols(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], static_cast<Eigen::Index>(f)) = Gauss(1);
    for (std::size_t p = 0; p < pivots.size(); ++p)
      k(pivots[p], static_cast<Eigen::Index>(f)) = -r(static_cast<Eigen::Index>(p), free[f]);
  }
  return k;
}

int gauss_rank(const GaussMatrix& a) {
  GaussMatrix r = a;
  return static_cast<int>(rref(r, a.cols()).size());
}

SeriesMatrix series_kernel(const SeriesMatrix& m) {
  // Column operations V (cols x cols) with M V in column echelon form.
  SeriesMatrix w = m;
  SeriesMatrix v = identity_matrix(m.cols());
  std::vector<bool> used(static_cast<std::size_t>(m.cols()), false);
  const int n = default_order();
  while (true) {
    // Entry of least valuation among unused columns.
    int best = n + 1;
    Eigen::Index br = -1, bc = -1;
    for (Eigen::Index c = 0; c < w.cols(); ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      for (Eigen::Index r = 0; r < w.rows(); ++r) {
        int val = w(r, c).valuation();
        if (val < best) {
          best = val;
          br = r;
          bc = c;
        }
      }
    }
    if (bc < 0) break;
    used[static_cast<std::size_t>(bc)] = true;
    const Series piv = w(br, bc);
    for (Eigen::Index c = 0; c < w.cols(); ++c) {
      if (c == bc || used[static_cast<std::size_t>(c)] || w(br, c).is_zero()) continue;
      const Series mu = graded_divide(w(br, c), piv);
      for (Eigen::Index r = 0; r < w.rows(); ++r) w(r, c) -= mu * w(r, bc);
      for (Eigen::Index r = 0; r < v.rows(); ++r) v(r, c) -= mu * v(r, bc);
    }
  }
  std::vector<Eigen::Index> kernel_cols;
  for (Eigen::Index c = 0; c < w.cols(); ++c) {
    bool zero = true;
    for (Eigen::Index r = 0; r < w.rows() && zero; ++r) zero = w(r, c).is_zero();
    if (zero && !used[static_cast<std::size_t>(c)]) kernel_cols.push_back(c);
  }
  SeriesMatrix k(v.rows(), static_cast<Eigen::Index>(kernel_cols.size()));
  for (std::size_t i = 0; i < kernel_cols.size(); ++i) k.col(static_cast<Eigen::Index>(i)) = v.col(kernel_cols[i]);
  return k;
}

// GramQuotient ---------------------------------------------------------------

bool is_hermitian(const SeriesMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j)
      if (m(i, j) != m(j, i).conj()) return false;
  return true;
}

Series sesquilinear(const SeriesVector& x, const SeriesMatrix& g, const SeriesVector& y) {
  Series acc = Series::zero(default_order());
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    if (x(i).is_zero()) continue;
    Series row = Series::zero(default_order());
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      if (!y(j).is_zero() && !g(i, j).is_zero()) row += g(i, j) * y(j);
    acc += x(i).conj() * row;
  }
  return acc;
}

SeriesMatrix order_zero(const SeriesMatrix& m) {
  SeriesMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    Series s = Series::zero(0);
    s[0] = m.data()[i][0];
    out.data()[i] = s;
  }
  return out;
}

SeriesMatrix mul(const SeriesMatrix& a, const SeriesMatrix& b) {
  SeriesMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Series acc = Series::zero(default_order());
      for (Eigen::Index k = 0; k < a.cols(); ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

std::string to_string(GramQuotient::Status s) {
  switch (s) {
    case GramQuotient::Status::positive:
      return "positive";
    case GramQuotient::Status::negative:
      return "negative";
    case GramQuotient::Status::unknown:
      return "unknown";
  }
  return "?";
}

GramQuotient GramQuotient::compute(const SeriesMatrix& gram) {
  GramQuotient q;
  q.gram_ = gram;
  const Eigen::Index m = gram.rows();
  const int n = default_order();
  q.residuals_ = SeriesMatrix(m, 0);
  q.null_vectors_ = SeriesMatrix(m, 0);
  if (!is_hermitian(gram)) {
    q.status_ = Status::unknown;
    q.detail_ = "Gram matrix is not Hermitian";
    return q;
  }
  SeriesMatrix r = identity_matrix(m);
  SeriesMatrix h = gram;
  std::vector<int> active;
  for (int i = 0; i < m; ++i) active.push_back(i);

  auto set_witness = [&](const SeriesVector& w, const std::string& why) {
    q.status_ = Status::negative;
    q.witness_ = w;
    q.detail_ = why;
  };

  while (!active.empty()) {
    // Off-diagonal entries too large for the diagonal ones exhibit an indefinite 2x2 block.
    for (std::size_t ai = 0; ai < active.size(); ++ai)
      for (std::size_t ak = ai + 1; ak < active.size(); ++ak) {
        int i = active[ai], k = active[ak];
        const Series& b = h(i, k);
        if (b.is_zero()) continue;
        int vb = b.valuation(), vi = h(i, i).valuation(), vk = h(k, k).valuation();
        if (2 * vb >= vi + vk) continue;
        // a: smaller-valuation diagonal, c: the other one.
        int ia = vi <= vk ? i : k, ic = vi <= vk ? k : i;
        const Series& a = h(ia, ia);
        int va = a.valuation();
        Gauss blow = h(ia, ic)[vb];
        int mm = std::max(0, vb - va);
        Rational t(1);
        if (mm == vb - va && va <= n && sgn(a[va].re) > 0) t = Rational(1) / a[va].re;
        Series s = Series(Gauss(-t) * blow).shifted(mm);
        SeriesVector w = r.col(ic) + r.col(ia).unaryExpr([&](const Series& x) { return s * x; });
        set_witness(w, "indefinite block at spanning indices " + std::to_string(ia) + ", " + std::to_string(ic));
        return q;
      }
    int best = -1, bv = n + 1;
    for (int i : active) {
      int v = h(i, i).valuation();
      if (v < bv) {
        bv = v;
        best = i;
      }
    }
    if (best < 0) break;  // remaining block vanishes
    const Series d = h(best, best);
    if (sign(d) == Sign::negative) {
      set_witness(r.col(best), "negative pivot at spanning index " + std::to_string(best));
      return q;
    }
    active.erase(std::find(active.begin(), active.end(), best));
    std::vector<Series> mu(static_cast<std::size_t>(m));
    for (int k : active) {
      if (h(best, k).is_zero()) continue;
      mu[static_cast<std::size_t>(k)] = graded_divide(h(best, k), d);
      for (Eigen::Index row = 0; row < m; ++row)
        if (!r(row, best).is_zero()) r(row, k) -= mu[static_cast<std::size_t>(k)] * r(row, best);
    }
    for (int k : active) {
      const Series& muk = mu[static_cast<std::size_t>(k)];
      if (h(best, k).is_zero()) continue;
      Series cm = muk.conj();
      for (int l : active)
        if (!h(best, l).is_zero()) h(k, l) -= cm * h(best, l);
    }
    for (int k : active) {
      h(best, k) = Series::zero(n);
      h(k, best) = Series::zero(n);
    }
    q.pivots_.push_back(best);
    q.pivot_values_.push_back(d);
    q.residuals_.conservativeResize(m, q.residuals_.cols() + 1);
    q.residuals_.col(q.residuals_.cols() - 1) = r.col(best);
  }
  q.null_vectors_.resize(m, static_cast<Eigen::Index>(active.size()));
  for (std::size_t i = 0; i < active.size(); ++i) q.null_vectors_.col(static_cast<Eigen::Index>(i)) = r.col(active[i]);
  q.status_ = Status::positive;
  return q;
}

std::vector<int> GramQuotient::representatives() const {
  std::vector<int> reps = pivots_;
  std::sort(reps.begin(), reps.end());
  return reps;
}

SeriesMatrix GramQuotient::representative_gram() const {
  auto reps = representatives();
  const auto r = static_cast<Eigen::Index>(reps.size());
  SeriesMatrix g(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) g(i, j) = gram_(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]);
  return g;
}

GramQuotient::Projection GramQuotient::project(const SeriesVector& pairings, const Series* norm) const {
  if (status_ != Status::positive) throw Error("linalg.NotPositive", "projection needs a positive Gram matrix");
  const int n = default_order();
  auto reps = representatives();
  Projection out;
  out.coordinates = SeriesVector(static_cast<Eigen::Index>(reps.size()));
  for (Eigen::Index i = 0; i < out.coordinates.size(); ++i) out.coordinates(i) = Series::zero(n);
  Series captured = Series::zero(n);
  for (std::size_t p = 0; p < pivots_.size(); ++p) {
    const auto pc = static_cast<Eigen::Index>(p);
    Series pr = Series::zero(n);
    for (Eigen::Index j = 0; j < residuals_.rows(); ++j)
      if (!residuals_(j, pc).is_zero() && !pairings(j).is_zero()) pr += residuals_(j, pc).conj() * pairings(j);
    if (pr.is_zero()) continue;
    if (pr.valuation() < pivot_values_[p].valuation()) {
      out.exact = false;
      throw Error("linalg.OutsideSpan", "pairing below pivot valuation; vector not in the presented span");
    }
    Series z = graded_divide(pr, pivot_values_[p]);
    captured += z.conj() * pivot_values_[p] * z;
    for (std::size_t qi = 0; qi < reps.size(); ++qi) {
      const Series& c = residuals_(reps[qi], pc);
      if (!c.is_zero()) out.coordinates(static_cast<Eigen::Index>(qi)) += c * z;
    }
  }
  if (norm != nullptr) out.exact = (*norm == captured);
  return out;
}

}  // namespace starrep
