#include "starrep/algebras.hpp"

#include <numeric>

#include "starrep/linalg.hpp"
#include "starrep/random.hpp"

namespace starrep {

namespace {

Rational falling(long n, long k) {
  Rational r(1);
  for (long j = 0; j < k; ++j) r *= (n - j);
  return r;
}

Rational factorial(long n) { return falling(n, n); }

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Adds c * lambda^shift * prod under monomial m.
void add_shifted(Element& out, const Monomial& m, const Series& prod, int shift, const Gauss& c) {
  if (shift > prod.order()) return;
  Series s = prod.shifted(shift);
  s *= c;
  out.add(m, s);
}

}  // namespace

// PolynomialAlgebra ------------------------------------------------------------

PolynomialAlgebra::PolynomialAlgebra(Kind kind, int n, int degree_cap, bool deformed)
    : kind_(kind), n_(n), degree_cap_(degree_cap), deformed_(deformed) {}

std::shared_ptr<const PolynomialAlgebra> PolynomialAlgebra::moyal(int n, int degree_cap) {
  return std::make_shared<PolynomialAlgebra>(Kind::moyal, n, degree_cap, true);
}

std::shared_ptr<const PolynomialAlgebra> PolynomialAlgebra::wick(int degree_cap) {
  return std::make_shared<PolynomialAlgebra>(Kind::wick, 1, degree_cap, true);
}

std::string PolynomialAlgebra::id() const {
  std::string base = kind_ == Kind::wick ? "wick" : "moyal(" + std::to_string(n_) + ")";
  return deformed_ ? base : "classical " + base;
}

Element PolynomialAlgebra::multiply(const Element& f, const Element& g) const {
  Element out;
  const int order = default_order();
  const int max_r = deformed_ ? order : 0;
  for (const auto& [m1, c1] : f.terms()) {
    for (const auto& [m2, c2] : g.terms()) {
      Series prod = c1 * c2;
      if (prod.is_zero()) continue;
      if (degree(m1) + degree(m2) > degree_cap_)
        throw Error("staralg.DegreeOverflow", "product degree " + std::to_string(degree(m1) + degree(m2)) +
                                                  " exceeds cap " + std::to_string(degree_cap_));
      if (kind_ == Kind::wick) {
        const int a = m1[0], b = m1[1], c = m2[0], d = m2[1];
        for (int r = 0; r <= std::min({b, c, max_r}); ++r) {
          Rational coef = falling(b, r) * falling(c, r) / factorial(r);
          add_shifted(out, {a + c - r, b + d - r}, prod, r, Gauss(coef));
        }
        continue;
      }
      // Moyal: enumerate alpha <= min(a, d), beta <= min(b, c) componentwise.
      const int n = n_;
      std::vector<int> alpha(static_cast<std::size_t>(n), 0), beta(static_cast<std::size_t>(n), 0);
      std::vector<int> amax(static_cast<std::size_t>(n)), bmax(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        amax[static_cast<std::size_t>(j)] = std::min(m1[static_cast<std::size_t>(j)], m2[static_cast<std::size_t>(n + j)]);
        bmax[static_cast<std::size_t>(j)] = std::min(m1[static_cast<std::size_t>(n + j)], m2[static_cast<std::size_t>(j)]);
      }
      while (true) {
        int r = 0, rb = 0;
        for (int j = 0; j < n; ++j) {
          r += alpha[static_cast<std::size_t>(j)] + beta[static_cast<std::size_t>(j)];
          rb += beta[static_cast<std::size_t>(j)];
        }
        if (r <= max_r) {
          Rational coef(1);
          Monomial m(static_cast<std::size_t>(2 * n));
          for (int j = 0; j < n; ++j) {
            const auto J = static_cast<std::size_t>(j), NJ = static_cast<std::size_t>(n + j);
            int al = alpha[J], be = beta[J];
            coef *= falling(m1[J], al) * falling(m1[NJ], be) * falling(m2[NJ], al) * falling(m2[J], be);
            coef /= factorial(al) * factorial(be);
            m[J] = m1[J] + m2[J] - al - be;
            m[NJ] = m1[NJ] + m2[NJ] - al - be;
          }
          // (i/2)^r (-1)^rb
          Gauss phase(Rational(1));
          for (int k = 0; k < r; ++k) phase *= Gauss(Rational(0), Rational(1, 2));
          if (rb % 2) phase = -phase;
          add_shifted(out, m, prod, r, phase * Gauss(coef));
        }
        // odometer over (alpha, beta)
        int pos = 0;
        for (; pos < 2 * n; ++pos) {
          int& slot = pos < n ? alpha[static_cast<std::size_t>(pos)] : beta[static_cast<std::size_t>(pos - n)];
          int lim = pos < n ? amax[static_cast<std::size_t>(pos)] : bmax[static_cast<std::size_t>(pos - n)];
          if (slot < lim) {
            ++slot;
            break;
          }
          slot = 0;
        }
        if (pos == 2 * n) break;
      }
    }
  }
  return out;
}

Element PolynomialAlgebra::involution(const Element& f) const {
  Element out;
  for (const auto& [m, c] : f.terms()) {
    Monomial mm = m;
    if (kind_ == Kind::wick) std::swap(mm[0], mm[1]);
    out.add(mm, c.conj());
  }
  return out;
}

Element PolynomialAlgebra::unit() const {
  return Element::term(Monomial(static_cast<std::size_t>(variables()), 0), Series(1));
}

AlgebraPtr PolynomialAlgebra::classical() const {
  return std::make_shared<PolynomialAlgebra>(kind_, n_, degree_cap_, false);
}

Element PolynomialAlgebra::variable(int index) const {
  Monomial m(static_cast<std::size_t>(variables()), 0);
  m[static_cast<std::size_t>(index)] = 1;
  return Element::term(m, Series(1));
}

std::vector<Element> PolynomialAlgebra::generators() const {
  std::vector<Element> g;
  for (int i = 0; i < variables(); ++i) g.push_back(variable(i));
  return g;
}

std::vector<Monomial> PolynomialAlgebra::monomials_up_to(int d) const {
  std::vector<Monomial> out;
  const int v = variables();
  for (int total = 0; total <= d; ++total) {
    // compositions of total into v parts, lexicographically descending in the first slot
    Monomial m(static_cast<std::size_t>(v), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == v - 1) {
        m[static_cast<std::size_t>(pos)] = left;
        out.push_back(m);
        return;
      }
      for (int e = left; e >= 0; --e) {
        m[static_cast<std::size_t>(pos)] = e;
        rec(pos + 1, left - e);
      }
    };
    rec(0, total);
  }
  return out;
}

Element PolynomialAlgebra::random_element(std::mt19937_64& rng) const {
  Element e;
  auto monos = monomials_up_to(3);
  const long terms = uniform_int(rng, 1, 4);
  for (long t = 0; t < terms; ++t)
    e.add(monos[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(monos.size()) - 1))], random_series(rng, 2));
  return e;
}

Element PolynomialAlgebra::classical_inverse(const Element& u0) const {
  Monomial constant(static_cast<std::size_t>(variables()), 0);
  if (u0.size() != 1 || u0.terms().begin()->first != constant || u0.terms().begin()->second[0].is_zero())
    throw Error("staralg.NonInvertibleClassicalPart", "classical part must be a nonzero constant");
  return Element::term(constant, Series(u0.terms().begin()->second[0].inverse()));
}

Element PolynomialAlgebra::derivative(const Element& f, int var, int times) const {
  Element out;
  for (const auto& [m, c] : f.terms()) {
    int e = m[static_cast<std::size_t>(var)];
    if (e < times) continue;
    Monomial mm = m;
    mm[static_cast<std::size_t>(var)] -= times;
    Series s = c;
    s *= Gauss(falling(e, times));
    out.add(mm, s);
  }
  return out;
}

Element PolynomialAlgebra::commutative_product(const Element& f, const Element& g) const {
  Element out;
  for (const auto& [m1, c1] : f.terms())
    for (const auto& [m2, c2] : g.terms()) {
      Series prod = c1 * c2;
      if (prod.is_zero()) continue;
      if (degree(m1) + degree(m2) > degree_cap_) throw Error("staralg.DegreeOverflow", "commutative product exceeds cap");
      Monomial m = m1;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += m2[i];
      out.add(m, prod);
    }
  return out;
}

// ScalarAlgebra ---------------------------------------------------------------

std::shared_ptr<const ScalarAlgebra> ScalarAlgebra::instance() {
  static const auto inst = std::make_shared<const ScalarAlgebra>();
  return inst;
}

Element ScalarAlgebra::multiply(const Element& f, const Element& g) const {
  return Element::scalar(f.coefficient({}) * g.coefficient({}));
}

Element ScalarAlgebra::involution(const Element& f) const { return Element::scalar(f.coefficient({}).conj()); }

Element ScalarAlgebra::random_element(std::mt19937_64& rng) const { return Element::scalar(random_series(rng, 2)); }

// DiscreteAlgebra -------------------------------------------------------------

std::shared_ptr<const DiscreteAlgebra> DiscreteAlgebra::make(int points) {
  return std::make_shared<const DiscreteAlgebra>(points);
}

Element DiscreteAlgebra::multiply(const Element& f, const Element& g) const {
  Element out;
  for (const auto& [m, c] : f.terms()) {
    auto it = g.terms().find(m);
    if (it != g.terms().end()) out.add(m, c * it->second);
  }
  return out;
}

Element DiscreteAlgebra::involution(const Element& f) const {
  Element out;
  for (const auto& [m, c] : f.terms()) out.add(m, c.conj());
  return out;
}

Element DiscreteAlgebra::unit() const {
  Element e;
  for (int p = 0; p < points_; ++p) e.add({p}, Series(1));
  return e;
}

AlgebraPtr DiscreteAlgebra::classical() const { return make(points_); }

std::vector<Element> DiscreteAlgebra::generators() const {
  std::vector<Element> g;
  for (int p = 0; p < points_; ++p) g.push_back(indicator(p));
  return g;
}

Element DiscreteAlgebra::random_element(std::mt19937_64& rng) const {
  Element e;
  for (int p = 0; p < points_; ++p) e.add({p}, random_series(rng, 2));
  return e;
}

std::vector<Monomial> DiscreteAlgebra::basis_monomials() const {
  std::vector<Monomial> b;
  for (int p = 0; p < points_; ++p) b.push_back({p});
  return b;
}

Element DiscreteAlgebra::classical_inverse(const Element& u0) const {
  Element inv;
  for (int p = 0; p < points_; ++p) {
    Gauss v = u0.coefficient({p})[0];
    if (v.is_zero())
      throw Error("staralg.NonInvertibleClassicalPart", "function vanishes at point " + std::to_string(p));
    inv.add({p}, Series(v.inverse()));
  }
  return inv;
}

Element DiscreteAlgebra::phase_exponential(const Element& turns) const {
  Element out;
  for (int p = 0; p < points_; ++p) {
    Series q = turns.coefficient({p});
    if (valuation(lambda_part(turns, 0)) > 0 && !q.is_zero()) throw Error("staralg.DomainRestriction", "phase must be lambda-free");
    for (int r = 1; r <= q.order(); ++r)
      if (!q[r].is_zero()) throw Error("staralg.DomainRestriction", "phase must be lambda-free");
    if (!q[0].is_real()) throw Error("staralg.DomainRestriction", "phase must be real");
    out.add({p}, Series(root_of_unity(q[0].re)));
  }
  return out;
}

Element DiscreteAlgebra::phase_logarithm(const Element& u0) const {
  Element out;
  for (int p = 0; p < points_; ++p) out.add({p}, Series(Gauss(quarter_turns(u0.coefficient({p})[0]))));
  return out;
}

// MatrixAlgebra ---------------------------------------------------------------

MatrixAlgebra::MatrixAlgebra(AlgebraPtr base, int k) : base_(std::move(base)), k_(k) {}

std::shared_ptr<const MatrixAlgebra> MatrixAlgebra::make(AlgebraPtr base, int k) {
  return std::make_shared<const MatrixAlgebra>(std::move(base), k);
}

std::string MatrixAlgebra::id() const { return "M" + std::to_string(k_) + "(" + base_->id() + ")"; }

namespace {

using Grid = std::vector<std::vector<Element>>;

Grid split(const Element& m, int k) {
  Grid g(static_cast<std::size_t>(k), std::vector<Element>(static_cast<std::size_t>(k)));
  for (const auto& [mono, c] : m.terms()) {
    if (mono.size() < 2 || mono[0] < 0 || mono[0] >= k || mono[1] < 0 || mono[1] >= k)
      throw Error("staralg.NotInAlgebra", "monomial is not a matrix entry");
    g[static_cast<std::size_t>(mono[0])][static_cast<std::size_t>(mono[1])].add(Monomial(mono.begin() + 2, mono.end()), c);
  }
  return g;
}

Element join(const Grid& g) {
  Element out;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g[i].size(); ++j)
      for (const auto& [mono, c] : g[i][j].terms()) {
        Monomial m{static_cast<int>(i), static_cast<int>(j)};
        m.insert(m.end(), mono.begin(), mono.end());
        out.add(m, c);
      }
  return out;
}

}  // namespace

Element MatrixAlgebra::multiply(const Element& f, const Element& g) const {
  Grid a = split(f, k_), b = split(g, k_);
  Grid c(static_cast<std::size_t>(k_), std::vector<Element>(static_cast<std::size_t>(k_)));
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) {
      const Element& aij = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (aij.is_zero()) continue;
      for (int l = 0; l < k_; ++l) {
        const Element& bjl = b[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
        if (!bjl.is_zero()) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] += base_->multiply(aij, bjl);
      }
    }
  return join(c);
}

Element MatrixAlgebra::involution(const Element& f) const {
  Grid a = split(f, k_);
  Grid t(static_cast<std::size_t>(k_), std::vector<Element>(static_cast<std::size_t>(k_)));
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          base_->involution(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return join(t);
}

Element MatrixAlgebra::unit() const { return diagonal(base_->unit()); }

AlgebraPtr MatrixAlgebra::classical() const { return make(base_->classical(), k_); }

std::vector<Element> MatrixAlgebra::generators() const {
  std::vector<Element> g;
  Element one = base_->unit();
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) g.push_back(embed(i, j, one));
  for (const auto& b : base_->generators()) g.push_back(diagonal(b));
  return g;
}

Element MatrixAlgebra::random_element(std::mt19937_64& rng) const {
  Grid g(static_cast<std::size_t>(k_), std::vector<Element>(static_cast<std::size_t>(k_)));
  for (auto& row : g)
    for (auto& e : row) e = base_->random_element(rng);
  return join(g);
}

std::vector<Monomial> MatrixAlgebra::basis_monomials() const {
  auto inner = base_->basis_monomials();
  if (inner.empty()) return {};
  std::vector<Monomial> out;
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      for (const auto& m : inner) {
        Monomial mm{i, j};
        mm.insert(mm.end(), m.begin(), m.end());
        out.push_back(mm);
      }
  return out;
}

Element MatrixAlgebra::classical_inverse(const Element& u0) const {
  if (!base_->basis_monomials().empty()) return Algebra::classical_inverse(u0);
  // Entries must be multiples of the base unit.
  Element one = classical_part(base_->unit());
  Grid a = split(u0, k_);
  GaussMatrix m = gauss_zero(k_, k_);
  const auto& [m0, c0] = *one.terms().begin();
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) {
      const Element& e = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      Gauss z = e.coefficient(m0)[0] / c0[0];
      if (Series(z) * one != e)
        throw Error("staralg.NonInvertibleClassicalPart", "matrix entries must be constant for " + id());
      m(i, j) = z;
    }
  GaussMatrix inv;
  try {
    inv = gauss_inverse(m);
  } catch (const Error&) {
    throw Error("staralg.NonInvertibleClassicalPart", "singular classical matrix in " + id());
  }
  Grid out(static_cast<std::size_t>(k_), std::vector<Element>(static_cast<std::size_t>(k_)));
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Series(inv(i, j)) * one;
  return join(out);
}

Element MatrixAlgebra::entry(const Element& m, int i, int j) const {
  return split(m, k_)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

Element MatrixAlgebra::embed(int i, int j, const Element& a) const {
  Grid g(static_cast<std::size_t>(k_), std::vector<Element>(static_cast<std::size_t>(k_)));
  g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a;
  return join(g);
}

Element MatrixAlgebra::from_entries(const std::vector<std::vector<Element>>& entries) const { return join(entries); }

Element MatrixAlgebra::diagonal(const Element& a) const {
  Grid g(static_cast<std::size_t>(k_), std::vector<Element>(static_cast<std::size_t>(k_)));
  for (int i = 0; i < k_; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = a;
  return join(g);
}

Element MatrixAlgebra::trace(const Element& m) const {
  Grid g = split(m, k_);
  Element t;
  for (int i = 0; i < k_; ++i) t += g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  return t;
}

// EquivalenceTransform ---------------------------------------------------------

namespace {

std::vector<GaussVector> coefficient_vectors(const SeriesVector& c, int n) {
  std::vector<GaussVector> out(static_cast<std::size_t>(n) + 1, GaussVector(c.size()));
  for (int r = 0; r <= n; ++r)
    for (Eigen::Index i = 0; i < c.size(); ++i) out[static_cast<std::size_t>(r)](i) = c(i)[r];
  return out;
}

GaussVector apply_matrix(const GaussMatrix& m, const GaussVector& v) {
  GaussVector out(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Gauss acc;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v(j).is_zero()) acc += m(i, j) * v(j);
    out(i) = acc;
  }
  return out;
}

GaussMatrix matmul(const GaussMatrix& a, const GaussMatrix& b) {
  GaussMatrix out = gauss_zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

}  // namespace

SeriesVector EquivalenceTransform::apply(const SeriesVector& c) const {
  const int n = c.size() ? c(0).order() : default_order();
  auto coeffs = coefficient_vectors(c, n);
  SeriesVector out = c;
  for (std::size_t r = 1; r <= orders.size() && static_cast<int>(r) <= n; ++r) {
    for (int s = 0; s + static_cast<int>(r) <= n; ++s) {
      GaussVector add = apply_matrix(orders[r - 1], coeffs[static_cast<std::size_t>(s)]);
      for (Eigen::Index i = 0; i < c.size(); ++i)
        if (!add(i).is_zero()) out(i)[s + static_cast<int>(r)] += add(i);
    }
  }
  return out;
}

EquivalenceTransform EquivalenceTransform::compose(const EquivalenceTransform& s, const EquivalenceTransform& t, int dim) {
  auto at = [dim](const EquivalenceTransform& x, std::size_t r) {
    if (r == 0) return gauss_identity(dim);
    return r <= x.orders.size() ? x.orders[r - 1] : gauss_zero(dim, dim);
  };
  EquivalenceTransform out;
  const std::size_t top = s.orders.size() + t.orders.size();
  for (std::size_t r = 1; r <= top; ++r) {
    GaussMatrix acc = gauss_zero(dim, dim);
    for (std::size_t a = 0; a <= r; ++a) acc += matmul(at(s, a), at(t, r - a));
    out.orders.push_back(acc);
  }
  return out;
}

EquivalenceTransform EquivalenceTransform::inverse(int n, int dim) const {
  EquivalenceTransform inv;
  std::vector<GaussMatrix> sm{gauss_identity(dim)};
  for (int t = 1; t <= n; ++t) {
    GaussMatrix acc = gauss_zero(dim, dim);
    for (int r = 1; r <= t && r <= static_cast<int>(orders.size()); ++r)
      acc -= matmul(orders[static_cast<std::size_t>(r - 1)], sm[static_cast<std::size_t>(t - r)]);
    sm.push_back(acc);
    inv.orders.push_back(acc);
  }
  return inv;
}

// TwistedAlgebra --------------------------------------------------------------

TwistedAlgebra::TwistedAlgebra(AlgebraPtr base, EquivalenceTransform t) : base_(std::move(base)), t_(std::move(t)) {
  const auto dim = static_cast<Eigen::Index>(base_->basis_monomials().size());
  if (dim == 0) throw Error("staralg.NoBasis", "twisting needs a finite-dimensional base algebra");
  for (const auto& m : t_.orders)
    if (m.rows() != dim || m.cols() != dim) throw Error("staralg.BadTransform", "transform dimension mismatch");
}

std::string TwistedAlgebra::id() const { return "twisted(" + base_->id() + ")"; }

const EquivalenceTransform& TwistedAlgebra::inverse_transform() const {
  const int n = default_order();
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = inverse_cache_.find(n);
  if (it == inverse_cache_.end())
    it = inverse_cache_.emplace(n, t_.inverse(n, static_cast<int>(base_->basis_monomials().size()))).first;
  return it->second;
}

Element TwistedAlgebra::apply(const Element& a) const {
  if (t_.orders.empty()) return a;
  return from_coordinates(*base_, t_.apply(coordinates(*base_, a)));
}

Element TwistedAlgebra::apply_inverse(const Element& a) const {
  if (t_.orders.empty()) return a;
  return from_coordinates(*base_, inverse_transform().apply(coordinates(*base_, a)));
}

Element TwistedAlgebra::multiply(const Element& f, const Element& g) const {
  return apply_inverse(base_->multiply(apply(f), apply(g)));
}

Element TwistedAlgebra::unit() const { return apply_inverse(base_->unit()); }

bool TwistedAlgebra::star_compatible() const {
  for (const auto& m : base_->basis_monomials()) {
    Element b = Element::term(m, Series(1));
    Element ib = Element::term(m, Series(Gauss::i()));
    for (const Element& e : {b, ib})
      if (apply(base_->involution(e)) != base_->involution(apply(e))) return false;
  }
  return true;
}

std::shared_ptr<const TwistedAlgebra> twisted_matrix(int k, EquivalenceTransform t) {
  return std::make_shared<const TwistedAlgebra>(MatrixAlgebra::make(ScalarAlgebra::instance(), k), std::move(t));
}

std::shared_ptr<const TwistedAlgebra> twist_algebra(const AlgebraPtr& base, const EquivalenceTransform& t) {
  if (auto tw = std::dynamic_pointer_cast<const TwistedAlgebra>(base)) {
    const int dim = static_cast<int>(tw->basis_monomials().size());
    return std::make_shared<const TwistedAlgebra>(tw->base(), EquivalenceTransform::compose(tw->transform(), t, dim));
  }
  return std::make_shared<const TwistedAlgebra>(base, t);
}

Element matrix_element(const SeriesMatrix& m) {
  Element e;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) e.add({static_cast<int>(i), static_cast<int>(j)}, m(i, j));
  return e;
}

SeriesMatrix element_matrix(const Element& e, int k) {
  SeriesMatrix m = zero_matrix(k, k);
  for (const auto& [mono, c] : e.terms()) {
    if (mono.size() != 2 || mono[0] < 0 || mono[0] >= k || mono[1] < 0 || mono[1] >= k)
      throw Error("staralg.NotInAlgebra", "not an element of M_" + std::to_string(k) + "(C[[lambda]])");
    m(mono[0], mono[1]) = c;
  }
  return m;
}

GaussMatrix sandwich_map(const GaussMatrix& h) {
  const Eigen::Index k = h.rows();
  GaussMatrix m = gauss_zero(k * k, k * k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index l = 0; l < k; ++l)
      for (Eigen::Index j = 0; j < k; ++j)
        for (Eigen::Index q = 0; q < k; ++q) m(i * k + l, j * k + q) = h(i, j) * h(q, l);
  return m;
}

GaussMatrix anticommutator_map(const GaussMatrix& h) {
  const Eigen::Index k = h.rows();
  GaussMatrix m = gauss_zero(k * k, k * k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index l = 0; l < k; ++l) {
      for (Eigen::Index j = 0; j < k; ++j) m(i * k + l, j * k + l) += h(i, j);
      for (Eigen::Index q = 0; q < k; ++q) m(i * k + l, i * k + q) += h(q, l);
    }
  return m;
}

GaussMatrix left_multiplication_map(const GaussMatrix& n) {
  const Eigen::Index k = n.rows();
  GaussMatrix m = gauss_zero(k * k, k * k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index l = 0; l < k; ++l)
      for (Eigen::Index j = 0; j < k; ++j) m(i * k + l, j * k + l) = n(i, j);
  return m;
}

// CornerAlgebra ---------------------------------------------------------------

CornerAlgebra::CornerAlgebra(AlgebraPtr ambient, Element projection, std::vector<Element> spanning)
    : ambient_(std::move(ambient)), projection_(std::move(projection)), spanning_(std::move(spanning)) {}

AlgebraPtr CornerAlgebra::classical() const {
  std::vector<Element> span;
  for (const auto& s : spanning_) span.push_back(classical_part(s));
  return std::make_shared<const CornerAlgebra>(ambient_->classical(), classical_part(projection_), span);
}

Element CornerAlgebra::compress(const Element& a) const {
  return ambient_->multiply(projection_, ambient_->multiply(a, projection_));
}

Element CornerAlgebra::random_element(std::mt19937_64& rng) const { return compress(ambient_->random_element(rng)); }

// CorruptedAlgebra ------------------------------------------------------------

Element CorruptedAlgebra::multiply(const Element& f, const Element& g) const {
  Element out = base_->multiply(f, g);
  Element spurious = base_->commutative_product(base_->derivative(f, 0, 2), base_->derivative(g, 0, 2));
  for (const auto& [m, c] : spurious.terms()) out.add(m, c.shifted(order_));
  return out;
}

}  // namespace starrep
