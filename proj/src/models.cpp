#include "starrep/models.hpp"

namespace starrep {

EquivalenceTransform standard_twist(int k) {
  GaussMatrix h = gauss_zero(k, k), g = gauss_zero(k, k);
  h(0, 0) = Gauss(1);
  for (int i = 0; i + 1 < k; ++i) {
    g(i, i + 1) = Gauss(Rational(1, 2), Rational(1, 2));
    g(i + 1, i) = g(i, i + 1).conj();
  }
  return {{sandwich_map(h), anticommutator_map(g)}};
}

std::shared_ptr<const TwistedAlgebra> standard_twisted_matrix(int k) { return twisted_matrix(k, standard_twist(k)); }

LinearFunctional wick_vacuum(const std::shared_ptr<const PolynomialAlgebra>& wick) {
  return {wick, {{Monomial{0, 0}, Series(1)}}, true};
}

std::vector<Element> polynomial_spanning(const PolynomialAlgebra& a, int d) {
  std::vector<Element> out;
  for (const auto& m : a.monomials_up_to(d)) out.push_back(a.monomial(m));
  return out;
}

LinearFunctional weighted_trace(const AlgebraPtr& matrices, int k, const std::vector<Rational>& weights) {
  std::map<Monomial, Series> v;
  for (int i = 0; i < k; ++i) v[{i, i}] = Series(weights[static_cast<std::size_t>(i)]);
  return {matrices, v, true};
}

std::vector<Element> matrix_units(int k) {
  std::vector<Element> out;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out.push_back(Element::term({i, j}, Series(1)));
  return out;
}

LinearFunctional point_evaluation(const std::shared_ptr<const DiscreteAlgebra>& d, int p) {
  return {d, {{Monomial{p}, Series(1)}}, true};
}

std::vector<Element> square_partition(int points, const std::vector<std::vector<int>>& charts) {
  static const std::vector<std::vector<Rational>> values{
      {Rational(1)},
      {Rational(9, 25), Rational(16, 25)},
      {Rational(4, 9), Rational(4, 9), Rational(1, 9)},
      {Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)}};
  std::vector<std::vector<int>> owners(static_cast<std::size_t>(points));
  for (std::size_t a = 0; a < charts.size(); ++a)
    for (int p : charts[a]) owners[static_cast<std::size_t>(p)].push_back(static_cast<int>(a));
  std::vector<Element> out(charts.size());
  for (int p = 0; p < points; ++p) {
    const auto& o = owners[static_cast<std::size_t>(p)];
    const auto& v = values.at(o.size() - 1);
    for (std::size_t j = 0; j < o.size(); ++j) out[static_cast<std::size_t>(o[j])].add({p}, Series(v[j]));
  }
  return out;
}

CoverModel circle_cover() {
  std::vector<std::vector<int>> charts{{0, 1, 2}, {2, 3, 0}};
  return CoverModel::discrete(4, charts, square_partition(4, charts));
}

TransitionData flat_circle_transitions() {
  TransitionData t;
  t.rank = 1;
  Element phi01 = Element::term({0, 0, 0}, Series(1)) + Element::term({0, 0, 2}, Series(Gauss::i()));
  t.phi[{0, 1}] = phi01;
  t.phi[{1, 0}] = Element::term({0, 0, 0}, Series(1)) + Element::term({0, 0, 2}, Series(-Gauss::i()));
  return t;
}

CoverModel three_chart_cover() {
  std::vector<std::vector<int>> charts{{0, 1, 2, 3}, {2, 3, 4, 5}, {0, 3, 4, 6}};
  return CoverModel::discrete(7, charts, square_partition(7, charts));
}

namespace {

// A k x k unitary with Gaussian-rational entries, varied by idx.
GaussMatrix rational_unitary(int k, int idx) {
  GaussMatrix u = gauss_identity(k);
  if (k == 1) {
    static const Gauss phases[] = {Gauss(1), Gauss::i(), Gauss(-1), Gauss(Rational(3, 5), Rational(4, 5))};
    u(0, 0) = phases[idx % 4];
    return u;
  }
  int plane = idx % (k - 1);
  GaussMatrix r = gauss_identity(k);
  Gauss c(Rational(3, 5)), s(Rational(4, 5));
  if (idx % 2) {
    c = Gauss(Rational(1, 2), Rational(1, 2));
    s = Gauss(Rational(1, 2), Rational(-1, 2));
    r(plane, plane) = c;
    r(plane, plane + 1) = s;
    r(plane + 1, plane) = s;
    r(plane + 1, plane + 1) = c;
  } else {
    r(plane, plane) = c;
    r(plane, plane + 1) = -s;
    r(plane + 1, plane) = s;
    r(plane + 1, plane + 1) = c;
  }
  GaussMatrix d = gauss_identity(k);
  static const Gauss quarter[] = {Gauss(1), Gauss::i(), Gauss(-1), -Gauss::i()};
  d(k - 1, k - 1) = quarter[idx % 4];
  return r * d;
}

Element pointwise_matrix(const std::vector<std::pair<int, SeriesMatrix>>& values) {
  Element out;
  for (const auto& [p, m] : values)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) out.add({static_cast<int>(i), static_cast<int>(j), p}, m(i, j));
  return out;
}

}  // namespace

TransitionData corrected_transitions(const CoverModel& model, int k, bool with_corrections) {
  auto mk = MatrixAlgebra::make(model.functions(), k);
  const int m = model.charts();
  std::vector<Element> g(static_cast<std::size_t>(m)), h(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    std::vector<std::pair<int, SeriesMatrix>> gv, kv;
    for (int p : model.chart_points()[static_cast<std::size_t>(a)]) {
      gv.emplace_back(p, lift(rational_unitary(k, a + 2 * p)));
      // K = i lambda H + lambda^2 A with H Hermitian, A anti-Hermitian
      SeriesMatrix kk = zero_matrix(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          Gauss herm = i == j ? Gauss(Rational(a + p + 1, 3)) : Gauss(Rational(1, 2), Rational(i < j ? a - p : p - a, 4));
          Gauss anti = i == j ? Gauss(Rational(0), Rational(p - a, 5)) : Gauss(Rational(i < j ? 1 : -1, 3), Rational(1, 6));
          kk(i, j) = Series(Gauss::i() * herm) * Series::lambda() + Series(anti) * Series::lambda(2);
        }
      kv.emplace_back(p, kk);
    }
    Element e = mk->diagonal(model.support(a));
    g[static_cast<std::size_t>(a)] = pointwise_matrix(gv);
    if (with_corrections) {
      Element kk = pointwise_matrix(kv);
      h[static_cast<std::size_t>(a)] =
          mk->multiply(e, mk->multiply(mk->unit() + kk, star_inverse(*mk, mk->unit() - kk)));
    } else {
      h[static_cast<std::size_t>(a)] = e;
    }
  }
  TransitionData t;
  t.rank = k;
  for (const auto& [a, b] : model.overlaps())
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      Element e = mk->diagonal(model.overlap(x, y));
      Element left = mk->multiply(h[static_cast<std::size_t>(x)], g[static_cast<std::size_t>(x)]);
      Element right = mk->multiply(mk->involution(g[static_cast<std::size_t>(y)]), mk->involution(h[static_cast<std::size_t>(y)]));
      t.phi[{x, y}] = mk->multiply(e, mk->multiply(left, right));
    }
  return t;
}

CoverModel tetra_sphere_cover() {
  // edges 4..9: 01 02 03 12 13 23; faces 10..13: 012 013 023 123
  std::vector<std::vector<int>> charts{{0, 4, 5, 6, 10, 11, 12}, {1, 4, 7, 8, 10, 11, 13}, {2, 5, 7, 9, 10, 12, 13},
                                       {3, 6, 8, 9, 11, 12, 13}};
  return CoverModel::discrete(14, charts, square_partition(14, charts));
}

std::map<ChartPair, LogElement> tetra_sphere_logs(bool with_corrections) {
  CoverModel model = tetra_sphere_cover();
  auto quarter = [](std::vector<std::pair<int, Rational>> v) {
    Element e;
    for (const auto& [p, q] : v) e.add({p}, Series(q));
    return e;
  };
  std::map<ChartPair, LogElement> upper;
  for (const auto& [a, b] : model.overlaps()) upper[{a, b}] = LogElement{};
  // winding on the edges around the face (1,2,3)
  upper[{1, 2}].turns = quarter({{7, Rational(1, 4)}, {13, Rational(1, 4)}});
  upper[{1, 3}].turns = quarter({{8, Rational(-1, 4)}, {13, Rational(-1, 2)}});
  upper[{2, 3}].turns = quarter({{13, Rational(1, 4)}});
  if (with_corrections) {
    const Algebra& f = *model.functions();
    for (auto& [key, log] : upper) {
      auto [a, b] = key;
      Element r;
      for (int p : model.points_of(model.overlap(a, b))) {
        auto local = [&](int c) {
          return Series(Gauss(Rational(0), Rational(c + p + 1, 5))) * Series::lambda() +
                 Series(Gauss(Rational(0), Rational(p - c, 7))) * Series::lambda(2);
        };
        r.add({p}, local(a) - local(b));
      }
      log.rest = f.multiply(model.overlap(a, b), r);
    }
  }
  return complete_logs(model, upper);
}

}  // namespace starrep
