#include <gtest/gtest.h>

#include "starrep/cover.hpp"
#include "starrep/errors.hpp"
#include "starrep/models.hpp"
#include "starrep/random.hpp"

using namespace starrep;

namespace {

void expect_code(const std::function<void()>& f, const std::string& code) {
  try {
    f();
    FAIL() << "expected " << code;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// column vector with random entries supported in each chart, glued classically
Family random_section(const CoverBundle& b, std::mt19937_64& rng) {
  const Algebra& f = *b.model().functions();
  Family local(static_cast<std::size_t>(b.model().charts()));
  for (int a = 0; a < b.model().charts(); ++a)
    for (int i = 0; i < b.rank(); ++i)
      local[static_cast<std::size_t>(a)] +=
          b.matrices()->embed(i, 0, f.multiply(b.model().support(a), f.random_element(rng)));
  return b.classical_glue(local);
}

Family random_endo(const CoverBundle& b, std::mt19937_64& rng) {
  const Algebra& f = *b.model().functions();
  Family local(static_cast<std::size_t>(b.model().charts()));
  for (int a = 0; a < b.model().charts(); ++a)
    for (int i = 0; i < b.rank(); ++i)
      for (int j = 0; j < b.rank(); ++j)
        local[static_cast<std::size_t>(a)] +=
            b.matrices()->embed(i, j, f.multiply(b.model().support(a), f.random_element(rng)));
  return b.classical_endo_glue(local);
}

CoverBundle three_chart(int k, bool corrections = true) {
  CoverModel m = three_chart_cover();
  return {m, corrected_transitions(m, k, corrections)};
}

}  // namespace

TEST(CoverModel, Nerves) {
  EXPECT_EQ(circle_cover().overlaps().size(), 1u);
  EXPECT_TRUE(circle_cover().triples().empty());
  CoverModel three = three_chart_cover();
  EXPECT_EQ(three.overlaps().size(), 3u);
  ASSERT_EQ(three.triples().size(), 1u);
  EXPECT_EQ(three.points_of(three.triple_overlap(three.triples()[0])), std::vector<int>{3});
  CoverModel tetra = tetra_sphere_cover();
  EXPECT_EQ(tetra.overlaps().size(), 6u);
  EXPECT_EQ(tetra.triples().size(), 4u);
  for (const auto& t : tetra.triples()) EXPECT_EQ(tetra.points_of(tetra.triple_overlap(t)).size(), 1u);
}

TEST(CoverModel, PartitionChecks) {
  CoverModel three = three_chart_cover();
  auto chi = three.quadratic_partition();
  const Algebra& f = *three.functions();
  Element total;
  for (const auto& c : chi) total += f.multiply(f.involution(c), c);
  EXPECT_EQ(total, f.unit());
  auto d = DiscreteAlgebra::make(2);
  expect_code([&] { CoverModel::discrete(2, {{0}, {1}}, {d->indicator(0), d->indicator(0)}); }, "cover.InvalidModel");
  expect_code([&] { CoverModel::discrete(3, {{0}, {1}}, {d->indicator(0), d->indicator(1)}); }, "cover.InvalidModel");
  auto half = Series(Rational(1, 2)) * d->indicator(0);
  CoverModel no_root = CoverModel::discrete(2, {{0, 1}, {0}}, {half + d->indicator(1), half});
  expect_code([&] { no_root.quadratic_partition(); }, "cover.PartitionRepairFailure");
}

TEST(Transitions, CocycleIsChecked) {
  CoverModel m = three_chart_cover();
  for (int k : {1, 2, 3}) EXPECT_NO_THROW(CoverBundle(m, corrected_transitions(m, k)));
  EXPECT_TRUE(three_chart(2).unitary());
  TransitionData bad = corrected_transitions(m, 2);
  auto mk = MatrixAlgebra::make(m.functions(), 2);
  bad.phi[{0, 1}] = mk->multiply(bad.phi[{0, 1}], mk->unit() + Series::lambda(3) * mk->diagonal(m.overlap(0, 1)));
  expect_code([&] { CoverBundle(m, bad); }, "cover.CocycleViolation");
  TransitionData missing = corrected_transitions(m, 2);
  missing.phi.erase({2, 0});
  expect_code([&] { CoverBundle(m, missing); }, "cover.CocycleViolation");
}

TEST(Frames, ExpandInFrame) {
  std::mt19937_64 rng(71);
  auto d = DiscreteAlgebra::make(3);
  auto m2 = MatrixAlgebra::make(d, 2);
  Element s = m2->embed(0, 0, d->random_element(rng)) + m2->embed(1, 0, d->random_element(rng));
  Element s0 = classical_part(s);
  EXPECT_EQ(expand_in_frame(*m2, m2->unit(), s0), s0);
  // E = 1 + lambda M: coefficients start s - lambda M s
  Element mm = classical_part(m2->random_element(rng));
  Element frame = m2->unit() + Series::lambda() * mm;
  Element c = expand_in_frame(*m2, frame, s0);
  EXPECT_EQ(truncated_below(c, 2), truncated_below(s0 - Series::lambda() * m2->multiply(mm, s0), 2));
  for (int k = 0; k < 100; ++k) {
    Element e = m2->unit() + Series::lambda() * m2->random_element(rng);
    Element v = m2->embed(0, 0, d->random_element(rng)) + m2->embed(1, 0, d->random_element(rng));
    ASSERT_EQ(m2->multiply(e, expand_in_frame(*m2, e, v)), v);
  }
  expect_code([&] { expand_in_frame(*m2, m2->embed(0, 0, d->unit()), s0); }, "cover.DegenerateFrame");
}

TEST(Frames, Orthonormalize) {
  std::mt19937_64 rng(72);
  auto m2 = MatrixAlgebra::make(ScalarAlgebra::instance(), 2);
  EXPECT_EQ(orthonormalize_frame(*m2, m2->unit()), m2->unit());
  SeriesMatrix h(2, 2);
  h << Series(1), Series(Gauss(Rational(1), Rational(2))), Series(Gauss(Rational(1), Rational(-2))), Series(-3);
  Element hh = matrix_element(h);
  Element g = m2->unit() + Series::lambda() * hh;
  Element v = orthonormalize_frame(*m2, g);
  EXPECT_EQ(truncated_below(v, 2), truncated_below(m2->unit() - Series(Rational(-1, 2)) * -(Series::lambda() * hh), 2));
  EXPECT_EQ(m2->multiply(m2->involution(v), m2->multiply(g, v)), m2->unit());
  for (int k = 0; k < 20; ++k) {
    Element b = m2->unit() + Series::lambda() * m2->random_element(rng);
    Element gram = m2->multiply(m2->involution(b), b);
    Element w = orthonormalize_frame(*m2, gram);
    ASSERT_EQ(m2->multiply(m2->involution(w), m2->multiply(gram, w)), m2->unit());
  }
  expect_code([&] { orthonormalize_frame(*m2, Series(2) * m2->unit()); }, "cover.ClassicalNotOrthonormal");
}

TEST(Gluing, SingleChartAndFlat) {
  std::mt19937_64 rng(73);
  auto moyal = PolynomialAlgebra::moyal(1);
  CoverBundle single(CoverModel::single_chart(moyal), TransitionData{2, {}});
  Family s = random_section(single, rng);
  EXPECT_EQ(single.glue(s), s);

  CoverBundle flat(circle_cover(), flat_circle_transitions());
  for (int k = 0; k < 10; ++k) {
    Family t = random_section(flat, rng);
    EXPECT_TRUE(flat.compatible(t, true));
    EXPECT_EQ(flat.glue(t), t);
    Element f = flat.model().functions()->random_element(rng);
    Family tf = t;
    for (auto& v : tf) v = flat.matrices()->multiply(v, flat.matrices()->diagonal(f));
    EXPECT_EQ(flat.right_action(t, f), tf);
  }
}

TEST(Gluing, CorrectedTransitions) {
  std::mt19937_64 rng(74);
  CoverBundle b = three_chart(2);
  for (int k = 0; k < 10; ++k) {
    Family s = random_section(b, rng);
    Family g = b.glue(s);
    ASSERT_TRUE(b.compatible(g)) << to_string(g);
    Family g0(g.size());
    for (std::size_t a = 0; a < g.size(); ++a) g0[a] = classical_part(g[a]);
    Family s0(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) s0[a] = classical_part(s[a]);
    EXPECT_EQ(g0, s0);
    EXPECT_EQ(b.unglue(g), s);
  }
  Family bad = b.glue(random_section(b, rng));
  bad[0] = bad[0] + Series::lambda(2) * b.matrices()->embed(0, 0, b.model().support(0));
  expect_code([&] { b.unglue(bad); }, "cover.CocycleViolation");
}

TEST(GluedModule, RightActionAndInnerProduct) {
  std::mt19937_64 rng(75);
  CoverBundle b = three_chart(2);
  const Algebra& f = *b.model().functions();
  for (int k = 0; k < 100; ++k) {
    Family s = random_section(b, rng);
    Element x = f.random_element(rng), y = f.random_element(rng);
    ASSERT_EQ(b.right_action(b.right_action(s, x), y), b.right_action(s, f.multiply(x, y)));
  }
  for (int k = 0; k < 10; ++k) {
    Family s = random_section(b, rng), t = random_section(b, rng);
    Family local = b.local_inner(b.glue(s), b.glue(t));
    for (const auto& [a, c] : b.model().overlaps()) {
      Element e = b.model().overlap(a, c);
      EXPECT_EQ(f.multiply(e, local[static_cast<std::size_t>(a)]), f.multiply(e, local[static_cast<std::size_t>(c)]));
    }
    Element h = b.inner(s, t);
    EXPECT_EQ(f.involution(h), b.inner(t, s));
    Element x = f.random_element(rng);
    EXPECT_EQ(b.inner(s, b.right_action(t, x)), f.multiply(h, x));
    Element hs = b.inner(s, s);
    for (const auto& [m, c] : hs.terms()) EXPECT_TRUE(is_nonnegative(c));
  }
  TransitionData skew = flat_circle_transitions();
  skew.phi[{0, 1}] = Series(2) * skew.phi[{0, 1}];
  skew.phi[{1, 0}] = Series(Rational(1, 2)) * skew.phi[{1, 0}];
  CoverBundle nonunitary(circle_cover(), skew);
  Family s = random_section(nonunitary, rng);
  expect_code([&] { nonunitary.inner(s, s); }, "cover.NonUnitaryTransitions");
}

TEST(EndoTransport, FlatAndSingleChart) {
  std::mt19937_64 rng(76);
  CoverBundle flat(circle_cover(), flat_circle_transitions());
  for (int k = 0; k < 5; ++k) {
    Family a = random_endo(flat, rng), c = random_endo(flat, rng);
    EXPECT_EQ(flat.transport(a), a);
    Family prod(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) prod[i] = flat.matrices()->multiply(a[i], c[i]);
    EXPECT_EQ(flat.endo_product(a, c), prod);
  }
  auto moyal = PolynomialAlgebra::moyal(1);
  CoverBundle single(CoverModel::single_chart(moyal), TransitionData{2, {}});
  Family a = random_endo(single, rng), c = random_endo(single, rng);
  EXPECT_EQ(single.endo_product(a, c), Family{single.matrices()->multiply(a[0], c[0])});
}

TEST(EndoTransport, RepairedProductOnThreeCharts) {
  std::mt19937_64 rng(77);
  CoverBundle b = three_chart(2);
  Family one = b.endo_unit();
  EXPECT_EQ(b.transport(one), one);
  // central partition: the raw transport already fixes the unit
  EXPECT_EQ(b.transport_raw(one), one);
  for (int a = 0; a < 3; ++a) EXPECT_EQ(b.repair()[static_cast<std::size_t>(a)], b.matrices()->diagonal(b.model().support(a)));
  for (int k = 0; k < 5; ++k) {
    Family x = random_endo(b, rng), y = random_endo(b, rng), z = random_endo(b, rng);
    ASSERT_TRUE(b.covariant(x, true));
    EXPECT_TRUE(b.covariant(b.transport(x)));
    EXPECT_EQ(b.transport_inverse(b.transport(x)), x);
    EXPECT_EQ(b.endo_product(b.endo_product(x, y), z), b.endo_product(x, b.endo_product(y, z)));
    EXPECT_EQ(b.endo_product(one, x), x);
    EXPECT_EQ(b.endo_product(x, one), x);
    EXPECT_EQ(b.endo_involution(b.endo_product(x, y)), b.endo_product(b.endo_involution(y), b.endo_involution(x)));
  }
}

TEST(SerreSwan, SingleChartIsTrivial) {
  auto moyal = PolynomialAlgebra::moyal(1);
  CoverBundle single(CoverModel::single_chart(moyal), TransitionData{1, {}});
  auto ss = serre_swan(single);
  EXPECT_EQ(ss.projection, ss.big->unit());
}

TEST(SerreSwan, FlatCircleAndThreeCharts) {
  std::mt19937_64 rng(78);
  for (int which = 0; which < 3; ++which) {
    CoverBundle b = which == 0 ? CoverBundle(circle_cover(), flat_circle_transitions()) : three_chart(which == 1 ? 1 : 2);
    auto ss = serre_swan(b);
    const MatrixAlgebra& big = *ss.big;
    EXPECT_EQ(big.multiply(ss.projection, ss.projection), ss.projection);
    EXPECT_EQ(big.involution(ss.projection), ss.projection);
    EXPECT_EQ(classical_part(ss.projection), ss.classical_projection);
    EXPECT_EQ(big.multiply(ss.classical_projection, ss.classical_projection), ss.classical_projection);
    for (int k = 0; k < 5; ++k) {
      Family g = b.glue(random_section(b, rng));
      ASSERT_EQ(ss.pi(ss.eps(g)), g);
      Element t;
      for (int i = 0; i < big.size(); ++i) t += big.embed(i, 0, b.model().functions()->random_element(rng));
      EXPECT_TRUE(b.compatible(ss.pi(t)));
      EXPECT_EQ(ss.eps(ss.pi(t)), big.multiply(ss.projection, t));
    }
    // rank k per point
    Element tr = big.trace(ss.classical_projection);
    EXPECT_EQ(tr, Series(b.rank()) * b.model().functions()->unit());
  }
}

TEST(CenterProbe, Examples) {
  std::mt19937_64 rng(79);
  CoverBundle flat(circle_cover(), flat_circle_transitions());
  auto r = probe_center_closure(flat, 10, rng);
  EXPECT_TRUE(r.closed());
  EXPECT_EQ(r.agrees, 10);
  auto moyal = PolynomialAlgebra::moyal(1);
  CoverBundle single(CoverModel::single_chart(moyal), TransitionData{2, {}});
  EXPECT_TRUE(probe_center_closure(single, 5, rng).closed());
  auto three = probe_center_closure(three_chart(2), 5, rng);
  EXPECT_EQ(three.samples, 5);
  EXPECT_LE(three.agrees, three.scalar);
}

TEST(Cech, TetraSphereHasChernClassOne) {
  CoverModel model = tetra_sphere_cover();
  auto logs = tetra_sphere_logs();
  auto c = cech_relative_class(model, logs);
  ASSERT_TRUE(c.integral) << c.detail;
  std::map<ChartTriple, long> expect{{{0, 1, 2}, 0}, {{0, 1, 3}, 0}, {{0, 2, 3}, 0}, {{1, 2, 3}, 1}};
  EXPECT_EQ(c.n, expect);
  EXPECT_EQ(pair_with_cycle(c, tetrahedron_cycle()), 1);
  // the transitions built from the logs form a unitary cocycle
  CoverBundle line(model, transitions_from_logs(model, logs));
  EXPECT_TRUE(line.unitary());
  // lambda-corrections cancel through order N
  auto plain = cech_relative_class(model, tetra_sphere_logs(false));
  EXPECT_EQ(plain.n, c.n);
  for (const auto& [t, v] : c.triple) EXPECT_TRUE(v.rest.is_zero()) << v;
  for (const auto& [t, v] : c.t)
    if (!v.rest.is_zero()) EXPECT_EQ(valuation(v.rest), 1);
}

TEST(Cech, CoboundariesAndFlatLogsAreTrivial) {
  CoverModel model = tetra_sphere_cover();
  const Algebra& f = *model.functions();
  std::mt19937_64 rng(80);
  for (int k = 0; k < 5; ++k) {
    std::vector<LogElement> s;
    for (int a = 0; a < 4; ++a) {
      Element turns, rest;
      for (int p : model.chart_points()[static_cast<std::size_t>(a)]) {
        turns.add({p}, Series(Rational(uniform_int(rng, -4, 4), 4)));
        rest.add({p}, Series(Gauss(Rational(0), random_rational(rng))) * Series::lambda());
      }
      s.push_back({turns, f.multiply(model.support(a), rest)});
    }
    auto c = cech_relative_class(model, coboundary_logs(model, s));
    ASSERT_TRUE(c.integral) << c.detail;
    for (const auto& [t, n] : c.n) EXPECT_EQ(n, 0);
  }
  // constant integer logs on the circle: no triples, nothing to check
  CoverModel circle = circle_cover();
  std::map<ChartPair, LogElement> flat{{{0, 1}, {Series(2) * circle.overlap(0, 1), Element()}}};
  auto c = cech_relative_class(circle, complete_logs(circle, flat));
  EXPECT_TRUE(c.integral);
  EXPECT_TRUE(c.n.empty());
}

TEST(Cech, Errors) {
  CoverModel model = tetra_sphere_cover();
  auto logs = tetra_sphere_logs();
  auto fractional = logs;
  fractional[{0, 1}].turns += Series(Rational(1, 4)) * model.overlap(0, 1);
  fractional[{1, 0}] = -fractional[{0, 1}];
  auto c = cech_relative_class(model, fractional);
  EXPECT_FALSE(c.integral);
  expect_code([&] { require_integral(c); }, "cover.NotIntegral");
  auto asym = logs;
  asym[{1, 0}] = logs[{0, 1}];
  expect_code([&] { cech_relative_class(model, asym); }, "cover.NotAntisymmetric");
  auto missing = logs;
  missing.erase({2, 3});
  expect_code([&] { cech_relative_class(model, missing); }, "cover.NerveMismatch");
  // a non-constant triple value on the three-chart model with a two-point triple
  CoverModel wide = CoverModel::discrete(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}, square_partition(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}));
  std::map<ChartPair, LogElement> upper;
  for (const auto& [a, b] : wide.overlaps()) upper[{a, b}] = LogElement{};
  upper[{0, 1}].turns = Element::term({0}, Series(1));
  expect_code([&] { cech_relative_class(wide, complete_logs(wide, upper)); }, "cover.NotConstant");
}

TEST(Picard, GroupActionLaws) {
  CoverModel model = tetra_sphere_cover();
  auto line = cech_relative_class(model, tetra_sphere_logs());
  auto zero = zero_class(model);
  auto c = cech_relative_class(model, tetra_sphere_logs(false));
  auto same = picard_action(model, zero, c);
  EXPECT_EQ(same.t, c.t);
  EXPECT_EQ(same.n, c.n);
  auto twice = picard_action(model, line, picard_action(model, line, zero));
  EXPECT_EQ(pair_with_cycle(twice, tetrahedron_cycle()), 2);
  auto sum = picard_action(model, line, line);
  auto lhs = picard_action(model, line, picard_action(model, line, c));
  auto rhs = picard_action(model, sum, c);
  EXPECT_EQ(lhs.t, rhs.t);
  EXPECT_EQ(lhs.n, rhs.n);
  // a fractional class stays fractional under integral shifts and becomes integral again when removed
  auto logs = tetra_sphere_logs();
  logs[{0, 1}].turns += Series(Rational(1, 2)) * model.overlap(0, 1);
  logs[{1, 0}] = -logs[{0, 1}];
  auto frac = cech_relative_class(model, logs);
  EXPECT_FALSE(frac.integral);
  EXPECT_FALSE(picard_action(model, line, frac).integral);
  EXPECT_TRUE(picard_action(model, line, c).integral);
  CoverModel circle = circle_cover();
  expect_code([&] { picard_action(model, zero_class(circle), c); }, "cover.NerveMismatch");
}
