#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "starrep/errors.hpp"
#include "starrep/fixtures.hpp"
#include "starrep/io.hpp"
#include "starrep/models.hpp"
#include "starrep/random.hpp"

using namespace starrep;
using io::Json;

namespace {

void expect_parse_error(const std::function<void()>& f) {
  try {
    f();
    FAIL() << "expected cli.ParseError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "cli.ParseError") << e.what();
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Io, ScalarsRoundTrip) {
  std::mt19937_64 rng(90);
  EXPECT_EQ(io::to_json(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(io::to_json(Rational(4)), "4/1");
  EXPECT_EQ(io::rational_from_json("6/4"), Rational(3, 2));
  EXPECT_EQ(io::rational_from_json(7), Rational(7));
  Json g = io::to_json(Gauss(Rational(1, 2), Rational(-2)));
  EXPECT_EQ(g, (Json{{"re", "1/2"}, {"im", "-2/1"}}));
  for (int k = 0; k < 100; ++k) {
    Series s = random_series(rng, 6);
    ASSERT_EQ(io::series_from_json(io::to_json(s)), s);
  }
  Json lambda = io::to_json(Series::lambda(2));
  EXPECT_EQ(lambda["order"], default_order());
  EXPECT_EQ(lambda["coeffs"].size(), 3u);
  expect_parse_error([] { io::rational_from_json("1/0x"); });
  expect_parse_error([] { io::rational_from_json(Json::array()); });
  expect_parse_error([] { io::series_from_json(Json{{"coeffs", Json::array()}}); });
}

TEST(Io, SeriesLongerThanTheOrderAreTruncated) {
  Json j{{"order", 8}};
  j["coeffs"] = Json::array({"1/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "1/1"});
  EXPECT_EQ(io::series_from_json(j), Series(1));
}

TEST(Io, AlgebraIds) {
  for (std::string id : {"scalar", "wick", "moyal(2)", "classical moyal(1)", "classical wick", "discrete(5)",
                         "M3(scalar)", "M2(discrete(4))", "twisted(M2(scalar))", "twisted(M3(scalar))"})
    EXPECT_EQ(io::algebra_from_id(id)->id(), id);
  EXPECT_EQ(io::algebra_from_id("wick", 7)->id(), "wick");
  auto cap = std::dynamic_pointer_cast<const PolynomialAlgebra>(io::algebra_from_id("moyal(1)", 7));
  ASSERT_TRUE(cap);
  EXPECT_EQ(cap->degree_cap(), 7);
  for (std::string bad : {"", "moyal", "moyal(x)", "M(scalar)", "twisted(M2(wick))", "scalar2", "corner(M2(scalar))"})
    expect_parse_error([&] { io::algebra_from_id(bad); });
}

TEST(Io, ElementsRoundTrip) {
  std::mt19937_64 rng(91);
  for (std::string id : {"moyal(1)", "wick", "discrete(3)", "twisted(M2(scalar))", "M2(discrete(3))"}) {
    auto a = io::algebra_from_id(id);
    for (int k = 0; k < 20; ++k) {
      Element e = a->random_element(rng);
      Json j = io::to_json(*a, e);
      EXPECT_EQ(j["algebra"], id);
      ASSERT_EQ(io::element_from_json(j, a.get()), e);
    }
  }
  auto w = PolynomialAlgebra::wick();
  Json j = io::to_json(*w, w->variable(0));
  auto m = PolynomialAlgebra::moyal(1);
  expect_parse_error([&] { io::element_from_json(j, m.get()); });
  j["terms"][0]["monomial"] = "z";
  expect_parse_error([&] { io::element_from_json(j); });
}

TEST(Io, MatricesFunctionalsModules) {
  std::mt19937_64 rng(92);
  SeriesMatrix g = zero_matrix(2, 3);
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index k = 0; k < 3; ++k) g(i, k) = random_series(rng);
  EXPECT_EQ(io::matrix_from_json(io::to_json(g)), g);
  expect_parse_error([] { io::matrix_from_json(Json::array({Json::array({"1/1"}), Json::array()})); });

  auto t = standard_twisted_matrix(2);
  LinearFunctional omega = trace_state(t, 2);
  LinearFunctional back = io::functional_from_json(io::to_json(omega), t);
  for (const auto& u : matrix_units(2)) EXPECT_EQ(back(u), omega(u));
  EXPECT_EQ(back(t->unit()), omega(t->unit()));

  SeriesMatrix gram(2, 2);
  gram << Series(1), Series(0), Series(0), Series::lambda();
  auto h = make_module(Ring::formal, gram);
  auto h2 = io::module_from_json(io::to_json(*h));
  EXPECT_EQ(h2->gram(), h->gram());
  EXPECT_EQ(h2->ring(), Ring::formal);
  EXPECT_EQ(h2->rank(), 2);
  expect_parse_error([] { io::module_from_json(Json{{"ring", "real"}, {"gram", Json::array()}}); });
}

TEST(Io, CoversTransitionsAndClasses) {
  CoverModel m = three_chart_cover();
  CoverModel back = io::cover_from_json(io::to_json(m));
  EXPECT_EQ(back.chart_points(), m.chart_points());
  EXPECT_EQ(back.partition(), m.partition());
  EXPECT_EQ(back.overlaps(), m.overlaps());
  Json broken = io::to_json(m);
  broken["triples"] = Json::array();
  expect_parse_error([&] { io::cover_from_json(broken); });

  TransitionData t = corrected_transitions(m, 2);
  TransitionData t2 = io::transitions_from_json(io::to_json(m, t), m);
  EXPECT_EQ(t2.rank, 2);
  EXPECT_EQ(t2.phi, t.phi);

  CoverModel tetra = tetra_sphere_cover();
  auto logs = tetra_sphere_logs();
  auto c = cech_relative_class(tetra, logs);
  Json cj = io::to_json(tetra, c);
  EXPECT_EQ(cj["n"]["1,2,3"], 1);
  EXPECT_EQ(cj["n"]["0,1,2"], 0);
  EXPECT_EQ(io::logs_from_json(cj, tetra), logs);
  EXPECT_EQ(io::cycle_from_json(io::to_json(tetrahedron_cycle())), tetrahedron_cycle());
  cj["t"]["1,0"] = cj["t"]["0,1"];
  expect_parse_error([&] { io::logs_from_json(cj, tetra); });
  expect_parse_error([] { io::cycle_from_json(Json{{"1,2", 1}}); });
}

TEST(Fixtures, ShippedFilesMatchTheModels) {
  for (const auto& name : fixture_names()) {
    std::string path = std::string(STARREP_FIXTURE_DIR) + "/" + name + ".json";
    EXPECT_EQ(slurp(path), make_fixture(name).dump(2) + "\n") << name;
  }
  expect_parse_error([] { make_fixture("nowhere"); });
}

TEST(Fixtures, ParseBackToTheModels) {
  ScopedOrder order(kFixtureOrder);
  Json tetra = io::read_file(std::string(STARREP_FIXTURE_DIR) + "/tetra-sphere.json");
  CoverModel m = io::cover_from_json(tetra["cover"]);
  EXPECT_EQ(m.chart_points(), tetra_sphere_cover().chart_points());
  EXPECT_EQ(io::logs_from_json(tetra["logs"], m), tetra_sphere_logs());

  Json wick = io::read_file(std::string(STARREP_FIXTURE_DIR) + "/wick-delta0.json");
  auto w = io::algebra_from_id(wick["algebra"]);
  LinearFunctional omega = io::functional_from_json(wick["functional"], w);
  LinearFunctional vacuum = wick_vacuum(PolynomialAlgebra::wick());
  for (const auto& b : polynomial_spanning(*PolynomialAlgebra::wick(), 4)) EXPECT_EQ(omega(b), vacuum(b));
  expect_parse_error([] { io::read_file("/nonexistent/fixture.json"); });
}
