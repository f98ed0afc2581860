#include "starrep/fixtures.hpp"

#include "starrep/models.hpp"

namespace starrep {

namespace {

io::Json logs_json(const CoverModel& m, const std::map<ChartPair, LogElement>& logs) {
  io::Json t = io::Json::object();
  for (const auto& [p, l] : logs)
    if (p.first < p.second) t[io::pair_key(p)] = io::to_json(*m.functions(), l);
  return io::Json{{"t", t}};
}

io::Json functional_fixture(const std::string& name, const std::string& summary, const LinearFunctional& omega,
                            const std::vector<Element>& spanning, bool compressed) {
  return io::Json{{"name", name},
                  {"summary", summary},
                  {"algebra", omega.algebra()->id()},
                  {"functional", io::to_json(omega)},
                  {"spanning", io::to_json(*omega.algebra(), spanning)},
                  {"compressed", compressed}};
}

io::Json cover_fixture(const std::string& name, const std::string& summary, const CoverModel& m) {
  return io::Json{{"name", name}, {"summary", summary}, {"cover", io::to_json(m)}};
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"moyal", "wick", "wick-delta0", "twisted-m2", "point-eval", "flat-2chart", "three-chart", "tetra-sphere"};
}

io::Json make_fixture(const std::string& name) {
  ScopedOrder order(kFixtureOrder);
  if (name == "moyal") return io::Json{{"name", name}, {"summary", "Weyl-Moyal product on R^2"}, {"algebra", "moyal(1)"}};
  if (name == "wick") return io::Json{{"name", name}, {"summary", "Wick product on C"}, {"algebra", "wick"}};
  if (name == "wick-delta0") {
    auto w = PolynomialAlgebra::wick();
    return functional_fixture(name, "evaluation at the origin on the Wick algebra, spanned by monomials of degree <= 3",
                              wick_vacuum(w), polynomial_spanning(*w, 3), true);
  }
  if (name == "twisted-m2") {
    auto t = standard_twisted_matrix(2);
    std::vector<Element> span{t->unit()};
    for (const auto& u : matrix_units(2)) span.push_back(u);
    io::Json j = functional_fixture(name, "normalized trace on twisted 2x2 matrices, with a rank-one projection",
                                    trace_state(t, 2), span, false);
    auto units = matrix_units(2);
    Element b0 = classical_part(t->unit()) + units[1];
    Element b = b0 + Series(Gauss::i()) * Series::lambda() * units[2];
    j["projection"] = io::to_json(*t, units[0]);
    j["sqrt"] = io::Json{{"target", io::to_json(*t, t->multiply(t->involution(b), b))},
                         {"classical_root", io::to_json(*t, b0)}};
    return j;
  }
  if (name == "point-eval") {
    auto d = DiscreteAlgebra::make(3);
    std::vector<Element> span{d->unit(), d->indicator(0), d->indicator(1), d->indicator(2)};
    return functional_fixture(name, "evaluation at point 1 of three points", point_evaluation(d, 1), span, false);
  }
  if (name == "flat-2chart") {
    CoverModel m = circle_cover();
    io::Json j = cover_fixture(name, "two arcs covering a 4-point circle with constant line transitions", m);
    j["transitions"] = io::to_json(m, flat_circle_transitions());
    return j;
  }
  if (name == "three-chart") {
    CoverModel m = three_chart_cover();
    io::Json j = cover_fixture(name, "three charts on 7 points, rank-2 transitions with lambda-corrections", m);
    j["transitions"] = io::to_json(m, corrected_transitions(m, 2));
    return j;
  }
  if (name == "tetra-sphere") {
    CoverModel m = tetra_sphere_cover();
    io::Json j = cover_fixture(name, "star cover of the tetrahedron boundary with degree-one line logs", m);
    j["logs"] = logs_json(m, tetra_sphere_logs());
    j["cycle"] = io::to_json(tetrahedron_cycle());
    return j;
  }
  io::parse_error("unknown fixture \"" + name + "\"");
}

}  // namespace starrep
