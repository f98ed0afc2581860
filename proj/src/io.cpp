#include "starrep/io.hpp"

#include <fstream>
#include <sstream>

#include "starrep/errors.hpp"
#include "starrep/models.hpp"

namespace starrep::io {

void parse_error(const std::string& detail) { throw Error("cli.ParseError", detail); }

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_error(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int to_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(to_int(x, what));
  return out;
}

// cursor over an algebra id
struct IdParser {
  const std::string& s;
  std::size_t pos = 0;
  int cap;

  bool eat(const std::string& word) {
    if (s.compare(pos, word.size(), word) != 0) return false;
    pos += word.size();
    return true;
  }
  void expect(char c) {
    if (pos >= s.size() || s[pos] != c) parse_error("bad algebra id \"" + s + "\" at " + std::to_string(pos));
    ++pos;
  }
  int number() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) parse_error("bad algebra id \"" + s + "\": expected a number");
    return std::stoi(s.substr(start, pos - start));
  }

  AlgebraPtr algebra() {
    if (eat("classical ")) return algebra()->classical();
    if (eat("scalar")) return ScalarAlgebra::instance();
    if (eat("wick")) return PolynomialAlgebra::wick(cap);
    if (eat("moyal(")) {
      int n = number();
      expect(')');
      return PolynomialAlgebra::moyal(n, cap);
    }
    if (eat("discrete(")) {
      int n = number();
      expect(')');
      return DiscreteAlgebra::make(n);
    }
    if (eat("twisted(M")) {
      int k = number();
      if (!eat("(scalar))")) parse_error("only twisted(Mk(scalar)) with the standard twist can be rebuilt");
      return standard_twisted_matrix(k);
    }
    if (eat("M")) {
      int k = number();
      expect('(');
      AlgebraPtr base = algebra();
      expect(')');
      return MatrixAlgebra::make(base, k);
    }
    parse_error("unknown algebra id \"" + s + "\"");
  }
};

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(part);
  return out;
}

int key_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) parse_error("bad chart index \"" + s + "\"");
    return v;
  } catch (const std::logic_error&) {
    parse_error("bad chart index \"" + s + "\"");
  }
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) parse_error("rational must be a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    parse_error("bad rational \"" + j.get<std::string>() + "\"");
  }
}

Json to_json(const Gauss& g) { return Json{{"re", to_json(g.re)}, {"im", to_json(g.im)}}; }

Gauss gauss_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return Gauss(rational_from_json(j));
  return Gauss(rational_from_json(field(j, "re")), rational_from_json(field(j, "im")));
}

Json to_json(const Series& s) {
  Json coeffs = Json::array();
  int last = -1;
  for (int r = 0; r <= s.order(); ++r)
    if (!s[r].is_zero()) last = r;
  for (int r = 0; r <= last; ++r) coeffs.push_back(to_json(s[r]));
  return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

Series series_from_json(const Json& j) {
  const Json& c = field(j, "coeffs");
  if (!c.is_array()) parse_error("series coeffs must be an array");
  to_int(field(j, "order"), "series order");
  std::vector<Gauss> g;
  for (const auto& x : c) g.push_back(gauss_from_json(x));
  return Series::from_coefficients(std::move(g));
}

AlgebraPtr algebra_from_id(const std::string& id, int degree_cap) {
  IdParser p{id, 0, degree_cap};
  AlgebraPtr a = p.algebra();
  if (p.pos != id.size()) parse_error("trailing text in algebra id \"" + id + "\"");
  return a;
}

Json to_json(const Algebra& a, const Element& e) {
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms()) terms.push_back(Json{{"monomial", m}, {"coeff", to_json(c)}});
  return Json{{"algebra", a.id()}, {"terms", terms}};
}

Element element_from_json(const Json& j, const Algebra* a) {
  const Json& tag = field(j, "algebra");
  if (!tag.is_string()) parse_error("algebra tag must be a string");
  if (a && tag.get<std::string>() != a->id())
    parse_error("element of " + tag.get<std::string>() + " where " + a->id() + " was expected");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) parse_error("terms must be an array");
  Element e;
  for (const auto& t : terms) e.add(int_list(field(t, "monomial"), "monomial"), series_from_json(field(t, "coeff")));
  return e;
}

Json to_json(const Algebra& a, const std::vector<Element>& list) {
  Json out = Json::array();
  for (const auto& e : list) out.push_back(to_json(a, e));
  return out;
}

std::vector<Element> elements_from_json(const Json& j, const Algebra* a) {
  if (!j.is_array()) parse_error("expected an array of elements");
  std::vector<Element> out;
  for (const auto& x : j) out.push_back(element_from_json(x, a));
  return out;
}

Json to_json(const SeriesMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

SeriesMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) parse_error("matrix must be an array of rows");
  if (j.empty()) return SeriesMatrix();
  const auto cols = j[0].is_array() ? j[0].size() : 0;
  SeriesMatrix m = zero_matrix(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) parse_error("matrix rows have different lengths");
    for (std::size_t k = 0; k < cols; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = series_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const LinearFunctional& omega) {
  Json basis = Json::array(), values = Json::array();
  for (const auto& [m, v] : omega.values()) {
    basis.push_back(to_json(*omega.algebra(), Element::term(m, Series(1))));
    values.push_back(to_json(v));
  }
  return Json{{"algebra", omega.algebra()->id()},
              {"basis", basis},
              {"values", values},
              {"zero_elsewhere", omega.zero_elsewhere()}};
}

LinearFunctional functional_from_json(const Json& j, const AlgebraPtr& a) {
  auto basis = elements_from_json(field(j, "basis"), a.get());
  const Json& v = field(j, "values");
  if (!v.is_array() || v.size() != basis.size()) parse_error("functional needs one value per basis element");
  std::vector<Series> values;
  for (const auto& x : v) values.push_back(series_from_json(x));
  bool zero_elsewhere = j.value("zero_elsewhere", false);
  return LinearFunctional::from_basis(a, basis, values, zero_elsewhere);
}

Json to_json(const PreHilbertModule& m) {
  return Json{{"ring", m.ring() == Ring::complex ? "complex" : "formal"}, {"gram", to_json(m.gram())}, {"relations", to_json(m.relations())}};
}

ModulePtr module_from_json(const Json& j) {
  const Json& r = field(j, "ring");
  Ring ring;
  if (r == "complex")
    ring = Ring::complex;
  else if (r == "formal")
    ring = Ring::formal;
  else
    parse_error("ring must be \"complex\" or \"formal\"");
  SeriesMatrix gram = matrix_from_json(field(j, "gram"));
  if (gram.rows() != gram.cols()) parse_error("gram matrix must be square");
  SeriesMatrix rel = j.contains("relations") ? matrix_from_json(j.at("relations")) : SeriesMatrix();
  if (rel.size() == 0) rel = SeriesMatrix();
  else if (rel.rows() != gram.rows()) parse_error("relations must have one row per generator");
  return make_module(ring, gram, rel);
}

Json to_json(const CoverModel& m) {
  Json overlaps = Json::array(), triples = Json::array();
  for (const auto& [a, b] : m.overlaps()) overlaps.push_back({a, b});
  for (const auto& t : m.triples()) triples.push_back({t[0], t[1], t[2]});
  const auto* d = dynamic_cast<const DiscreteAlgebra*>(m.functions().get());
  if (!d) parse_error("only discrete cover models are serialized");
  return Json{{"points", d->points()},
              {"charts", m.chart_points()},
              {"overlaps", overlaps},
              {"triples", triples},
              {"partition", to_json(*m.functions(), m.partition())}};
}

CoverModel cover_from_json(const Json& j) {
  int points = to_int(field(j, "points"), "points");
  if (points <= 0) parse_error("points must be positive");
  const Json& c = field(j, "charts");
  if (!c.is_array()) parse_error("charts must be an array");
  std::vector<std::vector<int>> charts;
  for (const auto& x : c) charts.push_back(int_list(x, "chart"));
  auto d = DiscreteAlgebra::make(points);
  auto partition = elements_from_json(field(j, "partition"), d.get());
  if (partition.size() != charts.size()) parse_error("one partition function per chart");
  CoverModel m = CoverModel::discrete(points, charts, partition);
  // listed nerves are redundant; they must agree with the charts
  if (j.contains("overlaps")) {
    std::vector<ChartPair> listed;
    for (const auto& x : j.at("overlaps")) {
      auto v = int_list(x, "overlap");
      if (v.size() != 2) parse_error("overlap must list two charts");
      listed.emplace_back(v[0], v[1]);
    }
    if (listed != m.overlaps()) parse_error("listed overlaps do not match the charts");
  }
  if (j.contains("triples")) {
    std::vector<ChartTriple> listed;
    for (const auto& x : j.at("triples")) {
      auto v = int_list(x, "triple");
      if (v.size() != 3) parse_error("triple must list three charts");
      listed.push_back({v[0], v[1], v[2]});
    }
    if (listed != m.triples()) parse_error("listed triples do not match the charts");
  }
  return m;
}

Json to_json(const CoverModel& m, const TransitionData& t) {
  auto mk = MatrixAlgebra::make(m.functions(), t.rank);
  Json phi = Json::array();
  for (const auto& [p, e] : t.phi) phi.push_back(Json{{"pair", {p.first, p.second}}, {"matrix", to_json(*mk, e)}});
  return Json{{"rank", t.rank}, {"phi", phi}};
}

TransitionData transitions_from_json(const Json& j, const CoverModel& m) {
  TransitionData t;
  t.rank = to_int(field(j, "rank"), "rank");
  if (t.rank < 1) parse_error("rank must be positive");
  auto mk = MatrixAlgebra::make(m.functions(), t.rank);
  const Json& phi = field(j, "phi");
  if (!phi.is_array()) parse_error("phi must be an array");
  for (const auto& x : phi) {
    auto p = int_list(field(x, "pair"), "pair");
    if (p.size() != 2 || p[0] < 0 || p[1] < 0 || p[0] >= m.charts() || p[1] >= m.charts())
      parse_error("bad chart pair");
    t.phi[{p[0], p[1]}] = element_from_json(field(x, "matrix"), mk.get());
  }
  return t;
}

std::string pair_key(const ChartPair& p) { return std::to_string(p.first) + "," + std::to_string(p.second); }

std::string triple_key(const ChartTriple& t) {
  return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

Json to_json(const Algebra& a, const LogElement& l) {
  return Json{{"turns", to_json(a, l.turns)}, {"rest", to_json(a, l.rest)}};
}

LogElement log_from_json(const Json& j, const Algebra& a) {
  return {element_from_json(field(j, "turns"), &a), element_from_json(field(j, "rest"), &a)};
}

Json to_json(const CoverModel& m, const CechClassData& c) {
  Json t = Json::object(), n = Json::object(), triple = Json::object();
  for (const auto& [p, l] : c.t)
    if (p.first < p.second) t[pair_key(p)] = to_json(*m.functions(), l);
  for (const auto& [k, l] : c.triple) triple[triple_key(k)] = to_json(*m.functions(), l);
  for (const auto& [k, v] : c.n) n[triple_key(k)] = v;
  return Json{{"t", t}, {"triple", triple}, {"n", n}, {"integral", c.integral}, {"detail", c.detail}};
}

std::map<ChartPair, LogElement> logs_from_json(const Json& j, const CoverModel& m) {
  const Json& t = field(j, "t");
  if (!t.is_object()) parse_error("t must map \"a,b\" to logs");
  std::map<ChartPair, LogElement> upper;
  for (const auto& [key, value] : t.items()) {
    auto parts = split_key(key);
    if (parts.size() != 2) parse_error("bad pair key \"" + key + "\"");
    int a = key_int(parts[0]), b = key_int(parts[1]);
    if (a >= b) parse_error("pair keys are listed with a < b");
    upper[{a, b}] = log_from_json(value, *m.functions());
  }
  return complete_logs(m, upper);
}

Json to_json(const std::map<ChartTriple, int>& cycle) {
  Json out = Json::object();
  for (const auto& [k, v] : cycle) out[triple_key(k)] = v;
  return out;
}

std::map<ChartTriple, int> cycle_from_json(const Json& j) {
  if (!j.is_object()) parse_error("cycle must map \"a,b,c\" to integers");
  std::map<ChartTriple, int> out;
  for (const auto& [key, value] : j.items()) {
    auto parts = split_key(key);
    if (parts.size() != 3) parse_error("bad triple key \"" + key + "\"");
    out[{key_int(parts[0]), key_int(parts[1]), key_int(parts[2])}] = to_int(value, "cycle coefficient");
  }
  return out;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    parse_error(path + ": " + e.what());
  }
}

}  // namespace starrep::io
