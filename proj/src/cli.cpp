#include "starrep/cli.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "starrep/calculus.hpp"
#include "starrep/errors.hpp"
#include "starrep/gns.hpp"
#include "starrep/models.hpp"
#include "starrep/morita.hpp"

namespace starrep {

using io::Json;

bool Report::pass() const {
  for (const auto& i : invariants)
    if (!i.pass) return false;
  return true;
}

void Report::check(std::string name, bool ok, std::string detail) {
  invariants.push_back({std::move(name), ok, std::move(detail)});
}

namespace {

constexpr int kAxiomSamples = 100;
constexpr int kModuleSamples = 10;
constexpr int kSectionSamples = 10;
constexpr int kProbeSamples = 20;

const Json& need(const Json& in, const char* name) {
  if (!in.is_object() || !in.contains(name)) io::parse_error(std::string("input has no \"") + name + "\" section");
  return in.at(name);
}

AlgebraPtr algebra_of(const Json& in, const RunManifest& m) {
  const Json& id = need(in, "algebra");
  if (!id.is_string()) io::parse_error("algebra must be an id string");
  return io::algebra_from_id(id.get<std::string>(), m.degree_cap);
}

std::string axiom_detail(const AxiomReport& r, const char* what) {
  if (r.pass) return std::to_string(r.samples) + " " + what;
  return "order " + std::to_string(r.first_order) + ": " + r.counterexample;
}

Json axiom_json(const AxiomReport& r) {
  Json j{{"samples", r.samples}, {"pass", r.pass}};
  if (!r.pass) {
    j["first_order"] = r.first_order;
    j["counterexample"] = r.counterexample;
  }
  return j;
}

std::string series_text(const Series& s) { return to_string(s); }

void check_star(const RunManifest& m, const Json& in, Report& r) {
  AlgebraPtr a = algebra_of(in, m);
  std::mt19937_64 rng(m.seed);
  auto assoc = check_associativity(*a, kAxiomSamples, rng);
  auto herm = check_hermitian(*a, kAxiomSamples, rng);
  auto unit = check_unit(*a, kAxiomSamples, rng);
  r.check("associativity", assoc.pass, axiom_detail(assoc, "random triples"));
  r.check("hermitian", herm.pass, axiom_detail(herm, "random pairs"));
  r.check("unit", unit.pass, axiom_detail(unit, "random elements"));
  r.outputs["associativity"] = axiom_json(assoc);
  r.outputs["hermitian"] = axiom_json(herm);
  r.outputs["unit"] = axiom_json(unit);
  r.summary.push_back("algebra " + a->id() + ", associativity on " + std::to_string(assoc.samples) + " triples");

  const auto* p = dynamic_cast<const PolynomialAlgebra*>(a.get());
  if (!p) return;
  Json comm = Json::array();
  bool ok = true;
  auto expect = [&](const Element& x, const Element& y, const Series& value, const std::string& label) {
    Element c = commutator(*a, x, y);
    Element want = value * a->unit();
    bool good = c == want;
    ok = ok && good;
    comm.push_back(Json{{"pair", label}, {"value", io::to_json(*a, c)}, {"pass", good}});
  };
  Series lambda = p->deformed() ? Series::lambda() : Series(0);
  if (p->kind() == PolynomialAlgebra::Kind::wick) {
    expect(p->variable(1), p->variable(0), lambda, "[zbar, z]");
  } else {
    int n = p->variables() / 2;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::string jj = std::to_string(j + 1), kk = std::to_string(k + 1);
        expect(p->variable(j), p->variable(n + k), j == k ? Series(Gauss::i()) * lambda : Series(0),
               "[x" + jj + ", p" + kk + "]");
        if (j < k) {
          expect(p->variable(j), p->variable(k), Series(0), "[x" + jj + ", x" + kk + "]");
          expect(p->variable(n + j), p->variable(n + k), Series(0), "[p" + jj + ", p" + kk + "]");
        }
      }
  }
  r.check("canonical commutators", ok);
  r.outputs["commutators"] = comm;
}

struct FunctionalInput {
  AlgebraPtr algebra;
  LinearFunctional omega;
  std::vector<Element> spanning;
  bool compressed = false;
};

FunctionalInput functional_input(const RunManifest& m, const Json& in) {
  FunctionalInput f;
  f.algebra = algebra_of(in, m);
  f.omega = io::functional_from_json(need(in, "functional"), f.algebra);
  f.spanning = io::elements_from_json(need(in, "spanning"), f.algebra.get());
  if (f.spanning.empty()) io::parse_error("spanning list is empty");
  f.compressed = in.value("compressed", false);
  return f;
}

// products that stay inside the span are compared exactly on compressed carriers
std::function<bool(const Element&, const Element&, Eigen::Index)> inside_span(const FunctionalInput& f) {
  if (!f.compressed) return {};
  auto monomials = std::make_shared<std::set<Monomial>>();
  for (const auto& s : f.spanning)
    for (const auto& [mono, c] : s.terms()) monomials->insert(mono);
  auto alg = f.algebra;
  auto span = f.spanning;
  return [monomials, alg, span](const Element& a, const Element& b, Eigen::Index k) {
    auto inside = [&](const Element& e) {
      for (const auto& [mono, c] : e.terms())
        if (!monomials->count(mono)) return false;
      return true;
    };
    Element bs = alg->multiply(b, span[static_cast<std::size_t>(k)]);
    return inside(bs) && inside(alg->multiply(a, bs));
  };
}

std::vector<Element> with_unit(const Algebra& a, std::vector<Element> list) {
  list.insert(list.begin(), a.unit());
  return list;
}

int unit_index(const FunctionalInput& f) {
  for (std::size_t i = 0; i < f.spanning.size(); ++i)
    if (f.spanning[i] == f.algebra->unit()) return static_cast<int>(i);
  return -1;
}

void gns(const RunManifest& m, const Json& in, Report& r) {
  FunctionalInput f = functional_input(m, in);
  auto cert = is_positive_functional(f.omega, f.spanning);
  r.check("positive on the span", cert.positive(), to_string(cert.kind));
  GNSData data = gns_representation(f.omega, f.spanning, f.compressed);
  auto v = verify_gns(data);
  r.check("omega(A) = <psi_1, pi(A) psi_1>", v.reproduces, v.detail);
  r.check("cyclic vector", v.cyclic);
  r.check("Gel'fand ideal is a left ideal", v.left_ideal);
  r.check("action well defined on the quotient", v.well_defined);
  auto rep = check_representation(data.pi, with_unit(*f.algebra, f.algebra->generators()), inside_span(f));
  r.check("*-representation", rep.pass(), rep.detail);

  const SeriesMatrix& g = data.carrier->gram();
  Json actions = Json::array();
  for (const auto& gen : f.algebra->generators())
    actions.push_back(Json{{"element", io::to_json(*f.algebra, gen)}, {"matrix", io::to_json(data.pi.act(gen))}});
  r.outputs["spanning"] = io::to_json(*f.algebra, f.spanning);
  r.outputs["gram"] = io::to_json(g);
  r.outputs["ideal"] = io::to_json(data.ideal);
  r.outputs["rank"] = data.carrier->rank();
  r.outputs["cyclic"] = data.cyclic;
  r.outputs["compressed"] = data.compressed;
  r.outputs["actions"] = actions;
  std::string diag;
  for (Eigen::Index i = 0; i < g.rows(); ++i) diag += (i ? ", " : "") + series_text(g(i, i));
  r.summary.push_back("functional on " + f.algebra->id() + ", carrier rank " + std::to_string(data.carrier->rank()));
  r.summary.push_back("Gram diagonal: " + diag);

  const auto* w = dynamic_cast<const PolynomialAlgebra*>(f.algebra.get());
  if (!w || w->kind() != PolynomialAlgebra::Kind::wick || !w->deformed()) return;
  // Bargmann-Fock ladder on the vectors psi_{z^r}
  auto index = [&](int power) -> Eigen::Index {
    for (std::size_t i = 0; i < f.spanning.size(); ++i)
      if (f.spanning[i] == w->monomial({power, 0})) return static_cast<Eigen::Index>(i);
    return -1;
  };
  const PreHilbertModule& h = *data.carrier;
  SeriesMatrix down = data.pi.act(w->variable(1)), up = data.pi.act(w->variable(0));
  bool ladder = true;
  Json norms = Json::array();
  Series fact(1);
  std::string listed;
  for (int k = 0; index(k) >= 0; ++k) {
    if (k > 0) fact = fact * Series(k);
    SeriesVector psi = h.basis_vector(index(k));
    SeriesVector lowered = k == 0 ? SeriesVector(zero_matrix(h.generators(), 1))
                                  : SeriesVector(scale(Series(k) * Series::lambda(), h.basis_vector(index(k - 1))));
    ladder = ladder && h.equal(mul(down, psi), lowered);
    if (index(k + 1) >= 0) ladder = ladder && h.equal(mul(up, psi), h.basis_vector(index(k + 1)));
    Series norm = h.inner(psi, psi);
    ladder = ladder && norm == fact * Series::lambda(k);
    norms.push_back(io::to_json(norm));
    listed += (k ? ", " : "") + series_text(norm);
  }
  r.summary.push_back("<psi_{z^r}, psi_{z^r}>: " + listed);
  r.check("ladder: pi(zbar) psi_{z^r} = lambda r psi_{z^(r-1)}, <psi_{z^r}, psi_{z^r}> = lambda^r r!", ladder);
  r.outputs["vacuum_norms"] = norms;
}

void rieffel(const RunManifest& m, const Json& in, Report& r) {
  FunctionalInput f = functional_input(m, in);
  int one = unit_index(f);
  if (one < 0) io::parse_error("the spanning list must contain the unit");
  GNSData data = gns_representation(f.omega, f.spanning, f.compressed);
  auto e = functional_bimodule(f.omega, f.spanning);
  auto bim = check_bimodule(e);
  r.check("inner-product bimodule", bim.pass(), bim.detail);
  auto induced = rieffel_induce(e, scalar_representation());
  Operator u = solve_cyclic_intertwiner(data.pi, data.carrier->basis_vector(data.cyclic), induced.rep,
                                        induced.rep.carrier->basis_vector(one));
  auto ir = verify_intertwiner(u, data.pi, induced.rep);
  r.check("GNS intertwines with the induced representation", ir.pass, ir.detail);
  r.check("intertwiner is unitary", ir.isometry == IsometryClass::unitary, to_string(ir.isometry));
  r.outputs["induced_gram"] = io::to_json(induced.gram);
  r.outputs["intertwiner"] = io::to_json(u.matrix);
  r.summary.push_back("induction through the algebra itself reproduces the GNS representation of " +
                      f.algebra->id() + " (" + to_string(ir.isometry) + ")");

  if (!in.contains("projection")) return;
  Element p0 = io::element_from_json(in.at("projection"), f.algebra.get());
  Element p = deform_projection(*f.algebra, p0);
  std::vector<Element> span;
  for (const auto& s : f.spanning)
    if (s != f.algebra->unit()) span.push_back(s);
  auto pi = gns_representation(f.omega, span).pi;
  auto corner = projection_bimodule(f.algebra, p, span);
  auto once = rieffel_induce(corner, pi);
  auto twice = rieffel_induce(conjugate_bimodule(corner), once.rep);
  Operator back = double_induction_map(corner, twice, pi);
  auto dr = verify_intertwiner(back, twice.rep, pi);
  r.check("double induction returns the representation", dr.pass && dr.isometry == IsometryClass::unitary,
          dr.detail.empty() ? to_string(dr.isometry) : dr.detail);
  r.outputs["corner_rank"] = once.rep.carrier->rank();
  r.outputs["double_induction_map"] = io::to_json(back.matrix);
  r.summary.push_back("corner induction has rank " + std::to_string(once.rep.carrier->rank()) +
                      "; inducing back is " + to_string(dr.isometry));
}

void deform_projection_cmd(const RunManifest& m, const Json& in, Report& r) {
  AlgebraPtr a = algebra_of(in, m);
  Element p0 = io::element_from_json(need(in, "projection"), a.get());
  Element p = deform_projection(*a, p0);
  r.check("P * P = P", a->multiply(p, p) == p);
  r.check("P* = P", a->involution(p) == p);
  r.check("classical limit is P0", classical_part(p) == p0);
  r.outputs["projection"] = io::to_json(*a, p);
  r.summary.push_back("deformed projection in " + a->id() + " with " + std::to_string(p.size()) + " terms");
}

void sqrt_cmd(const RunManifest& m, const Json& in, Report& r) {
  AlgebraPtr a = algebra_of(in, m);
  const Json& s = need(in, "sqrt");
  Element target = io::element_from_json(need(s, "target"), a.get());
  Element b0 = io::element_from_json(need(s, "classical_root"), a.get());
  Element b = star_square_root(*a, target, b0);
  r.check("B* * B = A", a->multiply(a->involution(b), b) == target);
  r.check("classical part is B0", classical_part(b) == b0);
  r.outputs["root"] = io::to_json(*a, b);
  r.summary.push_back("square root in " + a->id());
}

void deform_module_cmd(const RunManifest& m, const Json& in, Report& r) {
  AlgebraPtr a = algebra_of(in, m);
  Element p0 = io::element_from_json(need(in, "projection"), a.get());
  DeformedModule e = deform_module(a, p0);
  const Element& p = e.projection();
  r.check("projection is idempotent and Hermitian", a->multiply(p, p) == p && a->involution(p) == p);
  std::mt19937_64 rng(m.seed);
  bool transport = true, action = true, inner = true, endo = true, bimodule = true;
  for (int s = 0; s < kModuleSamples; ++s) {
    Element x = e.classical_vector(classical_part(a->random_element(rng)));
    Element y = e.classical_vector(classical_part(a->random_element(rng)));
    Element f = a->random_element(rng), g = a->random_element(rng);
    Element b = e.classical_endomorphism(classical_part(a->random_element(rng)));
    Element c = e.classical_endomorphism(classical_part(a->random_element(rng)));
    Element d = e.classical_endomorphism(classical_part(a->random_element(rng)));
    transport = transport && e.pullback(e.transport(x)) == x;
    action = action && e.right_action(e.right_action(x, f), g) == e.right_action(x, a->multiply(f, g)) &&
             e.right_action(x, a->unit()) == x;
    inner = inner && e.inner(x, e.right_action(y, f)) == a->multiply(e.inner(x, y), f) &&
            a->involution(e.inner(x, y)) == e.inner(y, x);
    endo = endo && e.endo_product(e.endo_product(b, c), d) == e.endo_product(b, e.endo_product(c, d)) &&
           e.endo_product(e.endo_unit(), b) == b;
    bimodule = bimodule && e.left_action(b, e.right_action(x, f)) == e.right_action(e.left_action(b, x), f) &&
               e.left_action(e.endo_product(b, c), x) == e.left_action(b, e.left_action(c, x));
  }
  std::string n = std::to_string(kModuleSamples) + " samples";
  r.check("pullback inverts transport", transport, n);
  r.check("right action is associative and unital", action, n);
  r.check("inner product is Hermitian and right linear", inner, n);
  r.check("endomorphism product is associative and unital", endo, n);
  r.check("left and right actions commute", bimodule, n);
  auto full = is_strongly_full(a, p0);
  Json fj{{"verdict", to_string(full.kind)}, {"detail", full.detail}};
  if (full.kind == FullnessVerdict::Kind::full) {
    Element tau = deform_fullness_witness(a, full.tau, p);
    auto tr = trace_algebra(a);
    r.check("deformed fullness witness", tr->multiply(tr->involution(tau), tau) == matrix_trace(a, p));
    fj["tau"] = io::to_json(*tr, tau);
  }
  r.outputs["projection"] = io::to_json(*a, p);
  r.outputs["fullness"] = fj;
  r.summary.push_back("deformed module P A in " + a->id() + ", strong fullness: " + to_string(full.kind));
}

CoverBundle bundle_input(const Json& in) {
  CoverModel model = io::cover_from_json(need(in, "cover"));
  return {model, io::transitions_from_json(need(in, "transitions"), model)};
}

Family random_section(const CoverBundle& b, std::mt19937_64& rng) {
  const Algebra& f = *b.model().functions();
  Family local(static_cast<std::size_t>(b.model().charts()));
  for (int a = 0; a < b.model().charts(); ++a)
    for (int i = 0; i < b.rank(); ++i)
      local[static_cast<std::size_t>(a)] +=
          b.matrices()->embed(i, 0, f.multiply(b.model().support(a), f.random_element(rng)));
  return b.classical_glue(local);
}

void serre_swan_cmd(const RunManifest& m, const Json& in, Report& r) {
  CoverBundle b = bundle_input(in);
  auto ss = serre_swan(b);
  const MatrixAlgebra& big = *ss.big;
  const Algebra& f = *b.model().functions();
  r.check("P * P = P", big.multiply(ss.projection, ss.projection) == ss.projection);
  r.check("P* = P", big.involution(ss.projection) == ss.projection);
  r.check("classical limit is the cover projection", classical_part(ss.projection) == ss.classical_projection);
  r.check("classical projection has rank k at every point",
          big.trace(ss.classical_projection) == Series(b.rank()) * f.unit());
  std::mt19937_64 rng(m.seed);
  bool left = true, right = true;
  for (int s = 0; s < kSectionSamples; ++s) {
    Family g = b.glue(random_section(b, rng));
    left = left && ss.pi(ss.eps(g)) == g;
    Element t;
    for (int i = 0; i < big.size(); ++i) t += big.embed(i, 0, f.random_element(rng));
    Family pt = ss.pi(t);
    right = right && b.compatible(pt) && ss.eps(pt) == big.multiply(ss.projection, t);
  }
  r.check("pi o eps = id", left, std::to_string(kSectionSamples) + " glued sections");
  r.check("eps o pi = P", right, std::to_string(kSectionSamples) + " vectors");
  r.outputs["projection"] = io::to_json(big, ss.projection);
  r.outputs["classical_projection"] = io::to_json(big, ss.classical_projection);
  r.summary.push_back(std::to_string(b.model().charts()) + " charts, rank " + std::to_string(b.rank()) +
                      ": projection in " + big.id());
}

void chern(const RunManifest& m, const Json& in, Report& r) {
  (void)m;
  CoverModel model = io::cover_from_json(need(in, "cover"));
  auto logs = io::logs_from_json(need(in, "logs"), model);
  auto c = cech_relative_class(model, logs);
  r.check("triple products are integral", c.integral, c.detail);
  bool cancel = true;
  for (const auto& [t, v] : c.triple) cancel = cancel && v.rest.is_zero();
  r.check("lambda-corrections cancel in the triple products", cancel);
  r.outputs["class"] = io::to_json(model, c);
  std::string ns;
  for (const auto& [t, n] : c.n) ns += (ns.empty() ? "" : ", ") + io::triple_key(t) + ": " + std::to_string(n);
  r.summary.push_back("n = {" + ns + "}");
  if (in.contains("cycle") && c.integral) {
    auto cycle = io::cycle_from_json(in.at("cycle"));
    long pairing = pair_with_cycle(c, cycle);
    r.outputs["pairing"] = pairing;
    r.summary.push_back("pairing with the cycle: " + std::to_string(pairing));
  }
}

void classical_limit_cmd(const RunManifest& m, const Json& in, Report& r) {
  FunctionalInput f = functional_input(m, in);
  GNSData data = gns_representation(f.omega, f.spanning, f.compressed);
  auto lim = classical_limit_space(data.carrier);
  Representation c = classical_limit_representation(data.pi, lim);
  r.check("c(id) = id", equal(classical_limit_operator(identity_operator(data.carrier), lim, lim),
                              identity_operator(lim.space)));
  bool compose_ok = true, adjoint_ok = true;
  auto ops = with_unit(*f.algebra, f.algebra->generators());
  for (const auto& x : ops) {
    Operator px = data.pi(x), cx = classical_limit_operator(px, lim, lim);
    adjoint_ok = adjoint_ok && equal(classical_limit_operator(adjoint(px), lim, lim), adjoint(cx));
    for (const auto& y : ops) {
      Operator py = data.pi(y);
      compose_ok = compose_ok && equal(classical_limit_operator(compose(px, py), lim, lim),
                                       compose(cx, classical_limit_operator(py, lim, lim)));
    }
  }
  r.check("c(A B) = c(A) c(B) on the generators", compose_ok);
  r.check("c(A*) = c(A)*", adjoint_ok);
  auto rep = check_representation(c, ops);
  r.check("c(pi) is a *-representation", rep.pass(), rep.detail);
  auto extended = make_module(Ring::formal, lim.space->gram());
  r.check("c(h[[lambda]]) = h", classical_limit_space(extended).space->gram() == lim.space->gram());
  r.outputs["limit"] = io::to_json(*lim.space);
  r.outputs["quotient_map"] = io::to_json(lim.quotient_map);
  r.summary.push_back("classical limit of the GNS carrier of " + f.algebra->id() + ": dimension " +
                      std::to_string(lim.space->generators()));
}

void probe_center(const RunManifest& m, const Json& in, Report& r) {
  CoverBundle b = bundle_input(in);
  std::mt19937_64 rng(m.seed);
  bool flat = true;
  for (const auto& [pair, phi] : b.transitions().phi) flat = flat && classical_part(phi) == phi;
  Family one = b.endo_unit();
  r.check("transport fixes the unit", b.transport(one) == one);
  auto probe = probe_center_closure(b, kProbeSamples, rng);
  if (flat) r.check("central products agree for flat transitions", probe.agrees == probe.samples, probe.detail);
  r.outputs["flat"] = flat;
  r.outputs["samples"] = probe.samples;
  r.outputs["scalar"] = probe.scalar;
  r.outputs["agrees"] = probe.agrees;
  r.outputs["detail"] = probe.detail;
  r.summary.push_back(std::to_string(probe.scalar) + " of " + std::to_string(probe.samples) +
                      " central products stayed scalar, " + std::to_string(probe.agrees) + " agreed" +
                      (flat ? "" : " (recorded, not asserted)"));
}

using Command = void (*)(const RunManifest&, const Json&, Report&);

const std::map<std::string, std::pair<Command, std::string>>& commands() {
  static const std::map<std::string, std::pair<Command, std::string>> table{
      {"check-star", {check_star, "moyal"}},
      {"gns", {gns, "wick-delta0"}},
      {"rieffel", {rieffel, "twisted-m2"}},
      {"deform-projection", {deform_projection_cmd, "twisted-m2"}},
      {"sqrt", {sqrt_cmd, "twisted-m2"}},
      {"deform-module", {deform_module_cmd, "twisted-m2"}},
      {"serre-swan", {serre_swan_cmd, "three-chart"}},
      {"chern", {chern, "tetra-sphere"}},
      {"classical-limit", {classical_limit_cmd, "wick-delta0"}},
      {"probe-center", {probe_center, "flat-2chart"}},
  };
  return table;
}

const std::pair<Command, std::string>& lookup(const std::string& name) {
  auto it = commands().find(name);
  if (it == commands().end()) throw Error("cli.UnknownCommand", "no command \"" + name + "\"");
  return it->second;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"check-star", "gns",    "rieffel",         "deform-projection",
                                              "sqrt",       "deform-module", "serre-swan", "chern",
                                              "classical-limit", "probe-center"};
  return names;
}

std::string default_fixture(const std::string& command) { return lookup(command).second; }

Report execute(const RunManifest& manifest, const Json& input) {
  Command cmd = lookup(manifest.command).first;
  if (manifest.order < 0) io::parse_error("order must be nonnegative");
  if (manifest.degree_cap < 1) io::parse_error("degree cap must be positive");
  ScopedOrder order(manifest.order);
  Report r;
  cmd(manifest, input, r);
  return r;
}

std::string render(const RunManifest& manifest, const Report& report) {
  int passed = 0;
  for (const auto& i : report.invariants) passed += i.pass ? 1 : 0;
  std::ostringstream out;
  out << "# starrep " << io::kVersion << " " << manifest.command << "\n";
  out << "# " << (report.pass() ? "PASS" : "FAIL") << ": " << passed << " of " << report.invariants.size()
      << " invariants hold\n";
  for (const auto& line : report.summary) out << "# " << line << "\n";
  for (const auto& i : report.invariants)
    if (!i.pass) out << "# failed: " << i.name << (i.detail.empty() ? "" : " (" + i.detail + ")") << "\n";
  Json invariants = Json::array();
  for (const auto& i : report.invariants)
    invariants.push_back(Json{{"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
  Json doc{{"version", io::kVersion},
           {"manifest",
            {{"command", manifest.command},
             {"input", manifest.input},
             {"order", manifest.order},
             {"degree_cap", manifest.degree_cap},
             {"seed", manifest.seed},
             {"output", manifest.output}}},
           {"pass", report.pass()},
           {"invariants", invariants},
           {"outputs", report.outputs}};
  out << doc.dump(2) << "\n";
  return out.str();
}

}  // namespace starrep
