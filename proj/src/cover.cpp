#include "starrep/cover.hpp"

#include <set>
#include <sstream>

#include "starrep/errors.hpp"

namespace starrep {

namespace {

std::string pair_name(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string triple_name(const ChartTriple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

LogElement restrict_log(const Algebra& f, const LogElement& t, const Element& e) {
  return {f.multiply(e, t.turns), f.multiply(e, t.rest)};
}

}  // namespace

// CoverModel ------------------------------------------------------------------

CoverModel::CoverModel(AlgebraPtr functions, std::vector<Element> support, std::vector<Element> partition,
                       std::vector<std::vector<int>> chart_points)
    : functions_(std::move(functions)),
      support_(std::move(support)),
      partition_(std::move(partition)),
      chart_points_(std::move(chart_points)) {
  const Algebra& f = *functions_;
  if (partition_.size() != support_.size())
    throw Error("cover.InvalidModel", "one partition function per chart is required");
  Element total, covered;
  for (std::size_t a = 0; a < support_.size(); ++a) {
    if (f.multiply(support_[a], partition_[a]) != partition_[a])
      throw Error("cover.InvalidModel", "partition function " + std::to_string(a) + " leaves its chart");
    total += partition_[a];
  }
  if (total != f.unit()) throw Error("cover.InvalidModel", "partition does not sum to 1: " + to_string(total));
  const int m = charts();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (!overlap(a, b).is_zero()) overlaps_.emplace_back(a, b);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        if (!triple_overlap({a, b, c}).is_zero()) triples_.push_back({a, b, c});
}

CoverModel CoverModel::discrete(int points, std::vector<std::vector<int>> charts, std::vector<Element> partition) {
  auto d = DiscreteAlgebra::make(points);
  std::vector<Element> support;
  std::vector<bool> covered(static_cast<std::size_t>(points), false);
  for (auto& chart : charts) {
    std::sort(chart.begin(), chart.end());
    Element e;
    for (int p : chart) {
      if (p < 0 || p >= points) throw Error("cover.InvalidModel", "point " + std::to_string(p) + " out of range");
      e.add({p}, Series(1));
      covered[static_cast<std::size_t>(p)] = true;
    }
    if (e.is_zero()) throw Error("cover.InvalidModel", "empty chart");
    support.push_back(e);
  }
  for (int p = 0; p < points; ++p)
    if (!covered[static_cast<std::size_t>(p)]) throw Error("cover.InvalidModel", "point " + std::to_string(p) + " is not covered");
  return {d, std::move(support), std::move(partition), std::move(charts)};
}

CoverModel CoverModel::single_chart(AlgebraPtr functions) {
  Element one = functions->unit();
  return {std::move(functions), {one}, {one}, {}};
}

Element CoverModel::overlap(int a, int b) const { return functions_->multiply(support(a), support(b)); }

Element CoverModel::triple_overlap(const ChartTriple& t) const {
  return functions_->multiply(overlap(t[0], t[1]), support(t[2]));
}

std::vector<int> CoverModel::points_of(const Element& e) const {
  std::vector<int> out;
  if (chart_points_.empty()) return out;
  for (const auto& [m, c] : e.terms())
    if (!c.is_zero()) out.push_back(m[0]);
  return out;
}

std::vector<Element> CoverModel::quadratic_partition() const {
  std::vector<Element> chi;
  for (std::size_t a = 0; a < partition_.size(); ++a) {
    const Element& p = partition_[a];
    if (p == functions_->unit() || p.is_zero()) {
      chi.push_back(p);
      continue;
    }
    if (!functions_->is_commutative() || functions_->basis_monomials().empty())
      throw Error("cover.PartitionRepairFailure", "no pointwise square roots for chart " + std::to_string(a));
    Element root;
    for (const auto& [m, c] : p.terms()) {
      try {
        root.add(m, sqrt(c));
      } catch (const Error& e) {
        throw Error("cover.PartitionRepairFailure",
                    "partition value " + to_string(c) + " on chart " + std::to_string(a) + " has no exact root");
      }
    }
    chi.push_back(root);
  }
  return chi;
}

// Families --------------------------------------------------------------------

Family family_add(const Family& a, const Family& b) {
  Family out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Family family_sub(const Family& a, const Family& b) {
  Family out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool family_is_zero(const Family& a) {
  return std::all_of(a.begin(), a.end(), [](const Element& e) { return e.is_zero(); });
}

std::string to_string(const Family& f) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "; " : "") << to_string(f[i]);
  os << "]";
  return os.str();
}

// CoverBundle -----------------------------------------------------------------

CoverBundle::CoverBundle(CoverModel model, TransitionData transitions)
    : model_(std::move(model)),
      transitions_(std::move(transitions)),
      matrices_(MatrixAlgebra::make(model_.functions(), transitions_.rank)) {
  const MatrixAlgebra& mk = *matrices_;
  const int m = model_.charts();
  std::set<ChartPair> expected;
  for (const auto& [a, b] : model_.overlaps()) {
    expected.insert({a, b});
    expected.insert({b, a});
  }
  for (const auto& [key, value] : transitions_.phi) {
    if (!expected.count(key))
      throw Error("cover.CocycleViolation", "transition given on " + pair_name(key.first, key.second) + " where the charts do not meet");
    Element e = mk.diagonal(model_.overlap(key.first, key.second));
    if (mk.multiply(e, value) != value)
      throw Error("cover.CocycleViolation", "transition " + pair_name(key.first, key.second) + " leaves the overlap");
  }
  for (const auto& key : expected)
    if (!transitions_.phi.count(key))
      throw Error("cover.CocycleViolation", "missing transition " + pair_name(key.first, key.second));
  for (const auto& [a, b] : model_.overlaps())
    if (mk.multiply(phi(a, b), phi(b, a)) != mk.diagonal(model_.overlap(a, b)))
      throw Error("cover.CocycleViolation", "phi_ab phi_ba != 1 on " + pair_name(a, b));
  for (const auto& t : model_.triples())
    if (mk.multiply(phi(t[0], t[1]), mk.multiply(phi(t[1], t[2]), phi(t[2], t[0]))) != mk.diagonal(model_.triple_overlap(t)))
      throw Error("cover.CocycleViolation", "phi_ab phi_bc phi_ca != 1 on " + triple_name(t));
  chi_ = model_.quadratic_partition();
  // unit repair: W = sqrt(T~(1)) chartwise
  Family one(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) one[static_cast<std::size_t>(a)] = mk.diagonal(model_.support(a));
  Family raw = transport_raw(one);
  w_inverse_.resize(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    const auto i = static_cast<std::size_t>(a);
    Element x = raw[i] - one[i];
    if (!x.is_zero() && valuation(x) < 1)
      throw Error("cover.PartitionRepairFailure", "T~(1) is not 1 classically on chart " + std::to_string(a));
    w_inverse_[i] = mk.multiply(one[i], binomial_invsqrt(mk, x));
  }
}

Element CoverBundle::phi(int a, int b) const {
  if (a == b) return matrices_->diagonal(model_.support(a));
  auto it = transitions_.phi.find({a, b});
  return it == transitions_.phi.end() ? Element() : it->second;
}

Element CoverBundle::classical_phi(int a, int b) const { return classical_part(phi(a, b)); }

bool CoverBundle::unitary() const {
  for (const auto& [key, value] : transitions_.phi)
    if (matrices_->involution(value) != phi(key.second, key.first)) return false;
  return true;
}

Family CoverBundle::apply_local(const Family& a, const std::function<Element(int, const Element&)>& f) const {
  Family out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f(static_cast<int>(i), a[i]);
  return out;
}

Family CoverBundle::glue(const Family& classical) const {
  const MatrixAlgebra& mk = *matrices_;
  const int m = model_.charts();
  Family out(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Element p = mk.diagonal(model_.partition()[static_cast<std::size_t>(b)]);
      out[static_cast<std::size_t>(a)] += mk.multiply(phi(a, b), mk.multiply(p, classical[static_cast<std::size_t>(b)]));
    }
  return out;
}

Family CoverBundle::classical_glue(const Family& local) const {
  const MatrixAlgebra& mk = *matrices_;
  const int m = model_.charts();
  Family out(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Element p = mk.diagonal(model_.partition()[static_cast<std::size_t>(b)]);
      out[static_cast<std::size_t>(a)] += mk.multiply(classical_phi(a, b), mk.multiply(p, local[static_cast<std::size_t>(b)]));
    }
  return out;
}

bool CoverBundle::compatible(const Family& s, bool classical) const {
  const MatrixAlgebra& mk = *matrices_;
  const int m = model_.charts();
  for (int a = 0; a < m; ++a) {
    const Element& sa = s[static_cast<std::size_t>(a)];
    if (mk.multiply(mk.diagonal(model_.support(a)), sa) != sa) return false;
    for (int b = 0; b < m; ++b) {
      if (a == b || model_.overlap(a, b).is_zero()) continue;
      Element p = classical ? classical_phi(a, b) : phi(a, b);
      if (mk.multiply(p, s[static_cast<std::size_t>(b)]) != mk.multiply(mk.diagonal(model_.overlap(a, b)), sa))
        return false;
    }
  }
  return true;
}

Family CoverBundle::unglue(const Family& glued) const {
  if (!compatible(glued)) throw Error("cover.CocycleViolation", "family is not compatible with the transitions");
  Family x = classical_glue(glued);
  for (int it = 0; it <= default_order() + 1; ++it) {
    Family r = family_sub(glued, glue(x));
    if (family_is_zero(r)) return x;
    x = family_add(x, classical_glue(r));
  }
  throw Error("cover.CocycleViolation", "gluing could not be inverted");
}

Family CoverBundle::right_action(const Family& s, const Element& f) const {
  Element d = matrices_->diagonal(f);
  Family g = glue(s);
  for (auto& v : g) v = matrices_->multiply(v, d);
  return unglue(g);
}

Family CoverBundle::local_inner(const Family& glued_s, const Family& glued_t) const {
  const MatrixAlgebra& mk = *matrices_;
  Family out(glued_s.size());
  for (std::size_t a = 0; a < glued_s.size(); ++a)
    out[a] = mk.entry(mk.multiply(mk.involution(glued_s[a]), glued_t[a]), 0, 0);
  return out;
}

Element CoverBundle::inner(const Family& s, const Family& t) const {
  if (!unitary()) throw Error("cover.NonUnitaryTransitions", "phi_ab* != phi_ba");
  Family local = local_inner(glue(s), glue(t));
  Element h;
  for (std::size_t a = 0; a < local.size(); ++a) h += model_.functions()->multiply(model_.partition()[a], local[a]);
  return h;
}

Family CoverBundle::classical_endo_glue(const Family& local) const {
  const MatrixAlgebra& mk = *matrices_;
  const int m = model_.charts();
  Family out(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      Element chi = mk.diagonal(chi_[static_cast<std::size_t>(c)]);
      Element inner = mk.multiply(mk.involution(chi), mk.multiply(local[static_cast<std::size_t>(c)], chi));
      out[static_cast<std::size_t>(a)] += mk.multiply(classical_phi(a, c), mk.multiply(inner, classical_phi(c, a)));
    }
  return out;
}

bool CoverBundle::covariant(const Family& x, bool classical) const {
  const MatrixAlgebra& mk = *matrices_;
  const int m = model_.charts();
  for (int a = 0; a < m; ++a) {
    const Element& xa = x[static_cast<std::size_t>(a)];
    Element ea = mk.diagonal(model_.support(a));
    if (mk.multiply(ea, mk.multiply(xa, ea)) != xa) return false;
    for (int b = 0; b < m; ++b) {
      if (a == b || model_.overlap(a, b).is_zero()) continue;
      Element pab = classical ? classical_phi(a, b) : phi(a, b);
      Element pba = classical ? classical_phi(b, a) : phi(b, a);
      if (mk.multiply(pab, mk.multiply(x[static_cast<std::size_t>(b)], pba)) !=
          mk.multiply(mk.diagonal(model_.overlap(a, b)), xa))
        return false;
    }
  }
  return true;
}

Family CoverBundle::transport_raw(const Family& x) const {
  const MatrixAlgebra& mk = *matrices_;
  const int m = model_.charts();
  Family out(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      if (a != c && model_.overlap(a, c).is_zero()) continue;
      Element chi = mk.diagonal(chi_[static_cast<std::size_t>(c)]);
      Element inner = mk.multiply(mk.involution(chi), mk.multiply(x[static_cast<std::size_t>(c)], chi));
      out[static_cast<std::size_t>(a)] += mk.multiply(phi(a, c), mk.multiply(inner, phi(c, a)));
    }
  return out;
}

Family CoverBundle::transport(const Family& x) const {
  const MatrixAlgebra& mk = *matrices_;
  Family raw = transport_raw(x);
  return apply_local(raw, [&](int a, const Element& y) {
    const Element& w = w_inverse_[static_cast<std::size_t>(a)];
    return mk.multiply(w, mk.multiply(y, w));
  });
}

Family CoverBundle::transport_inverse(const Family& y) const {
  if (!covariant(y)) throw Error("cover.NotCovariant", "family is not covariant under the transitions");
  Family x = classical_endo_glue(y);
  for (int it = 0; it <= default_order() + 1; ++it) {
    Family r = family_sub(y, transport(x));
    if (family_is_zero(r)) return x;
    x = family_add(x, classical_endo_glue(r));
  }
  throw Error("cover.NotCovariant", "transport could not be inverted");
}

Family CoverBundle::endo_product(const Family& x, const Family& y) const {
  Family tx = transport(x), ty = transport(y);
  Family prod(tx.size());
  for (std::size_t a = 0; a < tx.size(); ++a) prod[a] = matrices_->multiply(tx[a], ty[a]);
  return transport_inverse(prod);
}

Family CoverBundle::endo_involution(const Family& x) const {
  return apply_local(x, [&](int, const Element& y) { return matrices_->involution(y); });
}

Family CoverBundle::endo_unit() const { return scalar_endo(model_.functions()->unit()); }

Family CoverBundle::scalar_endo(const Element& f) const {
  Family out(static_cast<std::size_t>(model_.charts()));
  for (int a = 0; a < model_.charts(); ++a)
    out[static_cast<std::size_t>(a)] = matrices_->diagonal(model_.functions()->multiply(model_.support(a), f));
  return out;
}

// Frames ----------------------------------------------------------------------

Element expand_in_frame(const MatrixAlgebra& m, const Element& frame, const Element& s) {
  Element inverse;
  try {
    inverse = star_inverse(m, frame);
  } catch (const Error& e) {
    throw Error("cover.DegenerateFrame", "classical frame is not invertible: " + e.detail());
  }
  return m.multiply(inverse, s);
}

Element orthonormalize_frame(const MatrixAlgebra& m, const Element& gram) {
  if (classical_part(gram) != m.unit())
    throw Error("cover.ClassicalNotOrthonormal", "classical Gram is " + to_string(classical_part(gram)));
  Element b = star_square_root(m, gram, m.unit());
  return star_inverse(m, b);
}

// Serre-Swan ------------------------------------------------------------------

SerreSwanData serre_swan(const CoverBundle& bundle) {
  const CoverModel& model = bundle.model();
  const MatrixAlgebra& mk = *bundle.matrices();
  const int m = model.charts();
  const int k = bundle.rank();
  auto chi = model.quadratic_partition();

  std::vector<Family> t_chi(static_cast<std::size_t>(m));
  Family s(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    t_chi[static_cast<std::size_t>(a)] = bundle.transport(bundle.scalar_endo(chi[static_cast<std::size_t>(a)]));
    for (int c = 0; c < m; ++c) {
      const Element& x = t_chi[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
      s[static_cast<std::size_t>(c)] += mk.multiply(mk.involution(x), x);
    }
  }
  SerreSwanData out;
  out.local_x.resize(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    const auto i = static_cast<std::size_t>(a);
    Element ea = mk.diagonal(model.support(a));
    Element x = s[i] - ea;
    if (!x.is_zero() && valuation(x) < 1)
      throw Error("cover.PartitionRepairFailure", "sum chi* chi is not 1 classically on chart " + std::to_string(a));
    Element v_inverse = mk.multiply(ea, binomial_invsqrt(mk, x));
    out.local_x[i] = mk.multiply(t_chi[i][i], v_inverse);
  }

  out.big = MatrixAlgebra::make(model.functions(), m * k);
  auto big = out.big;
  auto place = [big, k](Element& target, int br, int bc, const Element& block) {
    for (const auto& [mono, c] : block.terms()) {
      Monomial shifted = mono;
      shifted[0] += br * k;
      shifted[1] += bc * k;
      target.add(shifted, c);
    }
  };
  auto take = [k](const Element& from, int br, int bc) {
    Element block;
    for (const auto& [mono, c] : from.terms())
      if (mono[0] / k == br && mono[1] / k == bc) {
        Monomial shifted = mono;
        shifted[0] -= br * k;
        shifted[1] -= bc * k;
        block.add(shifted, c);
      }
    return block;
  };

  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      const Element& xa = out.local_x[static_cast<std::size_t>(a)];
      const Element& xc = out.local_x[static_cast<std::size_t>(c)];
      place(out.projection, a, c, mk.multiply(xa, mk.multiply(bundle.phi(a, c), mk.involution(xc))));
      Element ca = mk.diagonal(chi[static_cast<std::size_t>(a)]);
      Element cc = mk.diagonal(chi[static_cast<std::size_t>(c)]);
      place(out.classical_projection, a, c, mk.multiply(ca, mk.multiply(bundle.classical_phi(a, c), mk.involution(cc))));
    }

  Family xs = out.local_x;
  auto mkp = bundle.matrices();
  out.eps = [xs, mkp, place, m](const Family& glued) {
    Element e;
    for (int a = 0; a < m; ++a) place(e, a, 0, mkp->multiply(xs[static_cast<std::size_t>(a)], glued[static_cast<std::size_t>(a)]));
    return e;
  };
  const CoverBundle* b = &bundle;
  out.pi = [xs, mkp, take, m, b](const Element& t) {
    Family r(static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a)
      for (int c = 0; c < m; ++c)
        r[static_cast<std::size_t>(a)] += mkp->multiply(
            b->phi(a, c), mkp->multiply(mkp->involution(xs[static_cast<std::size_t>(c)]), take(t, c, 0)));
    return r;
  };
  return out;
}

CenterProbeReport probe_center_closure(const CoverBundle& bundle, int samples, std::mt19937_64& rng) {
  CenterProbeReport r;
  const Algebra& f = *bundle.model().functions();
  const MatrixAlgebra& mk = *bundle.matrices();
  const int k = bundle.rank();
  for (int s = 0; s < samples; ++s) {
    Element x = f.random_element(rng), y = f.random_element(rng);
    Family prod = bundle.endo_product(bundle.scalar_endo(x), bundle.scalar_endo(y));
    ++r.samples;
    bool scalar = true;
    for (const auto& block : prod) {
      Element d = mk.entry(block, 0, 0);
      for (int i = 0; i < k && scalar; ++i)
        for (int j = 0; j < k && scalar; ++j) {
          Element e = mk.entry(block, i, j);
          if (i == j ? e != d : !e.is_zero()) scalar = false;
        }
    }
    if (!scalar) {
      if (r.detail.empty()) r.detail = "f *' g leaves the scalars for f = " + to_string(x) + ", g = " + to_string(y);
      continue;
    }
    ++r.scalar;
    if (prod == bundle.scalar_endo(f.multiply(x, y)))
      ++r.agrees;
    else if (r.detail.empty())
      r.detail = "f *' g is scalar but differs from f * g for f = " + to_string(x);
  }
  return r;
}

// Cech classes ----------------------------------------------------------------

std::map<ChartPair, LogElement> complete_logs(const CoverModel& model, const std::map<ChartPair, LogElement>& upper) {
  std::map<ChartPair, LogElement> out;
  for (const auto& [a, b] : model.overlaps()) {
    auto it = upper.find({a, b});
    if (it == upper.end()) throw Error("cover.NerveMismatch", "no log on " + pair_name(a, b));
    out[{a, b}] = it->second;
    out[{b, a}] = -it->second;
  }
  return out;
}

CechClassData cech_relative_class(const CoverModel& model, const std::map<ChartPair, LogElement>& logs) {
  const Algebra& f = *model.functions();
  CechClassData c;
  for (const auto& [a, b] : model.overlaps()) {
    auto ab = logs.find({a, b});
    auto ba = logs.find({b, a});
    if (ab == logs.end() || ba == logs.end()) throw Error("cover.NerveMismatch", "no log on " + pair_name(a, b));
    Element e = model.overlap(a, b);
    LogElement tab = restrict_log(f, ab->second, e), tba = restrict_log(f, ba->second, e);
    if (!(tba == -tab)) throw Error("cover.NotAntisymmetric", "t_ba != -t_ab on " + pair_name(a, b));
    c.t[{a, b}] = tab;
    c.t[{b, a}] = tba;
  }
  if (logs.size() != c.t.size()) throw Error("cover.NerveMismatch", "logs given off the nerve");
  c.integral = true;
  for (const auto& tr : model.triples()) {
    Element e = model.triple_overlap(tr);
    auto leg = [&](int x, int y) { return restrict_log(f, c.t.at({x, y}), e); };
    LogElement v = bch_compose(f, bch_compose(f, leg(tr[0], tr[1]), leg(tr[1], tr[2])), leg(tr[2], tr[0]));
    v = restrict_log(f, v, e);
    if (!is_central(f, v.rest) || !is_central(f, v.turns))
      throw Error("cover.NotCentral", "t_abc is not central on " + triple_name(tr));
    // constant: a C[[lambda]] multiple of the triple overlap indicator
    const auto& [m0, e0] = *e.terms().begin();
    Series inv = invert(e0);
    Series q = v.turns.coefficient(m0) * inv, r = v.rest.coefficient(m0) * inv;
    if (q * e != v.turns || r * e != v.rest) throw Error("cover.NotConstant", "t_abc varies on " + triple_name(tr));
    c.triple[tr] = {q * e, r * e};
    if (r.is_zero() && q == q.classical() && q[0].is_real() && q[0].re.get_den() == 1) {
      c.n[tr] = q[0].re.get_num().get_si();
    } else {
      c.integral = false;
      c.detail += (c.detail.empty() ? "" : "; ") + std::string("t") + triple_name(tr) + " = 2 pi i (" + to_string(q) +
                  ") + " + to_string(r);
    }
  }
  return c;
}

void require_integral(const CechClassData& c) {
  for (const auto& [tr, v] : c.triple)
    if (!c.n.count(tr)) throw Error("cover.NotIntegral", "t" + triple_name(tr) + " is not 2 pi i times an integer");
}

TransitionData transitions_from_logs(const CoverModel& model, const std::map<ChartPair, LogElement>& logs) {
  const Algebra& f = *model.functions();
  auto m1 = MatrixAlgebra::make(model.functions(), 1);
  TransitionData t;
  t.rank = 1;
  for (const auto& [key, log] : logs) {
    Element e = model.overlap(key.first, key.second);
    t.phi[key] = m1->embed(0, 0, f.multiply(e, star_exp(f, restrict_log(f, log, e))));
  }
  return t;
}

long pair_with_cycle(const CechClassData& c, const std::map<ChartTriple, int>& cycle) {
  require_integral(c);
  long total = 0;
  for (const auto& [tr, sgn] : cycle) {
    auto it = c.n.find(tr);
    if (it == c.n.end()) throw Error("cover.NerveMismatch", "cycle uses " + triple_name(tr) + " outside the nerve");
    total += sgn * it->second;
  }
  return total;
}

std::map<ChartTriple, int> tetrahedron_cycle() {
  return {{{1, 2, 3}, 1}, {{0, 2, 3}, -1}, {{0, 1, 3}, 1}, {{0, 1, 2}, -1}};
}

std::map<ChartPair, LogElement> coboundary_logs(const CoverModel& model, const std::vector<LogElement>& s) {
  const Algebra& f = *model.functions();
  std::map<ChartPair, LogElement> upper;
  for (const auto& [a, b] : model.overlaps())
    upper[{a, b}] = restrict_log(f, s[static_cast<std::size_t>(a)] + (-s[static_cast<std::size_t>(b)]), model.overlap(a, b));
  return complete_logs(model, upper);
}

CechClassData picard_action(const CoverModel& model, const CechClassData& line, const CechClassData& c) {
  if (line.t.size() != c.t.size()) throw Error("cover.NerveMismatch", "classes live on different nerves");
  std::map<ChartPair, LogElement> sum;
  for (const auto& [key, v] : c.t) {
    auto it = line.t.find(key);
    if (it == line.t.end()) throw Error("cover.NerveMismatch", "no line log on " + pair_name(key.first, key.second));
    sum[key] = v + it->second;
  }
  return cech_relative_class(model, sum);
}

CechClassData zero_class(const CoverModel& model) {
  std::map<ChartPair, LogElement> zero;
  for (const auto& [a, b] : model.overlaps()) {
    zero[{a, b}] = LogElement{};
    zero[{b, a}] = LogElement{};
  }
  return cech_relative_class(model, zero);
}

}  // namespace starrep
