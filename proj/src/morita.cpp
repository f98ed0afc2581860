#include "starrep/morita.hpp"

#include <set>

#include "starrep/errors.hpp"
#include "starrep/positivity.hpp"

namespace starrep {

Element deform_projection(const Algebra& a, const Element& p0) {
  AlgebraPtr c = a.classical();
  if (classical_part(p0) != p0) throw Error("morita.NotClassicalProjection", "P0 must be lambda-free");
  if (c->involution(p0) != p0) throw Error("morita.NotClassicalProjection", "P0 is not Hermitian");
  if (c->multiply(p0, p0) != p0) throw Error("morita.NotClassicalProjection", "P0 is not idempotent");
  Element x = Series(4) * (a.multiply(p0, p0) - p0);
  Element half = Series(Rational(1, 2)) * a.unit();
  return half + a.multiply(p0 - half, binomial_invsqrt(a, x));
}

Element solve_unipotent(const std::function<Element(const Element&)>& f, const Element& z) {
  Element x = z;
  for (int it = 0; it <= default_order() + 1; ++it) {
    Element r = z - f(x);
    if (r.is_zero()) return x;
    if (valuation(r) == 0) throw Error("morita.SolveFailure", "map is not the identity at order zero");
    x += r;
  }
  throw Error("morita.SolveFailure", "order-by-order correction did not settle");
}

DeformedModule::DeformedModule(AlgebraPtr ambient, Element p0, Element p)
    : ambient_(std::move(ambient)), classical_(ambient_->classical()), p0_(std::move(p0)), p_(std::move(p)) {}

Element DeformedModule::classical_vector(const Element& a) const { return classical_->multiply(p0_, a); }

Element DeformedModule::classical_endomorphism(const Element& a) const {
  return classical_->multiply(p0_, classical_->multiply(a, p0_));
}

Element DeformedModule::transport(const Element& x) const { return ambient_->multiply(p_, x); }

Element DeformedModule::pullback(const Element& y) const {
  return solve_unipotent([this](const Element& x) { return classical_vector(transport(x)); }, classical_vector(y));
}

Element DeformedModule::right_action(const Element& x, const Element& f) const {
  return pullback(ambient_->multiply(transport(x), f));
}

Element DeformedModule::inner(const Element& x, const Element& y) const {
  return ambient_->multiply(ambient_->involution(transport(x)), transport(y));
}

Element DeformedModule::endo_transport(const Element& b) const {
  return ambient_->multiply(p_, ambient_->multiply(b, p_));
}

Element DeformedModule::endo_pullback(const Element& y) const {
  return solve_unipotent([this](const Element& b) { return classical_endomorphism(endo_transport(b)); },
                         classical_endomorphism(y));
}

Element DeformedModule::endo_product(const Element& b, const Element& c) const {
  return endo_pullback(ambient_->multiply(endo_transport(b), endo_transport(c)));
}

Element DeformedModule::left_action(const Element& b, const Element& x) const {
  return pullback(ambient_->multiply(endo_transport(b), transport(x)));
}

DeformedModule deform_module(const AlgebraPtr& a, const Element& p0) { return {a, p0, deform_projection(*a, p0)}; }

namespace {

std::shared_ptr<const MatrixAlgebra> underlying_matrices(const AlgebraPtr& ambient) {
  if (auto m = std::dynamic_pointer_cast<const MatrixAlgebra>(ambient)) return m;
  if (auto t = std::dynamic_pointer_cast<const TwistedAlgebra>(ambient))
    if (auto m = std::dynamic_pointer_cast<const MatrixAlgebra>(t->base())) return m;
  throw Error("morita.NotMatrixAlgebra", ambient->id() + " is not a matrix algebra");
}

}  // namespace

AlgebraPtr trace_algebra(const AlgebraPtr& ambient) {
  auto m = underlying_matrices(ambient);
  if (std::dynamic_pointer_cast<const MatrixAlgebra>(ambient)) return m->base();
  return m->base()->classical();
}

Element matrix_trace(const AlgebraPtr& ambient, const Element& m) { return underlying_matrices(ambient)->trace(m); }

std::string to_string(FullnessVerdict::Kind k) {
  switch (k) {
    case FullnessVerdict::Kind::full:
      return "full";
    case FullnessVerdict::Kind::not_full:
      return "not_full";
    case FullnessVerdict::Kind::unknown:
      return "unknown";
  }
  return "?";
}

FullnessVerdict is_strongly_full(const AlgebraPtr& ambient, const Element& p0, const std::optional<Element>& witness) {
  FullnessVerdict v;
  AlgebraPtr base = trace_algebra(ambient)->classical();
  Element t = matrix_trace(ambient, p0);
  try {
    base->classical_inverse(t);
  } catch (const Error&) {
    v.kind = FullnessVerdict::Kind::not_full;
    v.detail = "tr P0 is not invertible";
    return v;
  }
  auto replay = [&](const Element& tau) {
    if (base->multiply(base->involution(tau), tau) != t) return false;
    try {
      base->classical_inverse(tau);
    } catch (const Error&) {
      return false;
    }
    return true;
  };
  if (witness) {
    v.tau = *witness;
    if (replay(*witness)) {
      v.kind = FullnessVerdict::Kind::full;
      v.detail = "supplied witness replays";
    } else {
      v.detail = "supplied witness does not replay";
    }
    return v;
  }
  auto monos = base->basis_monomials();
  if (!base->is_commutative() || monos.empty()) {
    v.detail = "no pointwise square roots in this model";
    return v;
  }
  Element tau;
  for (const auto& m : monos) {
    try {
      tau.add(m, sqrt(t.coefficient(m)));
    } catch (const Error& e) {
      v.detail = "no exact root of tr P0: " + e.detail();
      return v;
    }
  }
  v.tau = tau;
  if (replay(tau)) v.kind = FullnessVerdict::Kind::full;
  return v;
}

Element deform_fullness_witness(const AlgebraPtr& ambient, const Element& tau0, const Element& p) {
  AlgebraPtr base = trace_algebra(ambient);
  try {
    return star_square_root(*base, matrix_trace(ambient, p), tau0);
  } catch (const Error& e) {
    if (e.code() == "staralg.ClassicalMismatch") throw Error("morita.ClassicalMismatch", e.detail());
    throw;
  }
}

Element idempotent_conjugator(const Algebra& a, const Element& p, const Element& q) {
  Element one = a.unit();
  Element z = a.multiply(q, p) + a.multiply(one - q, one - p);
  Element d = p - q;
  return a.multiply(z, binomial_invsqrt(a, -a.multiply(d, d)));
}

ModuleIsomorphism equivalence_of_deformations(const DeformedModule& d1, const DeformedModule& d2) {
  if (d1.classical_projection() != d2.classical_projection())
    throw Error("morita.SolveFailure", "the deformations start from different classical projections");
  ModuleIsomorphism s;
  s.conjugator = idempotent_conjugator(*d1.ambient(), d1.projection(), d2.projection());
  const AlgebraPtr a = d1.ambient();
  Element u = s.conjugator;
  s.map = [d1, d2, a, u](const Element& x) { return d2.pullback(a->multiply(u, d1.transport(x))); };
  return s;
}

InnerProductBimodule projection_bimodule(const AlgebraPtr& ambient, const Element& p,
                                         const std::vector<Element>& ambient_spanning) {
  InnerProductBimodule e;
  e.name = "P M";
  std::vector<Element> corner;
  for (const auto& s : ambient_spanning) {
    e.generators.push_back(ambient->multiply(p, s));
    corner.push_back(ambient->multiply(e.generators.back(), p));
  }
  e.left = std::make_shared<const CornerAlgebra>(ambient, p, corner);
  e.right = ambient;
  e.left_spanning = corner;
  e.right_spanning = ambient_spanning;
  e.left_act = [ambient](const Element& b, const Element& x) { return ambient->multiply(b, x); };
  e.right_act = [ambient](const Element& x, const Element& a) { return ambient->multiply(x, a); };
  e.right_inner = [ambient](const Element& x, const Element& y) { return ambient->multiply(ambient->involution(x), y); };
  e.left_inner = [ambient](const Element& x, const Element& y) { return ambient->multiply(x, ambient->involution(y)); };
  return e;
}

InnerProductBimodule functional_bimodule(const LinearFunctional& omega, const std::vector<Element>& spanning) {
  InnerProductBimodule e;
  e.name = "A_omega";
  AlgebraPtr a = omega.algebra();
  e.left = a;
  e.right = ScalarAlgebra::instance();
  e.generators = spanning;
  e.left_spanning = spanning;
  e.right_spanning = {e.right->unit()};
  e.left_act = [a](const Element& b, const Element& x) { return a->multiply(b, x); };
  e.right_act = [](const Element& x, const Element& s) { return s.coefficient({}) * x; };
  e.right_inner = [omega, a](const Element& x, const Element& y) {
    return Element::scalar(omega(a->multiply(a->involution(x), y)));
  };
  return e;
}

InnerProductBimodule conjugate_bimodule(const InnerProductBimodule& e) {
  if (!e.left_inner) throw Error("morita.NotEquivalenceBimodule", e.name + " has no left inner product");
  InnerProductBimodule c;
  c.name = "conj(" + e.name + ")";
  c.left = e.right;
  c.right = e.left;
  c.generators = e.generators;
  c.left_spanning = e.right_spanning;
  c.right_spanning = e.left_spanning;
  c.left_act = [e](const Element& a, const Element& x) { return e.right_act(x, e.right->involution(a)); };
  c.right_act = [e](const Element& x, const Element& b) { return e.left_act(e.left->involution(b), x); };
  c.right_inner = e.left_inner;
  c.left_inner = e.right_inner;
  return c;
}

BimoduleReport check_bimodule(const InnerProductBimodule& e) {
  BimoduleReport r;
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag) r.detail += (r.detail.empty() ? "" : "; ") + why;
    flag = false;
  };
  const Algebra& a = *e.right;
  const Algebra& b = *e.left;
  for (const auto& x : e.generators) {
    Element xx = e.right_inner(x, x);
    bool certified = algebraically_positive(a, {{Series(1), x}}).value == xx ||
                     algebraically_positive(a, {{Series(1), a.involution(x)}}).value == xx;
    if (!certified && e.right->id() == "scalar") certified = is_nonnegative(xx.coefficient({}));
    if (!certified) fail(r.positive, "<x, x> has no certificate for x = " + to_string(x));
    for (const auto& y : e.generators) {
      Element xy = e.right_inner(x, y);
      if (a.involution(xy) != e.right_inner(y, x)) fail(r.hermitian, "<x, y>* != <y, x>");
      if (e.left_inner && b.involution(e.left_inner(x, y)) != e.left_inner(y, x)) fail(r.hermitian, "Theta not Hermitian");
      for (const auto& s : e.right_spanning) {
        if (e.right_inner(x, e.right_act(y, s)) != a.multiply(xy, s)) fail(r.right_linear, "<x, y.a> != <x, y> a");
        if (e.left_inner && e.left_inner(x, e.right_act(y, s)) != e.left_inner(e.right_act(x, a.involution(s)), y))
          fail(r.compatible_right, "Theta_{x, y.a} != Theta_{x.a*, y}");
      }
      for (const auto& t : e.left_spanning)
        if (e.right_inner(e.left_act(t, x), y) != e.right_inner(x, e.left_act(b.involution(t), y)))
          fail(r.compatible_left, "<b.x, y> != <x, b*.y> for b = " + to_string(t));
      if (e.left_inner)
        for (const auto& z : e.generators)
          if (e.left_act(e.left_inner(x, y), z) != e.right_act(x, e.right_inner(y, z)))
            fail(r.theta_compatible, "Theta_{x,y} z != x <y, z>");
    }
  }
  return r;
}

bool is_full(const InnerProductBimodule& e) {
  std::vector<Element> inner;
  for (const auto& x : e.generators)
    for (const auto& y : e.generators) inner.push_back(classical_part(e.right_inner(x, y)));
  std::set<Monomial> monos;
  for (const auto& v : inner)
    for (const auto& [m, c] : v.terms()) monos.insert(m);
  for (const auto& v : e.right_spanning) {
    Element c0 = classical_part(v);
    for (const auto& [m, c] : c0.terms()) monos.insert(m);
  }
  std::vector<Monomial> cols(monos.begin(), monos.end());
  auto rank_of = [&](const std::vector<Element>& rows) {
    GaussMatrix g = gauss_zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i].coefficient(cols[j])[0];
    return gauss_rank(g);
  };
  std::vector<Element> both = inner;
  for (const auto& v : e.right_spanning) both.push_back(classical_part(v));
  return rank_of(inner) == rank_of(both);
}

InducedRepresentation rieffel_induce(const InnerProductBimodule& e, const Representation& pi) {
  const auto m = static_cast<Eigen::Index>(e.generators.size());
  const Eigen::Index n = pi.carrier->generators();
  const SeriesMatrix& gpi = pi.carrier->gram();
  auto block_gram = [&](const std::function<Element(Eigen::Index, Eigen::Index)>& inner) {
    SeriesMatrix g(m * n, m * n);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index k = 0; k < m; ++k) {
        SeriesMatrix block = mul(gpi, pi.act(inner(i, k)));
        g.block(i * n, k * n, n, n) = block;
      }
    return g;
  };
  InducedRepresentation out;
  out.inner_generators = n;
  out.gram = block_gram([&](Eigen::Index i, Eigen::Index k) {
    return e.right_inner(e.generators[static_cast<std::size_t>(i)], e.generators[static_cast<std::size_t>(k)]);
  });
  out.quotient = GramQuotient::compute(out.gram);
  if (out.quotient.status() != GramQuotient::Status::positive) {
    std::string why = "induced Gram is " + to_string(out.quotient.status()) + ": " + out.quotient.detail();
    if (out.quotient.status() == GramQuotient::Status::negative) {
      std::string w;
      for (Eigen::Index i = 0; i < out.quotient.witness().size(); ++i)
        w += (i ? ", " : "") + to_string(out.quotient.witness()(i));
      why += "; witness [" + w + "]";
    }
    throw Error("morita.PositivityFailure", why);
  }
  out.rep.algebra = e.left;
  out.rep.carrier = make_module(pi.carrier->ring(), out.gram, out.quotient.null_vectors());
  out.rep.spanning = e.left_spanning;
  GramQuotient q = out.quotient;
  std::vector<int> reps = q.representatives();
  InnerProductBimodule bim = e;
  Representation inner_rep = pi;
  out.rep.act = [bim, inner_rep, q, reps, m, n](const Element& b) {
    const SeriesMatrix& g = inner_rep.carrier->gram();
    // pairings of x_k (x) phi_l with (b x_i) (x) phi_j
    std::vector<std::vector<SeriesMatrix>> blocks(static_cast<std::size_t>(m));
    std::vector<Element> bx;
    for (const auto& x : bim.generators) bx.push_back(bim.left_act(b, x));
    for (Eigen::Index k = 0; k < m; ++k)
      for (Eigen::Index i = 0; i < m; ++i)
        blocks[static_cast<std::size_t>(k)].push_back(
            mul(g, inner_rep.act(bim.right_inner(bim.generators[static_cast<std::size_t>(k)], bx[static_cast<std::size_t>(i)]))));
    SeriesMatrix out = zero_matrix(m * n, m * n);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        SeriesVector pairings(m * n);
        for (Eigen::Index k = 0; k < m; ++k)
          for (Eigen::Index l = 0; l < n; ++l)
            pairings(k * n + l) = blocks[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)](l, j);
        SeriesVector c = q.project(pairings).coordinates;
        for (std::size_t r = 0; r < reps.size(); ++r) out(reps[r], i * n + j) = c(static_cast<Eigen::Index>(r));
      }
    return out;
  };
  return out;
}

Representation scalar_representation() {
  Representation r;
  r.algebra = ScalarAlgebra::instance();
  r.carrier = standard_module(Ring::formal, 1);
  r.spanning = {r.algebra->unit()};
  r.act = [](const Element& s) {
    SeriesMatrix m(1, 1);
    m(0, 0) = s.coefficient({});
    return m;
  };
  return r;
}

Operator rieffel_on_morphism(const InducedRepresentation& from, const InducedRepresentation& to, const Operator& u) {
  const Eigen::Index nf = from.inner_generators, nt = to.inner_generators;
  const Eigen::Index m = from.rep.carrier->generators() / nf;
  SeriesMatrix v = zero_matrix(m * nt, m * nf);
  for (Eigen::Index i = 0; i < m; ++i) v.block(i * nt, i * nf, nt, nf) = u.matrix;
  return {from.rep.carrier, to.rep.carrier, v};
}

Operator double_induction_map(const InnerProductBimodule& e, const InducedRepresentation& twice, const Representation& pi) {
  const auto m = static_cast<Eigen::Index>(e.generators.size());
  const Eigen::Index n = pi.carrier->generators();
  SeriesMatrix u = zero_matrix(n, m * m * n);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index k = 0; k < m; ++k) {
      SeriesMatrix pa = pi.act(e.right_inner(e.generators[static_cast<std::size_t>(a)], e.generators[static_cast<std::size_t>(k)]));
      for (Eigen::Index l = 0; l < n; ++l) u.col(a * m * n + k * n + l) = pa.col(l);
    }
  return {twice.rep.carrier, pi.carrier, u};
}

Operator solve_cyclic_intertwiner(const Representation& pi, const SeriesVector& xi, const Representation& rho,
                                  const SeriesVector& eta) {
  const auto j = static_cast<Eigen::Index>(pi.spanning.size());
  const SeriesMatrix& g1 = pi.carrier->gram();
  SeriesMatrix c(g1.rows(), j), d(rho.carrier->generators(), j);
  for (Eigen::Index s = 0; s < j; ++s) {
    const Element& a = pi.spanning[static_cast<std::size_t>(s)];
    c.col(s) = mul(pi.act(a), xi);
    d.col(s) = mul(rho.act(a), eta);
  }
  SeriesMatrix cg = mul(hermitian_adjoint(c), g1);
  GramQuotient orbit = GramQuotient::compute(mul(cg, c));
  if (orbit.status() != GramQuotient::Status::positive)
    throw Error("morita.SolveFailure", "orbit Gram is not positive: " + orbit.detail());
  auto reps = orbit.representatives();
  SeriesMatrix u = zero_matrix(d.rows(), g1.rows());
  for (Eigen::Index k = 0; k < g1.rows(); ++k) {
    GramQuotient::Projection p;
    try {
      p = orbit.project(cg.col(k), &g1(k, k));
    } catch (const Error& e) {
      throw Error("morita.SolveFailure", "generator " + std::to_string(k) + " is outside the cyclic orbit");
    }
    if (!p.exact) throw Error("morita.SolveFailure", "generator " + std::to_string(k) + " is outside the cyclic orbit");
    for (std::size_t r = 0; r < reps.size(); ++r) u.col(k) += scale(p.coordinates(static_cast<Eigen::Index>(r)), d.col(reps[r]));
  }
  return {pi.carrier, rho.carrier, u};
}

}  // namespace starrep
