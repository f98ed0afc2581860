#include "starrep/prehilbert.hpp"

#include "starrep/errors.hpp"

namespace starrep {

std::string to_string(Ring r) { return r == Ring::complex ? "C" : "C[[l]]"; }

PreHilbertModule::PreHilbertModule(Ring ring, SeriesMatrix gram, SeriesMatrix relations)
    : ring_(ring), gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw Error("prehilbert.BadGram", "Gram matrix must be square");
  if (!is_hermitian(gram_)) throw Error("prehilbert.BadGram", "Gram matrix is not Hermitian");
  if (ring_ == Ring::complex && lift(coefficient(gram_, 0)) != gram_)
    throw Error("prehilbert.BadGram", "a module over C needs a lambda-free Gram matrix");
  quotient_ = GramQuotient::compute(gram_);
  if (relations.size() != 0 || relations.cols() != 0)
    relations_ = std::move(relations);
  else
    relations_ = quotient_.null_vectors();
}

bool PreHilbertModule::is_null(const SeriesVector& x) const { return is_zero(mul(gram_, x)); }

bool PreHilbertModule::equal(const SeriesVector& x, const SeriesVector& y) const {
  return is_null(SeriesVector(x - y));
}

SeriesVector PreHilbertModule::basis_vector(Eigen::Index i) const {
  SeriesVector v = zero_matrix(generators(), 1);
  v(i) = Series(1);
  return v;
}

ModulePtr make_module(Ring ring, SeriesMatrix gram, SeriesMatrix relations) {
  return std::make_shared<const PreHilbertModule>(ring, std::move(gram), std::move(relations));
}

ModulePtr standard_module(Ring ring, Eigen::Index n) { return make_module(ring, identity_matrix(n)); }

Operator identity_operator(const ModulePtr& m) { return {m, m, identity_matrix(m->generators())}; }

Operator compose(const Operator& c, const Operator& a) { return {a.domain, c.codomain, mul(c.matrix, a.matrix)}; }

Operator operator+(const Operator& a, const Operator& b) { return {a.domain, a.codomain, a.matrix + b.matrix}; }

Operator scale(const Series& s, const Operator& a) { return {a.domain, a.codomain, starrep::scale(s, a.matrix)}; }

bool equal(const Operator& a, const Operator& b) {
  if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols()) return false;
  return is_zero(mul(a.codomain->gram(), SeriesMatrix(a.matrix - b.matrix)));
}

bool well_defined(const Operator& a) {
  const SeriesMatrix& rel = a.domain->relations();
  for (Eigen::Index j = 0; j < rel.cols(); ++j)
    if (!a.codomain->is_null(mul(a.matrix, rel.col(j)))) return false;
  return true;
}

Operator adjoint(const Operator& a) {
  const PreHilbertModule& dom = *a.domain;
  if (!dom.is_positive()) throw Error("prehilbert.NotAdjointable", "domain Gram is not positive: " + dom.quotient().detail());
  // G_dom X = A^H G_cod, column by column through the graded quotient.
  SeriesMatrix rhs = mul(hermitian_adjoint(a.matrix), a.codomain->gram());
  auto reps = dom.quotient().representatives();
  SeriesMatrix x = zero_matrix(dom.generators(), rhs.cols());
  for (Eigen::Index c = 0; c < rhs.cols(); ++c) {
    GramQuotient::Projection p;
    try {
      p = dom.quotient().project(rhs.col(c));
    } catch (const Error& e) {
      throw Error("prehilbert.NotAdjointable", "column " + std::to_string(c) + ": " + e.detail());
    }
    for (std::size_t i = 0; i < reps.size(); ++i) x(reps[i], c) = p.coordinates(static_cast<Eigen::Index>(i));
  }
  if (mul(dom.gram(), x) != rhs)
    throw Error("prehilbert.NotAdjointable", "adjoint equation is inconsistent at some lambda-order");
  return {a.codomain, a.domain, x};
}

std::string to_string(IsometryClass c) {
  switch (c) {
    case IsometryClass::isometric:
      return "isometric";
    case IsometryClass::unitary:
      return "unitary";
    case IsometryClass::neither:
      return "neither";
  }
  return "?";
}

IsometryClass classify_isometry(const Operator& u) {
  Operator ustar = adjoint(u);
  if (mul(hermitian_adjoint(u.matrix), mul(u.codomain->gram(), u.matrix)) != u.domain->gram()) return IsometryClass::neither;
  return equal(compose(u, ustar), identity_operator(u.codomain)) ? IsometryClass::unitary : IsometryClass::isometric;
}

Operator theta_operator(const ModulePtr& m, const SeriesVector& phi, const SeriesVector& psi) {
  SeriesMatrix row = mul(hermitian_adjoint(SeriesMatrix(psi)), m->gram());
  return {m, m, mul(SeriesMatrix(phi), row)};
}

RepresentationReport check_representation(
    const Representation& pi, const std::vector<Element>& left,
    const std::function<bool(const Element&, const Element&, Eigen::Index)>& column_ok) {
  RepresentationReport r;
  const Algebra& a = *pi.algebra;
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag) r.detail += (r.detail.empty() ? "" : "; ") + why;
    flag = false;
  };
  if (!equal(pi(a.unit()), identity_operator(pi.carrier))) fail(r.unital, "pi(1) is not the identity");
  for (const auto& x : pi.spanning) {
    try {
      if (!equal(pi(a.involution(x)), adjoint(pi(x)))) fail(r.star_preserving, "pi(a*) != pi(a)* for a = " + to_string(x));
    } catch (const Error& e) {
      fail(r.star_preserving, e.code() + " for a = " + to_string(x));
    }
  }
  const SeriesMatrix& g = pi.carrier->gram();
  for (const auto& x : left.empty() ? pi.spanning : left) {
    SeriesMatrix px = pi.act(x);
    for (const auto& y : pi.spanning) {
      SeriesMatrix diff = pi.act(a.multiply(x, y)) - mul(px, pi.act(y));
      for (Eigen::Index k = 0; k < diff.cols(); ++k) {
        if (column_ok && !column_ok(x, y, k)) continue;
        if (!is_zero(mul(g, diff.col(k)))) {
          fail(r.multiplicative, "pi(ab) != pi(a)pi(b) for a = " + to_string(x) + ", b = " + to_string(y));
          break;
        }
      }
    }
  }
  return r;
}

IntertwinerReport verify_intertwiner(const Operator& u, const Representation& pi, const Representation& rho) {
  IntertwinerReport r;
  for (const auto& a : pi.spanning) {
    if (!equal(compose(u, pi(a)), compose(rho(a), u))) {
      r.pass = false;
      r.detail = "intertwining fails on " + to_string(a);
      break;
    }
  }
  try {
    r.isometry = classify_isometry(u);
  } catch (const Error& e) {
    r.isometry = IsometryClass::neither;
    if (r.detail.empty()) r.detail = e.code() + ": " + e.detail();
  }
  return r;
}

ClassicalLimit classical_limit_space(const ModulePtr& h) {
  SeriesMatrix g0 = lift(coefficient(h->gram(), 0));
  GramQuotient q = GramQuotient::compute(g0);
  if (q.status() != GramQuotient::Status::positive)
    throw Error("prehilbert.NotPositive", "order-zero Gram is not positive: " + q.detail());
  auto reps = q.representatives();
  const auto r = static_cast<Eigen::Index>(reps.size());
  const Eigen::Index m = h->generators();
  ClassicalLimit out;
  out.space = make_module(Ring::complex, q.representative_gram());
  out.quotient_map = zero_matrix(r, m);
  for (Eigen::Index j = 0; j < m; ++j) out.quotient_map.col(j) = q.project(g0.col(j)).coordinates;
  out.section = zero_matrix(m, r);
  for (Eigen::Index i = 0; i < r; ++i) out.section(reps[static_cast<std::size_t>(i)], i) = Series(1);
  return out;
}

Operator classical_limit_operator(const Operator& a, const ClassicalLimit& dom, const ClassicalLimit& cod) {
  adjoint(a);
  SeriesMatrix a0 = lift(coefficient(a.matrix, 0));
  return {dom.space, cod.space, mul(cod.quotient_map, mul(a0, dom.section))};
}

Representation classical_limit_representation(const Representation& pi, const ClassicalLimit& lim) {
  Representation out;
  out.algebra = pi.algebra->classical();
  out.carrier = lim.space;
  for (const auto& s : pi.spanning) out.spanning.push_back(classical_part(s));
  auto act = pi.act;
  SeriesMatrix q = lim.quotient_map, s = lim.section;
  out.act = [act, q, s](const Element& a) {
    return mul(q, mul(lift(coefficient(act(classical_part(a)), 0)), s));
  };
  return out;
}

}  // namespace starrep
