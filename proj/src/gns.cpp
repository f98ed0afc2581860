#include "starrep/gns.hpp"

#include "starrep/errors.hpp"

namespace starrep {

namespace {

GramQuotient positive_quotient(const SeriesMatrix& g) {
  GramQuotient q = GramQuotient::compute(g);
  if (q.status() != GramQuotient::Status::positive)
    throw Error("gns.DegenerateGrading", "graded elimination is " + to_string(q.status()) + ": " + q.detail());
  return q;
}

// Coordinates (w.r.t. representatives) of the vector whose pairings with the
// representative generators are `rep_pairings`.
SeriesVector project_from_reps(const GramQuotient& q, const std::vector<int>& reps, const SeriesVector& rep_pairings) {
  SeriesVector full = zero_matrix(q.dimension(), 1);
  for (std::size_t i = 0; i < reps.size(); ++i) full(reps[i]) = rep_pairings(static_cast<Eigen::Index>(i));
  return q.project(full).coordinates;
}

}  // namespace

SeriesMatrix gelfand_ideal(const LinearFunctional& omega, const std::vector<Element>& basis) {
  return positive_quotient(gram_matrix(omega, basis)).null_vectors();
}

GNSData gns_representation(const LinearFunctional& omega, const std::vector<Element>& spanning, bool compressed) {
  GNSData d;
  d.omega = omega;
  d.spanning = spanning;
  d.compressed = compressed;
  SeriesMatrix g = gram_matrix(omega, spanning);
  GramQuotient q = positive_quotient(g);
  d.ideal = q.null_vectors();
  d.carrier = make_module(Ring::formal, g, d.ideal);
  const AlgebraPtr& alg = omega.algebra();
  for (std::size_t i = 0; i < spanning.size(); ++i)
    if (spanning[i] == alg->unit()) {
      d.cyclic = static_cast<int>(i);
      break;
    }

  const std::vector<int> reps = q.representatives();
  const auto m = static_cast<Eigen::Index>(spanning.size()), r = static_cast<Eigen::Index>(reps.size());
  // Column k: psi_{b_k} in representative coordinates.
  SeriesMatrix to_reps = zero_matrix(r, m);
  for (Eigen::Index k = 0; k < m; ++k) to_reps.col(k) = q.project(g.col(k)).coordinates;
  std::vector<Element> rep_stars;
  for (int p : reps) rep_stars.push_back(alg->involution(spanning[static_cast<std::size_t>(p)]));

  d.pi.algebra = alg;
  d.pi.carrier = d.carrier;
  d.pi.spanning = spanning;
  d.pi.act = [omega, spanning, q, reps, rep_stars, to_reps, m, r](const Element& a) {
    const Algebra& alg = *omega.algebra();
    SeriesMatrix c = zero_matrix(r, r);
    for (Eigen::Index j = 0; j < r; ++j) {
      Element ab = alg.multiply(a, spanning[static_cast<std::size_t>(reps[static_cast<std::size_t>(j)])]);
      SeriesVector pairings(r);
      for (Eigen::Index p = 0; p < r; ++p) pairings(p) = omega(alg.multiply(rep_stars[static_cast<std::size_t>(p)], ab));
      c.col(j) = project_from_reps(q, reps, pairings);
    }
    SeriesMatrix small = mul(c, to_reps);
    SeriesMatrix out = zero_matrix(m, m);
    for (Eigen::Index i = 0; i < r; ++i) out.row(reps[static_cast<std::size_t>(i)]) = small.row(i);
    return out;
  };
  return d;
}

SeriesVector act_on_cyclic(const GNSData& data, const Element& a) {
  if (data.cyclic < 0) throw Error("gns.NoCyclicVector", "the spanning list does not contain the unit");
  const Algebra& alg = *data.omega.algebra();
  const GramQuotient& q = data.carrier->quotient();
  const std::vector<int> reps = q.representatives();
  SeriesVector pairings(static_cast<Eigen::Index>(reps.size()));
  for (std::size_t p = 0; p < reps.size(); ++p)
    pairings(static_cast<Eigen::Index>(p)) =
        data.omega(alg.multiply(alg.involution(data.spanning[static_cast<std::size_t>(reps[p])]), a));
  SeriesVector c = project_from_reps(q, reps, pairings);
  SeriesVector out = zero_matrix(data.carrier->generators(), 1);
  for (std::size_t i = 0; i < reps.size(); ++i) out(reps[i]) = c(static_cast<Eigen::Index>(i));
  return out;
}

GNSReport verify_gns(const GNSData& data) {
  GNSReport r;
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag) r.detail += (r.detail.empty() ? "" : "; ") + why;
    flag = false;
  };
  const Algebra& alg = *data.omega.algebra();
  const PreHilbertModule& h = *data.carrier;

  if (!is_zero(mul(h.gram(), data.ideal))) fail(r.well_defined, "Gram does not vanish on the ideal");

  if (data.cyclic < 0) {
    fail(r.reproduces, "no cyclic vector");
    fail(r.cyclic, "no cyclic vector");
  } else {
    const SeriesVector psi1 = h.basis_vector(data.cyclic);
    for (std::size_t j = 0; j < data.spanning.size(); ++j) {
      const Element& b = data.spanning[j];
      SeriesMatrix pb = data.pi.act(b);
      if (h.inner(psi1, pb.col(data.cyclic)) != data.omega(b))
        fail(r.reproduces, "omega(A) != <psi_1, pi(A) psi_1> for A = " + to_string(b));
      if (!h.equal(pb.col(data.cyclic), h.basis_vector(static_cast<Eigen::Index>(j))))
        fail(r.cyclic, "pi(b) psi_1 != psi_b for b = " + to_string(b));
    }
  }

  for (const auto& gen : alg.generators()) {
    for (Eigen::Index c = 0; c < data.ideal.cols(); ++c) {
      Element x = alg.multiply(gen, combine(data.spanning, data.ideal.col(c)));
      if (!data.omega(alg.multiply(alg.involution(x), x)).is_zero()) {
        fail(r.left_ideal, "g J not in J for g = " + to_string(gen));
        break;
      }
    }
  }
  return r;
}

KernelBound kernel_intersection(const std::vector<GNSData>& data, const std::vector<Element>& tested) {
  const auto t = static_cast<Eigen::Index>(tested.size());
  KernelBound out;
  if (data.empty()) {
    out.kernel = identity_matrix(t);
    out.sufficiently_many = t == 0;
    return out;
  }
  Eigen::Index rows = 0;
  for (const auto& d : data) rows += d.carrier->generators() * d.carrier->generators();
  SeriesMatrix stacked = zero_matrix(rows, t);
  for (Eigen::Index i = 0; i < t; ++i) {
    Eigen::Index row = 0;
    for (const auto& d : data) {
      SeriesMatrix gp = mul(d.carrier->gram(), d.pi.act(tested[static_cast<std::size_t>(i)]));
      for (Eigen::Index c = 0; c < gp.cols(); ++c)
        for (Eigen::Index k = 0; k < gp.rows(); ++k) stacked(row++, i) = gp(k, c);
    }
  }
  out.kernel = series_kernel(stacked);
  out.sufficiently_many = out.kernel.cols() == 0;
  return out;
}

}  // namespace starrep
