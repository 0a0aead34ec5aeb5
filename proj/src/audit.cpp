#include "metrize/audit.hpp"

#include <algorithm>
#include <cmath>

namespace metrize {

AuditReport check_triangle(const DistanceSpace& space) {
  AuditReport rep;
  rep.axiom = "triangle";
  const size_t n = space.size();
  for (size_t x = 0; x < n; ++x)
    for (size_t z = 0; z < n; ++z) {
      if (x == z) continue;
      for (size_t y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        Scalar rhs = space.d(x, y) + space.d(y, z);
        if (space.d(x, z).gt(rhs)) rep.witnesses.push_back({{x, y, z}, space.d(x, z), rhs, ""});
      }
    }
  rep.pass = rep.witnesses.empty();
  return rep;
}

Scalar min_b_coefficient(const DistanceSpace& space) {
  const size_t n = space.size();
  Scalar best = Scalar::exact(1);
  for (size_t x = 0; x < n; ++x)
    for (size_t z = 0; z < n; ++z) {
      if (x == z) continue;
      for (size_t y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        Scalar legs = space.d(x, y) + space.d(y, z);
        if (legs.value_sign() == 0)
          throw Error("no finite b-coefficient: both legs vanish at a triple");
        best = Scalar::max(best, space.d(x, z) / legs);
      }
    }
  return best;
}

AuditReport audit_b_coefficient(const DistanceSpace& space) {
  AuditReport rep;
  rep.axiom = "b-coefficient";
  rep.k_min = min_b_coefficient(space);
  if (space.size() < 3) rep.notes.push_back("fewer than 3 points: coefficient defaults to 1");
  rep.pass = true;
  return rep;
}

AuditReport check_generalized_triangle(const DistanceSpace& space, bool strict) {
  // Either reading reduces to the same finite test. A threshold eps violates
  // the axiom at (x,y,z) iff max(legs) < eps and D(x,z) >= 2*eps (strict
  // premises) or max(legs) <= eps and D(x,z) > 2*eps (non-strict premises);
  // in both cases such an eps exists iff D(x,z) > 2*max(legs). The boundary
  // D(x,z) = 2*max(legs) satisfies both readings, since every admissible eps
  // then exceeds max(legs) and 2*eps exceeds D(x,z).
  AuditReport rep;
  rep.axiom = strict ? "generalized-triangle(strict)" : "generalized-triangle";
  const size_t n = space.size();
  const Scalar two = Scalar::exact(2);
  for (size_t x = 0; x < n; ++x)
    for (size_t z = 0; z < n; ++z) {
      if (x == z) continue;
      for (size_t y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        Scalar rhs = two * Scalar::max(space.d(x, y), space.d(y, z));
        if (space.d(x, z).gt(rhs)) rep.witnesses.push_back({{x, y, z}, space.d(x, z), rhs, ""});
      }
    }
  rep.pass = rep.witnesses.empty();
  return rep;
}

namespace {

std::vector<Scalar> distinct_offdiag(const DistanceSpace& space) {
  std::vector<Scalar> vals;
  for (size_t i = 0; i < space.size(); ++i)
    for (size_t j = i + 1; j < space.size(); ++j) vals.push_back(space.d(i, j));
  std::sort(vals.begin(), vals.end(), Scalar::value_less);
  std::vector<Scalar> out;
  for (const Scalar& v : vals)
    if (out.empty() || !out.back().eq(v)) out.push_back(v);
  return out;
}

}  // namespace

AuditReport check_uniform_regularity(const DistanceSpace& space, const ThresholdFn& phi,
                                     std::vector<Scalar> eps_grid) {
  AuditReport rep;
  rep.axiom = "uniform-regularity";
  if (eps_grid.empty()) {
    eps_grid = distinct_offdiag(space);
    rep.notes.push_back("eps grid defaulted to the distinct off-diagonal values");
  }
  const size_t n = space.size();
  for (const Scalar& eps : eps_grid) {
    Scalar t = phi(eps);
    if (!t.gt(Scalar()))
      throw Error("threshold function must be positive, phi(" + eps.str() + ") = " + t.str());
    for (size_t x = 0; x < n; ++x)
      for (size_t z = 0; z < n; ++z) {
        if (x == z) continue;
        for (size_t y = 0; y < n; ++y) {
          if (y == x || y == z) continue;
          if (space.d(x, y).lt(t) && space.d(y, z).lt(t) && space.d(x, z).gt(eps))
            rep.witnesses.push_back(
                {{x, y, z}, space.d(x, z), eps, "eps=" + eps.str() + " phi=" + t.str()});
        }
      }
  }
  rep.pass = rep.witnesses.empty();
  return rep;
}

namespace {

// Enumerates ordered tuples of `nu` pairwise-distinct points avoiding x, y.
bool nu_tuples(const DistanceSpace& space, size_t x, size_t y, int nu,
               std::vector<size_t>& tuple, AuditReport& rep) {
  const size_t n = space.size();
  if (static_cast<int>(tuple.size()) == nu) {
    Scalar rhs = space.d(x, tuple.front());
    for (size_t i = 0; i + 1 < tuple.size(); ++i) rhs = rhs + space.d(tuple[i], tuple[i + 1]);
    rhs = rhs + space.d(tuple.back(), y);
    if (space.d(x, y).gt(rhs)) {
      std::vector<size_t> pts{x};
      pts.insert(pts.end(), tuple.begin(), tuple.end());
      pts.push_back(y);
      rep.witnesses.push_back({pts, space.d(x, y), rhs, ""});
    }
    return true;
  }
  for (size_t t = 0; t < n; ++t) {
    if (t == x || t == y) continue;
    if (std::find(tuple.begin(), tuple.end(), t) != tuple.end()) continue;
    tuple.push_back(t);
    nu_tuples(space, x, y, nu, tuple, rep);
    tuple.pop_back();
  }
  return true;
}

}  // namespace

AuditReport check_nu_generalized(const DistanceSpace& space, int nu) {
  if (nu < 1) throw Error("nu must be at least 1");
  const size_t n = space.size();
  // Work guard: n^(nu+2) tuples, capped at 40^4. Refuse loudly rather than
  // truncating the enumeration.
  double work = std::pow(static_cast<double>(n), nu + 2);
  if (work > 2'560'000.0)
    throw Error("space too large for nu=" + std::to_string(nu) +
                " enumeration guard (n=" + std::to_string(n) + ", guard n^(nu+2) <= 40^4)");

  AuditReport rep;
  rep.axiom = "nu-generalized(" + std::to_string(nu) + ")";
  std::vector<size_t> tuple;
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      if (n < static_cast<size_t>(nu) + 2) continue;  // no admissible tuple
      nu_tuples(space, x, y, nu, tuple, rep);
    }
  if (n < static_cast<size_t>(nu) + 2)
    rep.notes.push_back("fewer than nu+2 points: condition holds vacuously");
  rep.pass = rep.witnesses.empty();
  return rep;
}

CoherenceReport coherence_tail_report(const std::vector<Scalar>& seq_a_an,
                                      const std::vector<Scalar>& seq_an_bn,
                                      const std::vector<Scalar>& seq_a_bn, Scalar tol,
                                      Scalar floor_level) {
  const std::vector<Scalar>* seqs[3] = {&seq_a_an, &seq_an_bn, &seq_a_bn};
  const size_t len = seq_a_an.size();
  if (len == 0) throw Error("empty witness sequences");
  if (seq_an_bn.size() != len || seq_a_bn.size() != len)
    throw Error("witness sequences must have equal length");

  CoherenceReport rep;
  rep.tol = tol;
  rep.floor_level = floor_level;
  rep.window = (len + 3) / 4;
  const size_t start = len - rep.window;
  for (int s = 0; s < 3; ++s) {
    const std::vector<Scalar>& q = *seqs[s];
    SequenceTail t{q[start], q[start], q[len - 1]};
    for (size_t i = start + 1; i < len; ++i) {
      t.max = Scalar::max(t.max, q[i]);
      t.min = Scalar::min(t.min, q[i]);
    }
    rep.tails[s] = t;
  }
  rep.flagged = rep.tails[0].max.le(tol) && rep.tails[1].max.le(tol) &&
                rep.tails[2].min.ge(floor_level);
  if (rep.flagged)
    rep.notes.push_back(
        "coherence witness violated: both approach tails vanish while the cross tail stays up");
  return rep;
}

}  // namespace metrize
