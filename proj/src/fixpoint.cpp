#include "metrize/fixpoint.hpp"

#include <set>

#include "metrize/chain.hpp"

namespace metrize {

namespace {

void validate_index_map(const DistanceSpace& space, const IndexMap& T) {
  if (T.size() != space.size()) throw Error("index map size does not match the space");
  for (size_t v : T)
    if (v >= space.size()) throw Error("index map image out of range");
}

Scalar coord_dist(CoordDistance rule, const Scalar& a, const Scalar& b) {
  Scalar diff = Scalar::value_less(a, b) ? b - a : a - b;
  return rule == CoordDistance::Pow2 ? diff * diff : diff;
}

// Largest consecutive ratio step[j+1]/step[j]; zero-length or stalled
// prefixes contribute nothing.
Scalar max_step_ratio(const std::vector<Scalar>& steps) {
  Scalar best;
  for (size_t j = 0; j + 1 < steps.size(); ++j) {
    if (steps[j].value_sign() == 0) continue;
    Scalar r = steps[j + 1] / steps[j];
    best = Scalar::max(best, r);
  }
  return best;
}

}  // namespace

Scalar contraction_modulus(const DistanceSpace& space, const IndexMap& T) {
  validate_index_map(space, T);
  if (!degenerate_pairs(space).empty())
    throw Error("space has distinct points at distance 0; modulus undefined");
  Scalar best;
  const size_t n = space.size();
  for (size_t x = 0; x < n; ++x)
    for (size_t y = x + 1; y < n; ++y)
      best = Scalar::max(best, space.d(T[x], T[y]) / space.d(x, y));
  return best;
}

std::string coord_distance_str(CoordDistance d) {
  return d == CoordDistance::Pow2 ? "pow2" : "abs";
}

std::string stop_reason_str(StopReason r) {
  switch (r) {
    case StopReason::FixedPointExact: return "fixed-point-exact";
    case StopReason::CauchyTol: return "cauchy-tol";
    case StopReason::CycleDetected: return "cycle-detected";
    case StopReason::MaxIters: return "max-iters";
  }
  throw Error("unknown stop reason");
}

IterationTrace banach_iterate(const DistanceSpace& space, const IndexMap& T, size_t x0,
                              int max_iters) {
  validate_index_map(space, T);
  if (x0 >= space.size()) throw Error("start index out of range");
  if (max_iters < 1) throw Error("max_iters must be positive");

  IterationTrace tr;
  tr.index_iterates.push_back(x0);
  std::set<size_t> visited{x0};
  size_t x = x0;
  for (;;) {
    size_t next = T[x];
    if (next == x) {
      tr.stop = StopReason::FixedPointExact;
      break;
    }
    tr.step_dists.push_back(space.d(x, next));
    tr.index_iterates.push_back(next);
    if (visited.count(next)) {
      tr.stop = StopReason::CycleDetected;
      break;
    }
    visited.insert(next);
    x = next;
    if (static_cast<int>(tr.iterations()) >= max_iters) {
      tr.stop = StopReason::MaxIters;
      break;
    }
  }
  tr.lambda_hat = max_step_ratio(tr.step_dists);
  return tr;
}

namespace {

struct CoordStepper {
  CoordDistance rule;
  const Scalar& tol;
  IterationTrace& tr;
  std::set<Rational> seen_exact;
  std::set<double> seen_float;

  bool seen(const Scalar& v) {
    if (v.is_exact()) return !seen_exact.insert(v.rat()).second;
    return !seen_float.insert(v.value()).second;
  }

  // Returns true to keep iterating.
  bool advance(const Scalar& x, const Scalar& next, int max_iters) {
    if (Scalar::value_cmp(next, x) == 0) {
      tr.stop = StopReason::FixedPointExact;
      return false;
    }
    Scalar step = coord_dist(rule, x, next);
    tr.step_dists.push_back(step);
    tr.coord_iterates.push_back(next);
    if (seen(next)) {
      tr.stop = StopReason::CycleDetected;
      return false;
    }
    if (step.lt(tol)) {
      tr.stop = StopReason::CauchyTol;
      return false;
    }
    if (static_cast<int>(tr.iterations()) >= max_iters) {
      tr.stop = StopReason::MaxIters;
      return false;
    }
    return true;
  }
};

}  // namespace

IterationTrace banach_iterate(const AffineMap& T, const Scalar& x0, const Scalar& tol,
                              int max_iters) {
  if (T.hi.lt(T.lo)) throw Error("empty domain interval");
  if (Scalar::value_cmp(tol, Scalar::exact(0)) <= 0) throw Error("tol must be positive");
  if (max_iters < 1) throw Error("max_iters must be positive");
  auto inside = [&](const Scalar& v) { return v.ge(T.lo) && v.le(T.hi); };
  auto image = [&](const Scalar& v) { return T.lambda * v + T.offset; };
  if (!inside(image(T.lo)) || !inside(image(T.hi)))
    throw Error("affine map is not closed on [" + T.lo.str() + ", " + T.hi.str() + "]");
  if (!inside(x0)) throw Error("start point outside the domain interval");

  IterationTrace tr;
  tr.coordinate_mode = true;
  tr.coord_iterates.push_back(x0);
  tr.rule_factor = coord_dist(T.dist, T.lambda, Scalar());
  tr.notes.push_back("closed interval assumed complete");
  if (T.dist == CoordDistance::Pow2 && tr.rule_factor.gt(Scalar::exact(1, 2)))
    tr.notes.push_back("rule factor " + tr.rule_factor.str() +
                       " exceeds 1/K = 1/2 for the squared rule; outside the K-scaled "
                       "contraction range, inside the plain one");

  CoordStepper st{T.dist, tol, tr, {}, {}};
  st.seen(x0);
  Scalar x = x0;
  while (true) {
    Scalar next = image(x);
    if (!st.advance(x, next, max_iters)) break;
    x = next;
  }
  tr.lambda_hat = max_step_ratio(tr.step_dists);
  return tr;
}

IterationTrace banach_iterate(const TabulatedMap& T, const Scalar& x0, const Scalar& tol,
                              int max_iters) {
  if (T.grid.empty() || T.grid.size() != T.image.size())
    throw Error("tabulated map needs equal-length nonempty grid and image");
  if (Scalar::value_cmp(tol, Scalar::exact(0)) <= 0) throw Error("tol must be positive");
  if (max_iters < 1) throw Error("max_iters must be positive");
  auto locate = [&](const Scalar& v) -> size_t {
    for (size_t i = 0; i < T.grid.size(); ++i)
      if (Scalar::value_cmp(T.grid[i], v) == 0) return i;
    throw Error("value " + v.str() + " is not a grid point");
  };
  for (const Scalar& y : T.image) locate(y);  // closure on the table

  IterationTrace tr;
  tr.coordinate_mode = true;
  size_t xi = locate(x0);
  tr.coord_iterates.push_back(T.grid[xi]);
  tr.index_iterates.push_back(xi);

  CoordStepper st{T.dist, tol, tr, {}, {}};
  st.seen(T.grid[xi]);
  while (true) {
    size_t ni = locate(T.image[xi]);
    if (!st.advance(T.grid[xi], T.grid[ni], max_iters)) break;
    tr.index_iterates.push_back(ni);
    xi = ni;
  }
  if (tr.stop != StopReason::FixedPointExact &&
      tr.index_iterates.size() < tr.coord_iterates.size())
    tr.index_iterates.push_back(locate(tr.coord_iterates.back()));
  tr.lambda_hat = max_step_ratio(tr.step_dists);
  return tr;
}

AuditReport induced_contraction_check(const DistanceSpace& space, const IndexMap& T,
                                      const Scalar& p) {
  Scalar modulus = contraction_modulus(space, T);
  if (!modulus.lt(Scalar::exact(1)))
    throw Error("modulus " + modulus.str() + " is not below 1");

  InducedMetricReport rep = chain_metric(space, p);
  Scalar factor = modulus.pow(p);

  AuditReport out;
  out.axiom = "induced-contraction";
  out.notes.push_back("modulus " + modulus.str());
  out.notes.push_back("induced factor " + factor.str());
  const size_t n = space.size();
  for (size_t x = 0; x < n; ++x)
    for (size_t y = x + 1; y < n; ++y) {
      Scalar rhs = factor * rep.d(x, y);
      if (rep.d(T[x], T[y]).gt(rhs))
        out.witnesses.push_back({{x, y}, rep.d(T[x], T[y]), rhs, ""});
    }
  out.pass = out.witnesses.empty();
  return out;
}

AuditReport geometric_decay_check(const IterationTrace& trace, const Scalar& lambda,
                                  double slack) {
  if (lambda.lt(Scalar())) throw Error("negative decay factor");
  AuditReport rep;
  rep.axiom = "geometric-decay";
  const std::vector<Scalar>& steps = trace.step_dists;
  if (steps.size() < 2) {
    rep.pass = true;
    rep.notes.push_back("fewer than 2 steps; nothing to compare");
    return rep;
  }
  const Scalar margin = Scalar::exact(Rational(1) + Rational(slack));
  Scalar bound = steps[0] * margin;
  for (size_t j = 1; j < steps.size(); ++j) {
    bound = bound * lambda;
    if (steps[j].gt(bound))
      rep.witnesses.push_back({{j}, steps[j], bound, "step " + std::to_string(j)});
  }
  rep.pass = rep.witnesses.empty();
  return rep;
}

}  // namespace metrize
