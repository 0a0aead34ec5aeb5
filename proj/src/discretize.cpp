#include "metrize/discretize.hpp"

#include <algorithm>

namespace metrize {

DistanceSpace symmetrize_f_distance(PointSet points, const DistanceMatrix& sigma,
                                    bool allow_degenerate) {
  const size_t n = points.size();
  if (sigma.size() != n) throw Error("grid size does not match label count");
  std::vector<CellViolation> bad;
  const Scalar zero;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const Scalar& v = sigma.at(i, j);
      if (i == j && !v.eq(zero)) bad.push_back({i, j, "nonzero diagonal " + v.str()});
      if (v.lt(zero)) bad.push_back({i, j, "negative entry " + v.str()});
    }
  if (!bad.empty()) throw ValidationError("asymmetric input rejected", std::move(bad));

  DistanceMatrix rho(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j) rho.at(i, j) = Scalar::max(sigma.at(i, j), sigma.at(j, i));
  return make_space(std::move(points), std::move(rho), {}, allow_degenerate);
}

ChittendenResult chittenden_discretize(const DistanceSpace& space, const ThresholdFn& phi) {
  ChittendenResult res;
  const size_t n = space.size();

  // The case split of the thresholding starts at r_1 = 1, so larger inputs
  // are brought under 1 by a recorded rescale rather than a taller ladder.
  DistanceMatrix rho = space.matrix;
  Scalar maxd = max_distance(space);
  if (maxd.gt(Scalar::exact(1))) {
    Scalar factor = Scalar::exact(1) / maxd;
    res.prescale = factor;
    res.notes.push_back("input pre-scaled by 1/" + maxd.str());
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (i != j) rho.at(i, j) = rho.at(i, j) * factor;
  }

  std::optional<Scalar> rho_min;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const Scalar& v = rho.at(i, j);
      if (v.value_sign() > 0 && (!rho_min || Scalar::value_less(v, *rho_min))) rho_min = v;
    }

  std::vector<Scalar>& r = res.ladder.values;
  r.push_back(Scalar::exact(1));
  while (rho_min && !Scalar::value_less(r.back(), *rho_min)) {
    Scalar t = phi(r.back());
    if (!t.gt(Scalar()))
      throw Error("threshold function must be positive, phi(" + r.back().str() +
                  ") = " + t.str());
    Scalar next = Scalar::min(t, r.back() * Scalar::exact(1, 2));
    if (!Scalar::value_less(next, r.back())) throw Error("radii ladder failed to descend");
    r.push_back(next);
  }

  DistanceMatrix out(n);
  bool degenerate = false;
  const Scalar half = Scalar::exact(1, 2);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const Scalar& v = rho.at(i, j);
      Scalar d;
      if (v.value_sign() == 0) {
        degenerate = true;  // axiom-I failure carried through, not hidden
      } else if (v.ge(r.front())) {
        d = Scalar::exact(1);
      } else {
        // Unique n with r_n > v >= r_{n+1}: the last rung is below every
        // positive entry, so the scan always lands.
        Scalar level = Scalar::exact(1);
        for (size_t k = 1; k < r.size(); ++k) {
          level = level * half;
          if (v.ge(r[k])) break;
        }
        d = level;
      }
      out.at(i, j) = d;
      out.at(j, i) = d;
    }
  res.output = make_space(space.points, std::move(out), {}, degenerate);
  res.notes.push_back("ladder length " + std::to_string(r.size()));
  return res;
}

namespace {

// Greatest level at which some set holds both a and b, if any.
std::optional<int> co_residence_level(const BallFamilies& fam, size_t a, size_t b) {
  std::optional<int> deepest;
  for (const FamilyLevel& lvl : fam.levels)
    for (const PointSubset& s : lvl.sets)
      if (s.contains(a) && s.contains(b)) {
        if (!deepest || lvl.number > *deepest) deepest = lvl.number;
        break;
      }
  return deepest;
}

}  // namespace

AuditReport check_au_conditions(const BallFamilies& families) {
  AuditReport rep;
  rep.axiom = "au-conditions";

  // (A) on adjacent present levels: intersecting sets one level down must
  // share a containing set one level up.
  for (size_t li = 0; li + 1 < families.levels.size(); ++li) {
    const FamilyLevel& up = families.levels[li];
    const FamilyLevel& down = families.levels[li + 1];
    if (down.number != up.number + 1) {
      rep.notes.push_back("(A) skipped between non-adjacent levels " +
                          std::to_string(up.number) + " and " + std::to_string(down.number));
      continue;
    }
    for (size_t s = 0; s < down.sets.size(); ++s)
      for (size_t t = s; t < down.sets.size(); ++t) {
        if (!down.sets[s].intersects(down.sets[t])) continue;
        bool housed = false;
        for (const PointSubset& parent : up.sets)
          if (parent.contains_all(down.sets[s]) && parent.contains_all(down.sets[t])) {
            housed = true;
            break;
          }
        if (!housed)
          rep.witnesses.push_back({{s, t},
                                   Scalar::exact(down.number),
                                   Scalar::exact(up.number),
                                   "(A) sets " + std::to_string(s) + "," + std::to_string(t) +
                                       " of level " + std::to_string(down.number) +
                                       " intersect with no common parent"});
      }
  }

  // (B): every pair must be excluded from all sets of some level.
  for (size_t a = 0; a < families.universe; ++a)
    for (size_t b = a + 1; b < families.universe; ++b) {
      bool excluded_somewhere = false;
      for (const FamilyLevel& lvl : families.levels) {
        bool together = false;
        for (const PointSubset& s : lvl.sets)
          if (s.contains(a) && s.contains(b)) {
            together = true;
            break;
          }
        if (!together) {
          excluded_somewhere = true;
          break;
        }
      }
      if (!excluded_somewhere && !families.levels.empty())
        rep.witnesses.push_back({{a, b}, Scalar::exact(1), Scalar::exact(0),
                                 "(B) pair co-resident at every level"});
    }

  rep.notes.push_back("(C) assumed, not machine-checkable");
  rep.pass = rep.witnesses.empty();
  return rep;
}

DistanceSpace au_distance(const BallFamilies& families, PointSet points) {
  const size_t n = points.size();
  if (families.universe != n) throw Error("families universe does not match label count");

  DistanceMatrix out(n);
  const Scalar half = Scalar::exact(1, 2);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      std::optional<int> deepest = co_residence_level(families, a, b);
      if (deepest && !families.levels.empty() && *deepest >= families.levels.back().number) {
        bool everywhere = true;
        for (const FamilyLevel& lvl : families.levels) {
          bool together = false;
          for (const PointSubset& s : lvl.sets)
            if (s.contains(a) && s.contains(b)) {
              together = true;
              break;
            }
          if (!together) {
            everywhere = false;
            break;
          }
        }
        if (everywhere)
          throw Error("pair (" + points.labels[a] + ", " + points.labels[b] +
                      ") co-resident at every level; separation hypothesis fails");
      }
      Scalar d = Scalar::exact(1);
      if (deepest)
        for (int k = 0; k < *deepest; ++k) d = d * half;
      out.at(a, b) = d;
      out.at(b, a) = d;
    }
  return make_space(std::move(points), std::move(out));
}

BallFamilies nw_ball_families(const DistanceSpace& space, const LocalThresholdFn& phi,
                              int levels) {
  const size_t n = space.size();
  const Scalar half = Scalar::exact(1, 2);
  auto clipped = [&](size_t x, const Scalar& eps) {
    Scalar t = phi(x, eps);
    if (!t.gt(Scalar()))
      throw Error("threshold function must be positive, phi(" + space.points.labels[x] + ", " +
                  eps.str() + ") = " + t.str());
    return Scalar::min(t, eps * half);
  };

  BallFamilies fam;
  fam.universe = n;
  std::vector<Scalar> radius(n, Scalar::exact(1));
  const int cap = levels < 0 ? 10000 : levels;
  for (int lvl = 1; lvl <= cap; ++lvl) {
    FamilyLevel fl;
    fl.number = lvl;
    fl.per_point = true;
    bool all_singleton = true;
    for (size_t x = 0; x < n; ++x) {
      PointSubset ball(n);
      for (size_t y = 0; y < n; ++y)
        if (x == y || space.d(x, y).lt(radius[x])) ball.insert(y);
      if (ball.count() > 1) all_singleton = false;
      fl.sets.push_back(std::move(ball));
    }
    fam.levels.push_back(std::move(fl));
    if (levels < 0 && all_singleton) return fam;
    for (size_t x = 0; x < n; ++x) radius[x] = clipped(x, clipped(x, radius[x]));
  }
  if (levels < 0) throw Error("ball families failed to separate within 10000 levels");
  return fam;
}

TwoGenResult two_gen_discretize(const DistanceSpace& space) {
  AuditReport two = check_nu_generalized(space, 2);
  if (!two.pass)
    throw Error("input fails the 2-generalized inequality (" +
                std::to_string(two.witnesses.size()) + " witness(es))");
  if (!degenerate_pairs(space).empty())
    throw Error("input has zero off-diagonal entries; positive distances required");

  const size_t n = space.size();
  TwoGenResult res;

  // First level whose balls {x : rho(a,x) < 1/3^e} are all singletons:
  // smallest e with 3^e * rho_min >= 1. One more level is kept so the
  // all-singleton fringe is visible in the output.
  int e = 0;
  if (std::optional<Scalar> rho_min = min_positive_distance(space)) {
    Scalar scaled = *rho_min;
    while (Scalar::value_less(scaled, Scalar::exact(1))) {
      scaled = scaled * Scalar::exact(3);
      ++e;
    }
  }
  res.n_max = e + 1;

  res.families.universe = n;
  Scalar radius = Scalar::exact(1);
  const Scalar third = Scalar::exact(1, 3);
  for (int lvl = 0; lvl <= res.n_max; ++lvl) {
    FamilyLevel fl;
    fl.number = lvl;
    fl.per_point = true;
    for (size_t a = 0; a < n; ++a) {
      PointSubset ball(n);
      for (size_t x = 0; x < n; ++x)
        if (a == x || space.d(a, x).lt(radius)) ball.insert(x);
      fl.sets.push_back(std::move(ball));
    }
    res.families.levels.push_back(std::move(fl));
    radius = radius * third;
  }

  DistanceMatrix out(n);
  const Scalar half = Scalar::exact(1, 2);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b) {
      std::optional<int> deepest = co_residence_level(res.families, a, b);
      int k = deepest ? 1 + *deepest : 0;
      Scalar d = Scalar::exact(1);
      for (int i = 0; i < k; ++i) d = d * half;
      out.at(a, b) = d;
      out.at(b, a) = d;
    }
  res.output = make_space(space.points, std::move(out));
  return res;
}

ThresholdFn make_step_threshold(std::vector<std::pair<Scalar, Scalar>> table) {
  if (table.empty()) throw Error("empty threshold table");
  std::sort(table.begin(), table.end(),
            [](const auto& a, const auto& b) { return Scalar::value_less(a.first, b.first); });
  return [table = std::move(table)](const Scalar& eps) {
    const Scalar* best = &table.front().second;
    for (const auto& [e, v] : table) {
      if (Scalar::value_less(eps, e)) break;
      best = &v;
    }
    return *best;
  };
}

}  // namespace metrize
