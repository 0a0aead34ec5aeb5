#include "metrize/gallery.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "metrize/chain.hpp"

namespace metrize {

namespace {

PointSet points_from_rationals(const std::vector<Rational>& coords) {
  PointSet pts;
  for (const Rational& c : coords) {
    pts.labels.push_back(rational_str(c));
    pts.coords.push_back(Scalar::exact(c));
  }
  return pts;
}

void set_pair(DistanceMatrix& m, size_t i, size_t j, Scalar v) {
  m.at(j, i) = v;
  m.at(i, j) = std::move(v);
}

Rational rat_abs(const Rational& a, const Rational& b) {
  Rational d = a - b;
  return d < 0 ? Rational(-d) : d;
}

}  // namespace

DistanceSpace gen_square_line(int n) {
  if (n < 1) throw Error("grid size must be at least 1");
  std::vector<Rational> coords;
  for (int k = 0; k <= n; ++k) {
    coords.emplace_back(k, n);
    coords.back().canonicalize();
  }
  const size_t m = coords.size();
  DistanceMatrix grid(m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      Rational diff = rat_abs(coords[i], coords[j]);
      set_pair(grid, i, j, Scalar::exact(Rational(diff * diff)));
    }
  ClaimedClass cls{SpaceKind::BMetric, Scalar::exact(2)};
  return make_space(points_from_rationals(coords), std::move(grid), cls);
}

namespace {

DistanceSpace gen_example_carrier(int N, const Scalar& otherwise) {
  if (N < 4) throw Error("truncation must be at least 4");
  if (N % 2 != 0) throw Error("truncation must be even");
  std::vector<Rational> coords{Rational(0), Rational(1)};
  for (int k = 2; k <= N; ++k) coords.emplace_back(1, k);
  auto special = [](const Rational& c) {  // {0} u {1/(2m)}
    return c == 0 || (c.get_num() == 1 && c.get_den() % 2 == 0);
  };
  const size_t m = coords.size();
  DistanceMatrix grid(m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      Scalar v;
      if ((coords[i] == 0 && coords[j] == 1) || (coords[i] == 1 && coords[j] == 0))
        v = Scalar::exact(1);
      else if (special(coords[i]) && special(coords[j]))
        v = Scalar::exact(rat_abs(coords[i], coords[j]));
      else
        v = otherwise;
      set_pair(grid, i, j, std::move(v));
    }
  ClaimedClass cls{SpaceKind::BMetric, Scalar::exact(4)};
  return make_space(points_from_rationals(coords), std::move(grid), cls);
}

}  // namespace

DistanceSpace gen_example_399(int N) { return gen_example_carrier(N, Scalar::exact(4)); }

DistanceSpace gen_example_387(int N) { return gen_example_carrier(N, Scalar::exact(1, 4)); }

LpGallery gen_lp_truncated(const Scalar& p, size_t dim,
                           const std::vector<std::vector<Scalar>>& vectors) {
  if (!p.gt(Scalar()) || !p.le(Scalar::exact(1)))
    throw Error("exponent must lie in (0, 1], got " + p.str());
  if (dim < 1) throw Error("dimension must be at least 1");
  for (const auto& v : vectors)
    if (v.size() != dim) throw Error("vector length does not match the dimension");

  const Scalar inv_p = Scalar::exact(1) / p;
  const size_t n = vectors.size();
  PointSet pts;
  for (size_t i = 0; i < n; ++i) pts.labels.push_back("v" + std::to_string(i + 1));

  DistanceMatrix grid(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Scalar sum;
      for (size_t c = 0; c < dim; ++c) {
        const Scalar& a = vectors[i][c];
        const Scalar& b = vectors[j][c];
        Scalar diff = Scalar::value_less(a, b) ? b - a : a - b;
        sum = sum + diff.pow(p);
      }
      set_pair(grid, i, j, sum.pow(inv_p));
    }
  ClaimedClass cls{SpaceKind::BMetric, Scalar::exact(2).pow(inv_p)};
  LpGallery g{make_space(std::move(pts), std::move(grid), cls),
              p / (p + Scalar::exact(1))};
  return g;
}

DistanceSpace gen_branciari4() {
  PointSet pts;
  pts.labels = {"a", "b", "c", "e"};
  DistanceMatrix grid(4);
  const Scalar two = Scalar::exact(2);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j) set_pair(grid, i, j, two);
  set_pair(grid, 0, 1, Scalar::exact(3));
  set_pair(grid, 0, 2, Scalar::exact(1));
  set_pair(grid, 1, 2, Scalar::exact(1));
  ClaimedClass cls{SpaceKind::TwoGeneralized, {}};
  return make_space(std::move(pts), std::move(grid), cls);
}

DistanceSpace gen_2gen_slow(int N) {
  if (N < 1) throw Error("truncation must be at least 1");
  std::vector<Rational> coords{Rational(0)};
  for (int k = 1; k <= N; ++k) coords.emplace_back(1, k);
  const size_t m = coords.size();
  DistanceMatrix grid(m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      bool with_zero = coords[i] == 0 || coords[j] == 0;
      Scalar v = with_zero ? Scalar::exact(Rational(coords[i] + coords[j]))
                           : Scalar::exact(2);
      set_pair(grid, i, j, std::move(v));
    }
  ClaimedClass cls{SpaceKind::TwoGeneralized, {}};
  return make_space(points_from_rationals(coords), std::move(grid), cls);
}

NoncoherentGallery gen_noncoherent(int N) {
  if (N < 1) throw Error("truncation must be at least 1");
  std::vector<Rational> coords{Rational(0)};
  for (int k = 1; k <= 2 * N + 1; ++k) coords.emplace_back(1, k);
  const size_t m = coords.size();
  auto denom = [&](size_t i) { return coords[i].get_den().get_ui(); };

  DistanceMatrix grid(m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      size_t zi = coords[i] == 0 ? i : (coords[j] == 0 ? j : m);
      size_t oi = coords[i] == 1 ? i : (coords[j] == 1 ? j : m);
      Scalar v;
      if (zi < m) {
        size_t other = zi == i ? j : i;
        v = denom(other) % 2 == 0 ? Scalar::exact(coords[other]) : Scalar::exact(1);
      } else if (oi < m) {
        size_t other = oi == i ? j : i;
        v = denom(other) % 2 == 1 ? Scalar::exact(coords[other]) : Scalar::exact(1);
      } else {
        v = Scalar::exact(rat_abs(coords[i], coords[j]));
      }
      set_pair(grid, i, j, std::move(v));
    }

  NoncoherentGallery g;
  g.space = make_space(points_from_rationals(coords), std::move(grid), {});
  for (int n = 1; n <= N; ++n) {
    g.seq_a_an.push_back(Scalar::exact(1, 2 * n));
    g.seq_an_bn.push_back(Scalar::exact(Rational(1, 2 * n) - Rational(1, 2 * n + 1)));
    g.seq_a_bn.push_back(Scalar::exact(1));
  }
  return g;
}

AuCounterexample gen_au_counterexample(int n_grid, int n_levels) {
  if (n_grid < 1) throw Error("grid size must be at least 1");
  if (n_levels < 1) throw Error("level count must be at least 1");
  std::vector<Rational> coords;
  for (int k = 0; k <= n_grid; ++k) {
    coords.emplace_back(k, n_grid);
    coords.back().canonicalize();
  }
  const size_t m = coords.size();

  AuCounterexample g;
  g.points = points_from_rationals(coords);
  g.families.universe = m;
  for (int lvl = 1; lvl <= n_levels; ++lvl) {
    FamilyLevel fl;
    fl.number = lvl;
    fl.per_point = true;
    Rational radius(2, lvl);
    for (size_t x = 0; x < m; ++x) {
      PointSubset ball(m);
      for (size_t y = 0; y < m; ++y)
        if (rat_abs(coords[x], coords[y]) < radius) ball.insert(y);
      fl.sets.push_back(std::move(ball));
    }
    g.families.levels.push_back(std::move(fl));
  }
  return g;
}

namespace {

DistanceMatrix random_symmetric(int n, uint64_t seed, long den, int lo, int hi) {
  if (n < 2) throw Error("need at least 2 points");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(lo, hi);
  DistanceMatrix grid(n);
  for (size_t i = 0; i < static_cast<size_t>(n); ++i)
    for (size_t j = i + 1; j < static_cast<size_t>(n); ++j)
      set_pair(grid, i, j, Scalar::exact(entry(rng), den));
  return grid;
}

PointSet numbered_points(int n) {
  PointSet pts;
  for (int i = 0; i < n; ++i) pts.labels.push_back("p" + std::to_string(i));
  return pts;
}

}  // namespace

DistanceSpace gen_random_metric(int n, uint64_t seed) {
  DistanceSpace raw =
      make_space(numbered_points(n), random_symmetric(n, seed, 8, 8, 64), {});
  InducedMetricReport closed = chain_metric(raw, Scalar::exact(1));
  ClaimedClass cls{SpaceKind::Metric, {}};
  return make_space(raw.points, closed.induced, cls);
}

DistanceSpace gen_random_bmetric(int n, const Scalar& q, uint64_t seed) {
  if (q.lt(Scalar::exact(1)) || q.gt(Scalar::exact(3)))
    throw Error("power must lie in [1, 3], got " + q.str());
  DistanceSpace base = gen_random_metric(n, seed);
  DistanceMatrix grid(n);
  for (size_t i = 0; i < static_cast<size_t>(n); ++i)
    for (size_t j = i + 1; j < static_cast<size_t>(n); ++j)
      set_pair(grid, i, j, base.d(i, j).pow(q));
  ClaimedClass cls{SpaceKind::BMetric, Scalar::exact(2).pow(q - Scalar::exact(1))};
  return make_space(base.points, std::move(grid), cls);
}

DistanceSpace gen_random_twogen(int n, uint64_t seed) {
  ClaimedClass cls{SpaceKind::TwoGeneralized, {}};
  return make_space(numbered_points(n), random_symmetric(n, seed, 16, 16, 47), cls);
}

RandomContraction gen_random_contraction(int n, int q, uint64_t seed) {
  if (n < 2) throw Error("need at least 2 points");
  if (q < 1 || q > 3) throw Error("power must lie in {1, 2, 3}");
  std::mt19937_64 rng(seed);
  const Rational ratios[] = {Rational(1, 4), Rational(1, 3), Rational(2, 5)};
  Rational r = ratios[std::uniform_int_distribution<int>(0, 2)(rng)];

  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<size_t> at_depth(n);  // point index holding each power of r
  for (size_t i = 0; i < static_cast<size_t>(n); ++i) at_depth[perm[i]] = i;

  std::vector<Rational> coords(n);
  for (size_t i = 0; i < static_cast<size_t>(n); ++i) {
    Rational c(1);
    for (size_t k = 0; k < perm[i]; ++k) c *= r;
    coords[i] = c;
  }

  RandomContraction g;
  DistanceMatrix grid(n);
  for (size_t i = 0; i < static_cast<size_t>(n); ++i)
    for (size_t j = i + 1; j < static_cast<size_t>(n); ++j) {
      Scalar diff = Scalar::exact(rat_abs(coords[i], coords[j]));
      set_pair(grid, i, j, diff.pow(Scalar::exact(q)));
    }
  ClaimedClass cls = q == 1 ? ClaimedClass{SpaceKind::Metric, {}}
                            : ClaimedClass{SpaceKind::BMetric,
                                           Scalar::exact(Rational(mpz_class(1) << (q - 1)))};
  g.space = make_space(points_from_rationals(coords), std::move(grid), cls);

  g.map.resize(n);
  for (size_t i = 0; i < static_cast<size_t>(n); ++i)
    g.map[i] = perm[i] + 1 < static_cast<size_t>(n) ? at_depth[perm[i] + 1] : i;
  // n = 2 collapses the only pair onto the fixed point.
  g.modulus = n == 2 ? Scalar() : Scalar::exact(r).pow(Scalar::exact(q));
  g.chain_exponent = Scalar::exact(1, q);
  return g;
}

}  // namespace metrize
