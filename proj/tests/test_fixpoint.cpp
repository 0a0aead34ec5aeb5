#include <doctest.h>

#include "metrize/chain.hpp"
#include "metrize/fixpoint.hpp"
#include "metrize/gallery.hpp"
#include "oracle.hpp"

using namespace metrize;

namespace {

// Orbit of 4/5: coords (4/5)^k for k = 0..K, T shifts one step deeper and
// fixes the deepest point. Under (a-b)^2 distances every adjacent pair
// contracts by exactly (4/5)^2 and no pair does worse.
DistanceSpace orbit_space(int K) {
  PointSet pts;
  std::vector<Scalar> coords;
  Scalar x = Scalar::exact(1);
  for (int k = 0; k <= K; ++k) {
    coords.push_back(x);
    pts.labels.push_back(x.str());
    x = Scalar(x * Scalar::exact(4, 5));
  }
  size_t n = coords.size();
  DistanceMatrix grid(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j) {
        Scalar gap = coords[i] - coords[j];
        grid.at(i, j) = Scalar(gap * gap);
      }
  pts.coords = coords;
  return make_space(std::move(pts), std::move(grid));
}

IndexMap shift_map(size_t n) {
  IndexMap T(n);
  for (size_t i = 0; i + 1 < n; ++i) T[i] = i + 1;
  T[n - 1] = n - 1;
  return T;
}

}  // namespace

TEST_CASE("identity has modulus one, a constant map zero") {
  DistanceSpace sp = gen_square_line(8);
  IndexMap id(sp.size()), c(sp.size(), 3);
  for (size_t i = 0; i < sp.size(); ++i) id[i] = i;
  CHECK(contraction_modulus(sp, id).rat() == Rational(1));
  CHECK(contraction_modulus(sp, c).rat() == Rational(0));
}

TEST_CASE("rounding 0.8x to the grid stalls near the origin") {
  // On any finite grid, points with 0.8x nearer to x than to the next grid
  // value map to themselves, so some pair keeps its distance: modulus 1.
  DistanceSpace sp = gen_square_line(16);
  REQUIRE(sp.points.has_coords());
  IndexMap T(sp.size());
  for (size_t i = 0; i < sp.size(); ++i) {
    Scalar target = Scalar(sp.points.coords[i] * Scalar::exact(4, 5));
    size_t best = 0;
    Scalar best_gap;
    for (size_t j = 0; j < sp.size(); ++j) {
      Scalar gap = sp.points.coords[j] - target;
      if (gap.value_sign() < 0) gap = Scalar(Scalar::exact(0) - gap);
      if (j == 0 || gap < best_gap) {
        best = j;
        best_gap = gap;
      }
    }
    T[i] = best;
  }
  CHECK(T[0] == 0);
  CHECK(T[1] == 1);  // 0.8/16 rounds back to 1/16
  CHECK(contraction_modulus(sp, T).rat() == Rational(1));
}

TEST_CASE("the shifted orbit contracts by exactly 16/25") {
  DistanceSpace sp = orbit_space(8);
  IndexMap T = shift_map(sp.size());
  CHECK(contraction_modulus(sp, T).rat() == Rational(16, 25));
}

TEST_CASE("modulus is invariant under relabeling") {
  DistanceSpace sp = orbit_space(5);
  IndexMap T = shift_map(sp.size());
  // Swap points 0 and 2 everywhere.
  size_t n = sp.size();
  std::vector<size_t> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = i;
  std::swap(perm[0], perm[2]);
  PointSet pts;
  DistanceMatrix grid(n);
  for (size_t i = 0; i < n; ++i) {
    pts.labels.push_back(sp.points.labels[perm[i]]);
    for (size_t j = 0; j < n; ++j) grid.at(i, j) = sp.d(perm[i], perm[j]);
  }
  std::vector<size_t> inv(n);
  for (size_t i = 0; i < n; ++i) inv[perm[i]] = i;
  IndexMap T2(n);
  for (size_t i = 0; i < n; ++i) T2[i] = inv[T[perm[i]]];
  DistanceSpace sp2 = make_space(std::move(pts), std::move(grid));
  CHECK(contraction_modulus(sp2, T2).rat() == Rational(16, 25));
}

TEST_CASE("modulus rejects bad maps and degenerate spaces") {
  DistanceSpace sp = gen_square_line(4);
  CHECK_THROWS_AS(contraction_modulus(sp, IndexMap{0, 1}), Error);       // wrong size
  CHECK_THROWS_AS(contraction_modulus(sp, IndexMap(sp.size(), 99)), Error);  // out of range
  std::vector<std::vector<std::string>> cells{{"0", "0"}, {"0", "0"}};
  DistanceSpace dg = oracle::make({"a", "b"}, cells, {}, true);
  CHECK_THROWS_AS(contraction_modulus(dg, IndexMap{0, 0}), Error);
}

TEST_CASE("index iteration reaches the fixed point of a constant map") {
  DistanceSpace sp = gen_square_line(8);
  IndexMap c(sp.size(), 2);
  IterationTrace tr = banach_iterate(sp, c, 5, 50);
  CHECK(tr.stop == StopReason::FixedPointExact);
  CHECK(tr.index_iterates.back() == 2);
  CHECK(tr.iterations() <= 2);
}

TEST_CASE("index iteration detects a two-cycle") {
  DistanceSpace sp = gen_square_line(4);
  IndexMap swap01{1, 0, 2, 3, 4};
  swap01.resize(sp.size());
  for (size_t i = 2; i < sp.size(); ++i) swap01[i] = i;
  IterationTrace tr = banach_iterate(sp, swap01, 0, 50);
  CHECK(tr.stop == StopReason::CycleDetected);
}

TEST_CASE("index iteration on the shifted orbit walks to the bottom") {
  DistanceSpace sp = orbit_space(6);
  IterationTrace tr = banach_iterate(sp, shift_map(sp.size()), 0, 50);
  CHECK(tr.stop == StopReason::FixedPointExact);
  CHECK(tr.index_iterates.back() == sp.size() - 1);
  CHECK(tr.iterations() == sp.size() - 1);
  CHECK(tr.lambda_hat.rat() == Rational(16, 25));
}

TEST_CASE("affine iteration stops on the cauchy tolerance in exact mode") {
  AffineMap T{Scalar::exact(4, 5), Scalar::exact(0), Scalar::exact(0), Scalar::exact(1),
              CoordDistance::Pow2};
  IterationTrace tr = banach_iterate(T, Scalar::exact(1), Scalar::exact(1, 1000000), 200);
  CHECK(tr.stop == StopReason::CauchyTol);
  CHECK(tr.coordinate_mode);
  CHECK(tr.lambda_hat.rat() == Rational(16, 25));
  CHECK(tr.rule_factor.rat() == Rational(16, 25));
  // Squared-gap steps shrink by (4/5)^2 each iterate.
  for (size_t j = 1; j < tr.step_dists.size(); ++j)
    CHECK(Scalar(tr.step_dists[j] / tr.step_dists[j - 1]).rat() == Rational(16, 25));
}

TEST_CASE("affine iteration seeded at the fixed point stops at once") {
  AffineMap T{Scalar::exact(1, 2), Scalar::exact(1, 2), Scalar::exact(0), Scalar::exact(1),
              CoordDistance::Abs};
  IterationTrace tr = banach_iterate(T, Scalar::exact(1), Scalar::exact(1, 1000), 50);
  CHECK(tr.stop == StopReason::FixedPointExact);
  CHECK(tr.iterations() == 0);
}

TEST_CASE("affine map must be closed on its interval") {
  AffineMap T{Scalar::exact(2), Scalar::exact(0), Scalar::exact(0), Scalar::exact(1),
              CoordDistance::Abs};
  CHECK_THROWS_AS(banach_iterate(T, Scalar::exact(1, 2), Scalar::exact(1, 100), 10), Error);
  AffineMap ok{Scalar::exact(1, 2), Scalar::exact(0), Scalar::exact(0), Scalar::exact(1),
               CoordDistance::Abs};
  CHECK_THROWS_AS(banach_iterate(ok, Scalar::exact(2), Scalar::exact(1, 100), 10), Error);
}

TEST_CASE("float tolerance below cmp_tol never triggers and max_iters reports") {
  AffineMap T{Scalar::real(0.8), Scalar::real(0), Scalar::real(0), Scalar::real(1),
              CoordDistance::Pow2};
  IterationTrace tr = banach_iterate(T, Scalar::real(1), Scalar::real(1e-12), 70);
  CHECK(tr.stop == StopReason::MaxIters);
  CHECK(tr.iterations() == 70);
  CHECK(tr.step_dists.back().value() <= 1e-6);
  CHECK(tr.lambda_hat.value() == doctest::Approx(0.64).epsilon(1e-9));
}

TEST_CASE("tabulated orbits stay on the grid") {
  TabulatedMap T;
  T.grid = {Scalar::exact(0), Scalar::exact(1, 2), Scalar::exact(1)};
  T.image = {Scalar::exact(0), Scalar::exact(0), Scalar::exact(1, 2)};
  IterationTrace tr = banach_iterate(T, Scalar::exact(1), Scalar::exact(1, 1000), 20);
  CHECK(tr.stop == StopReason::FixedPointExact);
  CHECK(tr.coord_iterates.back().rat() == Rational(0));

  TabulatedMap off;
  off.grid = {Scalar::exact(0), Scalar::exact(1)};
  off.image = {Scalar::exact(0), Scalar::exact(1, 3)};  // 1/3 is not a grid value
  CHECK_THROWS_AS(banach_iterate(off, Scalar::exact(1), Scalar::exact(1, 1000), 20), Error);
  CHECK_THROWS_AS(banach_iterate(T, Scalar::exact(1, 3), Scalar::exact(1, 1000), 20), Error);
}

TEST_CASE("a contraction of D stays one of the chain metric") {
  DistanceSpace sp = orbit_space(7);
  IndexMap T = shift_map(sp.size());
  AuditReport r = induced_contraction_check(sp, T, Scalar::exact(1, 2));
  CHECK(r.pass);
  AuditReport r1 = induced_contraction_check(sp, T, Scalar::exact(1));
  CHECK(r1.pass);
}

TEST_CASE("constant maps pass the induced check trivially") {
  DistanceSpace sp = gen_square_line(8);
  IndexMap c(sp.size(), 0);
  CHECK(induced_contraction_check(sp, c, Scalar::exact(1, 2)).pass);
}

TEST_CASE("induced check refuses a non-contraction") {
  DistanceSpace sp = gen_square_line(8);
  IndexMap id(sp.size());
  for (size_t i = 0; i < sp.size(); ++i) id[i] = i;
  CHECK_THROWS_AS(induced_contraction_check(sp, id, Scalar::exact(1, 2)), Error);
}

TEST_CASE("random contractions keep the sandwich property in the chain metric") {
  for (uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
    RandomContraction rc = gen_random_contraction(7, 2, seed);
    REQUIRE(rc.modulus < Scalar::exact(1));
    AuditReport r = induced_contraction_check(rc.space, rc.map, rc.chain_exponent);
    CHECK(r.pass);
  }
}

TEST_CASE("geometric decay bounds the affine trace") {
  AffineMap T{Scalar::exact(4, 5), Scalar::exact(0), Scalar::exact(0), Scalar::exact(1),
              CoordDistance::Pow2};
  IterationTrace tr = banach_iterate(T, Scalar::exact(1), Scalar::exact(1, 1 << 20), 100);
  CHECK(geometric_decay_check(tr, Scalar::exact(16, 25)).pass);
  // A slower claimed rate also passes...
  CHECK(geometric_decay_check(tr, Scalar::exact(7, 10)).pass);
  // ...but a faster one fails.
  CHECK(!geometric_decay_check(tr, Scalar::exact(1, 2)).pass);
}

TEST_CASE("geometric decay tolerates stalls only within slack") {
  IterationTrace tr;
  tr.step_dists = {Scalar::exact(1), Scalar::exact(9, 10), Scalar::exact(9, 10)};
  CHECK(!geometric_decay_check(tr, Scalar::exact(9, 10)).pass);
  tr.step_dists = {Scalar::exact(1), Scalar::exact(9, 10), Scalar::exact(81, 100)};
  CHECK(geometric_decay_check(tr, Scalar::exact(9, 10)).pass);
}

TEST_CASE("geometric decay handles short traces and bad lambda") {
  IterationTrace tr;
  tr.step_dists = {Scalar::exact(1)};
  AuditReport r = geometric_decay_check(tr, Scalar::exact(1, 2));
  CHECK(r.pass);
  CHECK(!r.notes.empty());
  CHECK_THROWS_AS(geometric_decay_check(tr, Scalar::exact(-1, 2)), Error);
}