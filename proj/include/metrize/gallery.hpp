#pragma once

#include <cstdint>
#include <vector>

#include "metrize/families.hpp"
#include "metrize/fixpoint.hpp"
#include "metrize/space.hpp"

namespace metrize {

// Every generator is deterministic: identical parameters (and seed, where
// one exists) produce identical matrices.

// Grid {k/n : k = 0..n} with D = |x-y|^2, the standard squared line.
DistanceSpace gen_square_line(int n);

// Carrier {0, 1} u {1/k : 2 <= k <= N}, N even. D(0,1) = 1; D = |x-y| when
// both points lie in {0} u {1/(2m)}; otherwise 4.
DistanceSpace gen_example_399(int N);

// Same carrier and cases, with 1/4 in place of 4.
DistanceSpace gen_example_387(int N);

struct LpGallery {
  DistanceSpace space;
  Scalar companion_exponent;  // q = p/(p+1); the space to the q is a metric
};

// D(x,y) = (sum |x_i - y_i|^p)^(1/p) over dim coordinates, 0 < p <= 1.
LpGallery gen_lp_truncated(const Scalar& p, size_t dim,
                           const std::vector<std::vector<Scalar>>& vectors);

// {a,b,c,e} with rho(a,b) = 3, rho(a,c) = rho(b,c) = 1, 2 otherwise: passes
// the 2-generalized inequality, fails the triangle one.
DistanceSpace gen_branciari4();

// {0} u {1/n : 1 <= n <= N} with rho(0, 1/n) = 1/n and 2 otherwise.
DistanceSpace gen_2gen_slow(int N);

struct NoncoherentGallery {
  DistanceSpace space;
  // Witness prefixes for n = 1..N: rho(0, 1/2n), rho(1/2n, 1/(2n+1)),
  // rho(0, 1/(2n+1)) — the first two vanish while the third stays at 1.
  std::vector<Scalar> seq_a_an, seq_an_bn, seq_a_bn;
};

// Carrier {0} u {1/k : 1 <= k <= 2N+1}. rho(0, 1/2n) = 1/2n;
// rho(1, 1/(2n+1)) = 1/(2n+1); rho(0, odd) = 1; rho(1, even) = 1;
// |x-y| otherwise.
NoncoherentGallery gen_noncoherent(int N);

struct AuCounterexample {
  PointSet points;
  BallFamilies families;
};

// Grid {k/n_grid} with level-n family the open balls of radius 2/n in
// |x-y|, n = 1..n_levels; feeds set_chain_distance.
AuCounterexample gen_au_counterexample(int n_grid, int n_levels);

// Shortest-path closure of a symmetric grid with entries k/8, k in [8,64].
DistanceSpace gen_random_metric(int n, uint64_t seed);

// gen_random_metric raised entrywise to q in [1,3]: a b-metric with
// coefficient at most 2^(q-1).
DistanceSpace gen_random_bmetric(int n, const Scalar& q, uint64_t seed);

// Symmetric entries in [1, 3): the 2-generalized inequality holds outright
// (any three legs sum to at least 3, above every entry).
DistanceSpace gen_random_twogen(int n, uint64_t seed);

struct RandomContraction {
  DistanceSpace space;    // coords r^0 > r^1 > ... with D = |x-y|^q
  IndexMap map;           // orbit shift; the smallest coordinate is fixed
  Scalar modulus;         // r^q, attained by adjacent orbit pairs
  Scalar chain_exponent;  // 1/q, the snowflake exponent of 2^(q-1)
};

// Geometric orbit under a seeded relabeling: r drawn from {1/4, 1/3, 2/5},
// point i at coordinate r^(perm(i)), map i -> the next power, deepest power
// fixed. q in {1, 2, 3} keeps every entry exact.
RandomContraction gen_random_contraction(int n, int q, uint64_t seed);

}  // namespace metrize
