#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metrize/audit.hpp"
#include "metrize/families.hpp"
#include "metrize/space.hpp"

namespace metrize {

// rho = entrywise max of sigma and its transpose. sigma must have a zero
// diagonal and nonnegative entries but need not be symmetric; violations
// are enumerated per cell.
DistanceSpace symmetrize_f_distance(PointSet points, const DistanceMatrix& sigma,
                                    bool allow_degenerate = false);

// Descending radii r_1 = 1, r_{n+1} = psi(r_n) with psi(e) = min(phi(e), e/2),
// so r_{n+1} <= r_n / 2 always.
struct RadiiLadder {
  std::vector<Scalar> values;
  std::string generator = "psi";
};

struct ChittendenResult {
  RadiiLadder ladder;
  DistanceSpace output;
  std::optional<Scalar> prescale;  // factor applied to the input when max > 1
  std::vector<std::string> notes;
};

// Thresholds a uniformly regular distance into dyadic levels: D(x,y) = 1
// when rho(x,y) >= 1, else 1/2^n for the unique n with r_n > rho(x,y) >=
// r_{n+1}. The ladder stops at the first rung below the minimal positive
// distance. Inputs with max > 1 are pre-scaled by 1/max first (recorded).
ChittendenResult chittenden_discretize(const DistanceSpace& space, const ThresholdFn& phi);

// Verifies (A): two intersecting sets on level n share a containing set on
// level n-1 (checked for adjacent present levels), and (B): every point
// pair is excluded from all sets of some level. (C) — the families generate
// the topology — has no finite-data counterpart and is recorded as assumed.
AuditReport check_au_conditions(const BallFamilies& families);

// D(a,b) = 1/2^n with n the greatest level some set of which contains both
// a and b; 1 when no level does. Throws when a pair is co-resident at every
// level (the level max would be meaningless on unbounded families).
DistanceSpace au_distance(const BallFamilies& families, PointSet points);

using LocalThresholdFn = std::function<Scalar(size_t, const Scalar&)>;

// Per-point radii r_1(x) = 1, r_{n+1}(x) = psi(x, r_n(x)) with
// psi(x, e) = phi'(x, phi'(x, e)) and phi'(x, e) = min(phi(x, e), e/2);
// level n holds the strict balls V_n(x) = {y : rho(x,y) < r_n(x)}.
// levels = -1 descends until every ball is a singleton.
BallFamilies nw_ball_families(const DistanceSpace& space, const LocalThresholdFn& phi,
                              int levels = -1);

struct TwoGenResult {
  BallFamilies families;  // levels 0..n_max of strict balls U_n(a), radius 1/3^n
  DistanceSpace output;
  int n_max = 0;
};

// D(a,b) = 1/2^k with k = 1 + the greatest n at which some U_n(y) contains
// both a and b, or k = 0 when none does. Co-residence is antitone in the
// level (U_{n+1}(y) is contained in U_n(y)), so scanning up to the first
// all-singleton level is exhaustive. Requires the 2-generalized inequality
// (checked, with its size guard) and positive off-diagonal entries.
TwoGenResult two_gen_discretize(const DistanceSpace& space);

// Step interpolation of a tabulated threshold: the value at the greatest
// grid point <= eps, or the first value when eps precedes the grid.
ThresholdFn make_step_threshold(std::vector<std::pair<Scalar, Scalar>> table);

}  // namespace metrize
