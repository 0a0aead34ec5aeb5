#pragma once

#include <string>
#include <vector>

#include "metrize/audit.hpp"
#include "metrize/space.hpp"

namespace metrize {

// Total self-map on point indices: T[i] is the image of point i.
using IndexMap = std::vector<size_t>;

// Largest ratio D(Tx,Ty)/D(x,y) over pairs of distinct points; T is a
// lambda-contraction iff lambda >= this. Throws on degenerate spaces.
Scalar contraction_modulus(const DistanceSpace& space, const IndexMap& T);

// Distance rule for coordinate iterates: |a-b| or (a-b)^2.
enum class CoordDistance { Abs, Pow2 };
std::string coord_distance_str(CoordDistance d);

// x -> lambda*x + offset on the closed interval [lo, hi]; the map must be
// closed on it (checked at the endpoints).
struct AffineMap {
  Scalar lambda, offset;
  Scalar lo, hi;
  CoordDistance dist = CoordDistance::Abs;
};

// Coordinate map given pointwise: grid[i] -> image[i]. Every image value
// must itself be a grid value, so orbits stay inside the table.
struct TabulatedMap {
  std::vector<Scalar> grid, image;
  CoordDistance dist = CoordDistance::Abs;
};

enum class StopReason { FixedPointExact, CauchyTol, CycleDetected, MaxIters };
std::string stop_reason_str(StopReason r);

struct IterationTrace {
  bool coordinate_mode = false;
  std::vector<size_t> index_iterates;  // index mode (and tabulated maps)
  std::vector<Scalar> coord_iterates;  // coordinate modes
  std::vector<Scalar> step_dists;      // one per transition
  Scalar lambda_hat;    // largest observed consecutive step ratio
  Scalar rule_factor;   // contraction factor of an affine map in its rule
  StopReason stop = StopReason::MaxIters;
  std::vector<std::string> notes;

  size_t iterations() const { return step_dists.size(); }
};

// Orbit x, Tx, T^2 x, ... until an exact fixed point, a revisited value
// (cycle), the step distance dropping below tol (coordinate modes; the
// comparison is tolerance-aware), or max_iters. Exhausting max_iters is a
// reported stop reason, not an error.
IterationTrace banach_iterate(const DistanceSpace& space, const IndexMap& T, size_t x0,
                              int max_iters);
IterationTrace banach_iterate(const AffineMap& T, const Scalar& x0, const Scalar& tol,
                              int max_iters);
IterationTrace banach_iterate(const TabulatedMap& T, const Scalar& x0, const Scalar& tol,
                              int max_iters);

// Verifies d(Tx,Ty) <= modulus^p * d(x,y) for all pairs, where d is the
// chain metric with exponent p: a contraction in D stays one in d, with the
// factor raised to p. Throws when the modulus is not below 1.
AuditReport induced_contraction_check(const DistanceSpace& space, const IndexMap& T,
                                      const Scalar& p);

// Verifies step_dists[j] <= lambda^j * step_dists[0] * (1 + slack) for all
// j >= 1.
AuditReport geometric_decay_check(const IterationTrace& trace, const Scalar& lambda,
                                  double slack = 1e-12);

}  // namespace metrize
