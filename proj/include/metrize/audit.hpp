#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "metrize/space.hpp"

namespace metrize {

// One inequality failure: the point tuple it happened at, and the two sides
// of the violated inequality (lhs exceeded rhs).
struct AuditWitness {
  std::vector<size_t> points;
  Scalar lhs, rhs;
  std::string note;
};

struct AuditReport {
  std::string axiom;
  bool pass = true;
  std::vector<AuditWitness> witnesses;
  std::optional<Scalar> k_min;
  std::vector<std::string> notes;
};

// D(x,z) <= D(x,y) + D(y,z) over all triples of distinct points.
AuditReport check_triangle(const DistanceSpace& space);

// Least K with D(x,z) <= K * (D(x,y) + D(y,z)) over all ordered triples with
// x != z and y outside {x, z}, floored at 1. The space is a b-metric with
// coefficient K iff K >= this value. Fewer than 3 points: returns 1.
Scalar min_b_coefficient(const DistanceSpace& space);
AuditReport audit_b_coefficient(const DistanceSpace& space);

// D(x,z) <= 2 * max(D(x,y), D(y,z)) over all triples. On finite data the
// strict reading (quantified over all positive thresholds) is equivalent;
// the flag only relabels the report. See the note in the implementation.
AuditReport check_generalized_triangle(const DistanceSpace& space, bool strict = false);

using ThresholdFn = std::function<Scalar(const Scalar&)>;

// For every eps in the grid: D(x,y) < phi(eps) and D(y,z) < phi(eps) imply
// D(x,z) <= eps. Empty grid defaults to the distinct off-diagonal values.
AuditReport check_uniform_regularity(const DistanceSpace& space, const ThresholdFn& phi,
                                     std::vector<Scalar> eps_grid = {});

// D(x,y) <= D(x,t1) + D(t1,t2) + ... + D(t_nu,y) over all tuples of nu
// pairwise-distinct points outside {x, y}. Refuses (throws) when the
// enumeration would exceed the work guard (n <= 40 for nu = 2).
AuditReport check_nu_generalized(const DistanceSpace& space, int nu);

struct SequenceTail {
  Scalar max, min, last;
};

// Tail statistics over the final quarter of three witness sequences, plus
// the non-coherence flag: first two tails entirely below tol while the third
// stays at or above floor_level.
struct CoherenceReport {
  size_t window = 0;
  SequenceTail tails[3];
  bool flagged = false;
  Scalar tol, floor_level;
  std::vector<std::string> notes;
};

CoherenceReport coherence_tail_report(const std::vector<Scalar>& seq_a_an,
                                      const std::vector<Scalar>& seq_an_bn,
                                      const std::vector<Scalar>& seq_a_bn,
                                      Scalar tol = Scalar::exact(1, 50),
                                      Scalar floor_level = Scalar::exact(1, 2));

}  // namespace metrize
