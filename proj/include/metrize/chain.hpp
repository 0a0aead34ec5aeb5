#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metrize/audit.hpp"
#include "metrize/families.hpp"
#include "metrize/space.hpp"

namespace metrize {

// Verdicts for one pair against a lower/upper envelope of the induced value.
struct PairBounds {
  Scalar lower, upper;
  bool lower_ok = true, upper_ok = true;
};

// Output of chain_metric: the shortest-path distance d over edge weights
// D^p, with per-pair envelope verdicts (lower = D^p/4, upper = D^p) and the
// pairs where d collapsed to zero.
struct InducedMetricReport {
  PointSet points;
  Scalar exponent;
  DistanceMatrix induced;
  std::vector<std::pair<size_t, size_t>> degenerate;  // i < j with d = 0
  std::vector<PairBounds> bounds;                     // row-major n*n
  bool is_metric = false;
  std::vector<std::string> notes;

  const Scalar& d(size_t i, size_t j) const { return induced.at(i, j); }
  const PairBounds& bound(size_t i, size_t j) const { return bounds[i * induced.size() + j]; }
  DistanceSpace to_space() const;
};

// d(x,y) = min over vertex sequences x = x_1, ..., x_m = y of
// sum D(x_i, x_{i+1})^p, as an all-pairs shortest path over the complete
// graph with edge weights D^p. On a finite carrier the infimum over
// arbitrary chains equals this simple-path minimum: weights are
// nonnegative, so dropping the cycle between two visits of a repeated
// vertex never increases the sum. Exact in rational mode when p = 1.
InducedMetricReport chain_metric(const DistanceSpace& space, const Scalar& p);

// The p in (0, 1] with (2K)^p = 2, i.e. log 2 / log(2K): an exact rational
// 1/m when 2K = 2^m, float otherwise. K = 1 gives p = 1.
Scalar snowflake_exponent(const Scalar& K);

enum class SandwichRegime { FrinkIV, PS, AIN };

std::string regime_str(SandwichRegime r);
std::optional<SandwichRegime> regime_parse(std::string_view text);

struct SandwichPair {
  size_t i = 0, j = 0;
  Scalar lower, value, upper;
  bool lower_ok = true, upper_ok = true;
};

struct SandwichReport {
  SandwichRegime regime = SandwichRegime::FrinkIV;
  Scalar exponent;  // exponent of the bound envelope
  Scalar factor;    // lower-bound factor: 1/4 (FrinkIV, PS) or 1/2 (AIN)
  bool hypothesis_met = false;
  bool lower_all = true, upper_all = true;
  std::vector<SandwichPair> pairs;  // unordered pairs i < j
  std::vector<std::string> notes;
};

// Checks factor * D^e <= d <= D^e entrywise against the regime's envelope:
//   FrinkIV: e = 1, factor 1/4, hypothesis = space passes the generalized
//            triangle check and the report used p = 1;
//   PS:      e = report exponent, factor 1/4, hypothesis = the exponent is
//            the snowflake exponent of some K >= min_b_coefficient;
//   AIN:     e = beta (defaults to snowflake_exponent(min_b_coefficient)),
//            factor 1/2, hypothesis = the report used that beta.
// Unmet hypotheses are reported, never silently skipped; both bounds are
// evaluated regardless. The upper bound holds for every input (single-edge
// chain); a lower-bound failure with hypotheses met is a genuine finding.
SandwichReport verify_sandwich(const DistanceSpace& space, const InducedMetricReport& report,
                               SandwichRegime regime,
                               std::optional<Scalar> beta = std::nullopt);

// Verifies D(x,y) <= 2 D(x,c_1) + 4 sum D(c_i, c_{i+1}) + 2 D(c_m, y) over
// chains of 1..max_chain_len intermediate points. Exhaustive when n <= 8
// and max_chain_len <= 4; otherwise samples 20000 chains from the seed.
AuditReport frink_chain_inequality_check(const DistanceSpace& space, int max_chain_len,
                                         uint64_t seed = 0);

// a-to-b chains of sets: consecutive sets intersect, the first contains a,
// the last contains b, and the chain costs the sum of 1/2^level over its
// sets. Note d(a,a) is the cheapest set containing a, not 0.
struct SetChainProblem {
  BallFamilies families;
  size_t a = 0, b = 0;
};

// Minimum chain cost, as a shortest path on the set-incidence graph with
// node weights 1/2^level. Empty optional: a or b is covered by no set, or
// no chain connects them.
std::optional<Scalar> set_chain_distance(const SetChainProblem& problem);

}  // namespace metrize
