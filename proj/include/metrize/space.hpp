#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metrize/scalar.hpp"

namespace metrize {

struct PointSet {
  std::vector<std::string> labels;
  std::vector<Scalar> coords;  // optional; empty, or one coordinate per label

  size_t size() const { return labels.size(); }
  bool has_coords() const { return !coords.empty(); }
  std::optional<size_t> find(std::string_view label) const;
};

enum class SpaceKind {
  RawDistance,
  Metric,
  BMetric,
  TwoGeneralized,
  NuGeneralized,
  FDistance,
  CFMetric,
};

// What the producer of a space claims about it. Audits re-derive the truth;
// the tag is carried, not trusted.
struct ClaimedClass {
  SpaceKind kind = SpaceKind::RawDistance;
  Scalar param;  // K for b-metric, nu for nu-generalized; unused otherwise

  std::string str() const;
  static ClaimedClass parse(std::string_view text);
};

class DistanceMatrix {
public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(size_t n) : n_(n), cells_(n * n) {}

  size_t size() const { return n_; }
  const Scalar& at(size_t i, size_t j) const { return cells_[i * n_ + j]; }
  Scalar& at(size_t i, size_t j) { return cells_[i * n_ + j]; }

private:
  size_t n_ = 0;
  std::vector<Scalar> cells_;
};

struct CellViolation {
  size_t row = 0, col = 0;
  std::string reason;
};

// Carries every violating cell, not just the first.
class ValidationError : public Error {
public:
  ValidationError(const std::string& header, std::vector<CellViolation> cells);
  const std::vector<CellViolation>& cells() const { return cells_; }

private:
  std::vector<CellViolation> cells_;
};

struct DistanceSpace {
  PointSet points;
  DistanceMatrix matrix;
  ClaimedClass claimed;
  bool allow_degenerate = false;

  size_t size() const { return points.size(); }
  const Scalar& d(size_t i, size_t j) const { return matrix.at(i, j); }
};

// Validates and assembles a space: square symmetric grid, zero diagonal,
// nonnegative entries, and (unless allow_degenerate) no zero off-diagonal
// entries. Throws ValidationError enumerating every violating cell.
DistanceSpace make_space(PointSet points, DistanceMatrix matrix, ClaimedClass claimed = {},
                         bool allow_degenerate = false);

// Entrywise p-th power for p in (0, 1]. p = 1 preserves the arithmetic mode;
// p < 1 forces float mode. Symmetry and the zero diagonal are preserved.
DistanceSpace power_entrywise(const DistanceSpace& space, const Scalar& p);

// Unordered pairs i < j with d(i, j) == 0.
std::vector<std::pair<size_t, size_t>> degenerate_pairs(const DistanceSpace& space);

std::optional<Scalar> min_positive_distance(const DistanceSpace& space);
Scalar max_distance(const DistanceSpace& space);

}  // namespace metrize
