#include "metrize/space.hpp"

#include <set>
#include <sstream>

namespace metrize {

std::optional<size_t> PointSet::find(std::string_view label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  return std::nullopt;
}

std::string ClaimedClass::str() const {
  switch (kind) {
    case SpaceKind::RawDistance:
      return "raw-distance";
    case SpaceKind::Metric:
      return "metric";
    case SpaceKind::BMetric:
      return "b-metric(" + param.str() + ")";
    case SpaceKind::TwoGeneralized:
      return "two-generalized";
    case SpaceKind::NuGeneralized:
      return "nu-generalized(" + param.str() + ")";
    case SpaceKind::FDistance:
      return "F-distance";
    case SpaceKind::CFMetric:
      return "CF-metric";
  }
  throw Error("unreachable claimed-class kind");
}

ClaimedClass ClaimedClass::parse(std::string_view text) {
  auto param_of = [&](std::string_view body) {
    size_t open = body.find('(');
    if (open == std::string_view::npos || body.back() != ')')
      throw Error("claimed class needs a parameter: " + std::string(text));
    return Scalar::parse(body.substr(open + 1, body.size() - open - 2));
  };
  ClaimedClass c;
  if (text == "raw-distance") {
    c.kind = SpaceKind::RawDistance;
  } else if (text == "metric") {
    c.kind = SpaceKind::Metric;
  } else if (text.rfind("b-metric", 0) == 0) {
    c.kind = SpaceKind::BMetric;
    c.param = param_of(text);
  } else if (text == "two-generalized") {
    c.kind = SpaceKind::TwoGeneralized;
  } else if (text.rfind("nu-generalized", 0) == 0) {
    c.kind = SpaceKind::NuGeneralized;
    c.param = param_of(text);
  } else if (text == "F-distance") {
    c.kind = SpaceKind::FDistance;
  } else if (text == "CF-metric") {
    c.kind = SpaceKind::CFMetric;
  } else {
    throw Error("unknown claimed class: " + std::string(text));
  }
  return c;
}

ValidationError::ValidationError(const std::string& header, std::vector<CellViolation> cells)
    : Error([&] {
        std::ostringstream os;
        os << header;
        for (const auto& c : cells)
          os << "\n  cell (" << c.row << ", " << c.col << "): " << c.reason;
        return os.str();
      }()),
      cells_(std::move(cells)) {}

DistanceSpace make_space(PointSet points, DistanceMatrix matrix, ClaimedClass claimed,
                         bool allow_degenerate) {
  const size_t n = points.size();
  std::vector<CellViolation> bad;

  if (matrix.size() != n)
    throw Error("matrix size " + std::to_string(matrix.size()) + " does not match " +
                std::to_string(n) + " labels");
  if (points.has_coords() && points.coords.size() != n)
    throw Error("coordinate list does not match the label count");

  std::set<std::string> seen;
  for (size_t i = 0; i < n; ++i) {
    if (points.labels[i].empty()) throw Error("empty point label at index " + std::to_string(i));
    if (!seen.insert(points.labels[i]).second)
      throw Error("duplicate point label: " + points.labels[i]);
  }

  const Scalar zero;
  for (size_t i = 0; i < n; ++i) {
    if (!matrix.at(i, i).is_zero())
      bad.push_back({i, i, "diagonal entry " + matrix.at(i, i).str() + " is not zero"});
    for (size_t j = i + 1; j < n; ++j) {
      const Scalar& a = matrix.at(i, j);
      const Scalar& b = matrix.at(j, i);
      if (!a.eq(b))
        bad.push_back({i, j, "asymmetric: " + a.str() + " vs " + b.str() + " at transpose"});
      if (a.lt(zero)) bad.push_back({i, j, "negative entry " + a.str()});
      if (b.lt(zero) && !a.eq(b)) bad.push_back({j, i, "negative entry " + b.str()});
      if (!allow_degenerate && !a.lt(zero) && a.eq(zero))
        bad.push_back({i, j, "zero off-diagonal entry (degenerate pair)"});
    }
  }
  if (!bad.empty()) throw ValidationError("invalid distance grid", std::move(bad));

  DistanceSpace s;
  s.points = std::move(points);
  s.matrix = std::move(matrix);
  s.claimed = claimed;
  s.allow_degenerate = allow_degenerate;
  return s;
}

DistanceSpace power_entrywise(const DistanceSpace& space, const Scalar& p) {
  if (!p.gt(Scalar()) || p.gt(Scalar::exact(1)))
    throw Error("entrywise exponent must lie in (0, 1], got " + p.str());
  const size_t n = space.size();
  DistanceMatrix out(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      out.at(i, j) = i == j ? Scalar() : space.d(i, j).pow(p);
  ClaimedClass claimed =
      p.is_exact() && p.rat() == 1 ? space.claimed : ClaimedClass{SpaceKind::RawDistance, {}};
  return make_space(space.points, std::move(out), claimed, space.allow_degenerate);
}

std::vector<std::pair<size_t, size_t>> degenerate_pairs(const DistanceSpace& space) {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t i = 0; i < space.size(); ++i)
    for (size_t j = i + 1; j < space.size(); ++j)
      if (space.d(i, j).is_zero()) out.emplace_back(i, j);
  return out;
}

std::optional<Scalar> min_positive_distance(const DistanceSpace& space) {
  std::optional<Scalar> best;
  for (size_t i = 0; i < space.size(); ++i)
    for (size_t j = i + 1; j < space.size(); ++j) {
      const Scalar& v = space.d(i, j);
      if (v.is_zero()) continue;
      if (!best || Scalar::value_less(v, *best)) best = v;
    }
  return best;
}

Scalar max_distance(const DistanceSpace& space) {
  Scalar best;
  for (size_t i = 0; i < space.size(); ++i)
    for (size_t j = i + 1; j < space.size(); ++j)
      best = Scalar::max(best, space.d(i, j));
  return best;
}

}  // namespace metrize
