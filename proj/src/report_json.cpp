#include "metrize/report_json.hpp"

namespace metrize {

Json scalar_json(const Scalar& v) {
  if (v.is_exact()) {
    const Rational& r = v.rat();
    if (r.get_den() == 1 && r.get_num().fits_slong_p())
      return Json(r.get_num().get_si());
    return Json(v.str());
  }
  return Json(v.value());
}

namespace {

Json point_ref(size_t i, const PointSet* points) {
  if (points && i < points->size()) return Json(points->labels[i]);
  return Json(i);
}

Json witness_json(const AuditWitness& w, const PointSet* points) {
  Json pts = Json::array();
  for (size_t i : w.points) pts.push_back(point_ref(i, points));
  Json out{{"points", std::move(pts)},
           {"lhs", scalar_json(w.lhs)},
           {"rhs", scalar_json(w.rhs)}};
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

}  // namespace

Json audit_json(const AuditReport& report, const PointSet* points) {
  Json witnesses = Json::array();
  for (const AuditWitness& w : report.witnesses) witnesses.push_back(witness_json(w, points));
  Json out{{"axiom", report.axiom},
           {"verdict", report.pass ? "pass" : "fail"},
           {"witnesses", std::move(witnesses)},
           {"notes", report.notes}};
  if (report.k_min) out["k_min"] = scalar_json(*report.k_min);
  return out;
}

Json induced_json(const InducedMetricReport& report) {
  const size_t n = report.points.size();
  Json matrix = Json::array();
  for (size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < n; ++j) row.push_back(scalar_json(report.d(i, j)));
    matrix.push_back(std::move(row));
  }
  Json degenerate = Json::array();
  for (auto [i, j] : report.degenerate)
    degenerate.push_back(Json::array({point_ref(i, &report.points), point_ref(j, &report.points)}));
  Json bound_failures = Json::array();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const PairBounds& b = report.bound(i, j);
      if (b.lower_ok && b.upper_ok) continue;
      bound_failures.push_back(Json{{"pair", Json::array({point_ref(i, &report.points),
                                                          point_ref(j, &report.points)})},
                                    {"lower", scalar_json(b.lower)},
                                    {"value", scalar_json(report.d(i, j))},
                                    {"upper", scalar_json(b.upper)},
                                    {"lower_ok", b.lower_ok},
                                    {"upper_ok", b.upper_ok}});
    }
  return Json{{"exponent", scalar_json(report.exponent)},
              {"labels", report.points.labels},
              {"induced", std::move(matrix)},
              {"is_metric", report.is_metric},
              {"degenerate", std::move(degenerate)},
              {"bound_failures", std::move(bound_failures)},
              {"notes", report.notes}};
}

Json sandwich_json(const SandwichReport& report, const PointSet* points) {
  Json pairs = Json::array();
  for (const SandwichPair& p : report.pairs)
    pairs.push_back(Json{{"pair", Json::array({point_ref(p.i, points), point_ref(p.j, points)})},
                         {"lower", scalar_json(p.lower)},
                         {"value", scalar_json(p.value)},
                         {"upper", scalar_json(p.upper)},
                         {"lower_ok", p.lower_ok},
                         {"upper_ok", p.upper_ok}});
  return Json{{"regime", regime_str(report.regime)},
              {"exponent", scalar_json(report.exponent)},
              {"factor", scalar_json(report.factor)},
              {"hypothesis_met", report.hypothesis_met},
              {"lower_all", report.lower_all},
              {"upper_all", report.upper_all},
              {"pairs", std::move(pairs)},
              {"notes", report.notes}};
}

Json ladder_json(const RadiiLadder& ladder) {
  Json values = Json::array();
  for (const Scalar& v : ladder.values) values.push_back(scalar_json(v));
  return Json{{"generator", ladder.generator}, {"values", std::move(values)}};
}

Json chittenden_json(const ChittendenResult& result) {
  Json out{{"ladder", ladder_json(result.ladder)},
           {"output", space_to_json(result.output)},
           {"notes", result.notes}};
  if (result.prescale) out["prescale"] = scalar_json(*result.prescale);
  return out;
}

Json families_json(const BallFamilies& families) {
  Json levels = Json::array();
  for (const FamilyLevel& level : families.levels) {
    Json sets = Json::array();
    for (const PointSubset& s : level.sets) sets.push_back(s.indices());
    levels.push_back(Json{{"number", level.number},
                          {"per_point", level.per_point},
                          {"sets", std::move(sets)}});
  }
  return Json{{"universe", families.universe}, {"levels", std::move(levels)}};
}

BallFamilies families_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("universe") || !j.contains("levels"))
    throw Error("families JSON needs 'universe' and 'levels'");
  BallFamilies out;
  out.universe = j["universe"].get<size_t>();
  for (const Json& jl : j["levels"]) {
    if (!jl.contains("number") || !jl.contains("sets"))
      throw Error("family level needs 'number' and 'sets'");
    FamilyLevel level;
    level.number = jl["number"].get<int>();
    if (jl.contains("per_point")) level.per_point = jl["per_point"].get<bool>();
    for (const Json& js : jl["sets"]) {
      PointSubset s(out.universe);
      for (const Json& ji : js) s.insert(ji.get<size_t>());
      level.sets.push_back(std::move(s));
    }
    out.levels.push_back(std::move(level));
  }
  return out;
}

Json twogen_json(const TwoGenResult& result) {
  return Json{{"n_max", result.n_max},
              {"families", families_json(result.families)},
              {"output", space_to_json(result.output)}};
}

Json trace_json(const IterationTrace& trace) {
  Json iterates = Json::array();
  if (trace.coordinate_mode)
    for (const Scalar& v : trace.coord_iterates) iterates.push_back(scalar_json(v));
  else
    for (size_t i : trace.index_iterates) iterates.push_back(i);
  Json steps = Json::array();
  for (const Scalar& v : trace.step_dists) steps.push_back(scalar_json(v));
  return Json{{"mode", trace.coordinate_mode ? "coordinate" : "index"},
              {"iterates", std::move(iterates)},
              {"step_dists", std::move(steps)},
              {"lambda_hat", scalar_json(trace.lambda_hat)},
              {"rule_factor", scalar_json(trace.rule_factor)},
              {"stop", stop_reason_str(trace.stop)},
              {"notes", trace.notes}};
}

Json coherence_json(const CoherenceReport& report) {
  Json tails = Json::array();
  for (int t = 0; t < 3; ++t)
    tails.push_back(Json{{"max", scalar_json(report.tails[t].max)},
                         {"min", scalar_json(report.tails[t].min)},
                         {"last", scalar_json(report.tails[t].last)}});
  return Json{{"window", report.window},
              {"tails", std::move(tails)},
              {"flagged", report.flagged},
              {"tol", scalar_json(report.tol)},
              {"floor_level", scalar_json(report.floor_level)},
              {"notes", report.notes}};
}

}  // namespace metrize
