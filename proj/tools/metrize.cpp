// Batch front end: generate, audit, induce, discretize, iterate — one
// invocation per job, a machine-readable run report on stdout, exit code
// 0/1/2 = clean / violations found / input error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "metrize/gallery.hpp"
#include "metrize/report_json.hpp"

using namespace metrize;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Global {
  bool float_mode = false;
  double tol = Scalar::default_tol;
  uint64_t seed = 0;
  std::string out;  // artifact file; the run report always goes to stdout
};

struct Run {
  Json stages = Json::array();
  std::vector<std::string> assumptions;
  std::optional<Json> input;            // {path, digest} of the primary input
  std::vector<Json> aux_inputs;         // phi tables, families, ...
  std::optional<Json> artifact;         // written to --out when present
  std::optional<DistanceSpace> artifact_space;  // CSV form for .csv out paths
};

Scalar parse_scalar(const std::string& text, const Global& g) {
  return Scalar::parse(text, g.float_mode, g.tol);
}

std::string load_input(const std::string& path, Run& run) {
  std::string text = read_text_file(path);
  run.input = Json{{"path", path}, {"digest", "fnv1a64:" + fnv1a64_hex(text)}};
  return text;
}

Json load_aux_json(const std::string& path, Run& run) {
  std::string text = read_text_file(path);
  run.aux_inputs.push_back(Json{{"path", path}, {"digest", "fnv1a64:" + fnv1a64_hex(text)}});
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw Error("malformed JSON in " + path);
  return j;
}

DistanceSpace load_space(const std::string& path, const Global& g, Run& run,
                         bool allow_degenerate = false) {
  std::string text = load_input(path, run);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
    return space_from_csv(text, g.float_mode, g.tol, {}, allow_degenerate);
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw Error("malformed JSON in " + path);
  return space_from_json(j, g.float_mode, g.tol, allow_degenerate);
}

Json stage(const std::string& name, Json payload) {
  payload["stage"] = name;
  return payload;
}

// Threshold tables arrive as JSON [[eps, value], ...].
ThresholdFn load_threshold(const std::string& path, const Global& g, Run& run,
                           std::vector<std::string>& notes) {
  if (path.empty()) {
    notes.push_back("phi defaulted to eps/2");
    return [](const Scalar& e) { return e / Scalar::exact(2); };
  }
  Json j = load_aux_json(path, run);
  if (!j.is_array()) throw Error("threshold table must be a JSON array of [eps, value] pairs");
  std::vector<std::pair<Scalar, Scalar>> table;
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != 2)
      throw Error("threshold table must be a JSON array of [eps, value] pairs");
    table.emplace_back(scalar_from_json(row[0], g.float_mode, g.tol),
                       scalar_from_json(row[1], g.float_mode, g.tol));
  }
  return make_step_threshold(std::move(table));
}

// Any note that states an unverifiable hypothesis says "assumed"; collect
// them so the report never hides one.
void scrape_assumptions(const Json& node, std::vector<std::string>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (key == "notes" && value.is_array()) {
        for (const Json& n : value)
          if (n.is_string() && n.get<std::string>().find("assumed") != std::string::npos)
            out.push_back(n.get<std::string>());
      } else {
        scrape_assumptions(value, out);
      }
    }
  } else if (node.is_array()) {
    for (const Json& v : node) scrape_assumptions(v, out);
  }
}

bool any_fail(const Json& node) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (key == "verdict" && value == "fail") return true;
      if (any_fail(value)) return true;
    }
  } else if (node.is_array()) {
    for (const Json& v : node)
      if (any_fail(v)) return true;
  }
  return false;
}

int finish(const Run& run, const Global& g, const std::string& command, int forced_exit = -1) {
  std::vector<std::string> assumptions = run.assumptions;
  scrape_assumptions(run.stages, assumptions);
  std::vector<std::string> dedup;
  for (const std::string& a : assumptions)
    if (std::find(dedup.begin(), dedup.end(), a) == dedup.end()) dedup.push_back(a);

  int code = forced_exit >= 0 ? forced_exit : (any_fail(run.stages) ? 1 : 0);

  // The artifact goes out before the report so a write failure surfaces as a
  // proper error envelope instead of trailing a printed success.
  if (!g.out.empty() && (run.artifact || run.artifact_space)) {
    bool csv = g.out.size() > 4 && g.out.rfind(".csv") == g.out.size() - 4;
    if (csv) {
      if (!run.artifact_space)
        throw Error("this command's artifact has no CSV form; use a .json out path");
      write_text_file(g.out, space_to_csv(*run.artifact_space));
    } else {
      write_text_file(g.out, run.artifact->dump(2) + "\n");
    }
  }

  Json report{{"tool", "metrize"},
              {"version", kVersion},
              {"command", command},
              {"mode", g.float_mode ? "float" : "exact"},
              {"seed", g.seed},
              {"stages", run.stages},
              {"assumptions", dedup},
              {"exit", code}};
  if (run.input) report["input"] = *run.input;
  if (!run.aux_inputs.empty()) report["aux_inputs"] = run.aux_inputs;
  std::cout << report.dump(2) << "\n";
  return code;
}

// ---- audit ----------------------------------------------------------------

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_audit(const std::string& path, const std::string& axioms, const std::string& phi_path,
              const Global& g, const std::string& command) {
  Run run;
  DistanceSpace space;
  try {
    space = load_space(path, g, run, /*allow_degenerate=*/true);
  } catch (const ValidationError& err) {
    Json violations = Json::array();
    for (const CellViolation& c : err.cells())
      violations.push_back(Json{{"row", c.row}, {"col", c.col}, {"reason", c.reason}});
    run.stages.push_back(stage("input-validation", Json{{"axiom", "input"},
                                                        {"verdict", "fail"},
                                                        {"violations", violations},
                                                        {"notes", Json::array({err.what()})}}));
    return finish(run, g, command);
  }

  for (const std::string& token : split_list(axioms)) {
    if (token == "I") {
      AuditReport rep;
      rep.axiom = "zero-separation";
      rep.notes.push_back("nonnegativity and the zero diagonal are enforced at parse");
      for (auto [i, j] : degenerate_pairs(space)) {
        rep.pass = false;
        rep.witnesses.push_back({{i, j}, Scalar(), Scalar(), "distinct points at distance zero"});
      }
      run.stages.push_back(stage(token, audit_json(rep, &space.points)));
    } else if (token == "II") {
      AuditReport rep;
      rep.axiom = "symmetry";
      rep.notes.push_back("symmetry is enforced at parse; asymmetric grids are rejected");
      run.stages.push_back(stage(token, audit_json(rep, &space.points)));
    } else if (token == "III") {
      run.stages.push_back(stage(token, audit_json(check_triangle(space), &space.points)));
    } else if (token == "IV") {
      run.stages.push_back(
          stage(token, audit_json(check_generalized_triangle(space), &space.points)));
    } else if (token == "V") {
      std::vector<std::string> notes;
      ThresholdFn phi = load_threshold(phi_path, g, run, notes);
      AuditReport rep = check_uniform_regularity(space, phi);
      rep.notes.insert(rep.notes.end(), notes.begin(), notes.end());
      run.stages.push_back(stage(token, audit_json(rep, &space.points)));
    } else if (token.rfind("nu=", 0) == 0) {
      int nu = std::stoi(token.substr(3));
      run.stages.push_back(stage(token, audit_json(check_nu_generalized(space, nu),
                                                   &space.points)));
    } else {
      throw Error("unknown axiom token: " + token +
                  " (expected I, II, III, IV, V, or nu=<k>)");
    }
  }
  return finish(run, g, command);
}

// ---- induce ---------------------------------------------------------------

int cmd_induce(const std::string& path, const std::string& exponent,
               const std::string& regime_text, const std::string& beta_text, const Global& g,
               const std::string& command) {
  Run run;
  DistanceSpace space = load_space(path, g, run);

  Scalar p;
  if (exponent == "auto") {
    AuditReport rep = audit_b_coefficient(space);
    p = snowflake_exponent(*rep.k_min);
    rep.notes.push_back("exponent auto-selected: snowflake exponent " + p.str() +
                        " of the least coefficient");
    run.stages.push_back(stage("b-coefficient", audit_json(rep, &space.points)));
  } else {
    p = parse_scalar(exponent, g);
  }

  InducedMetricReport report = chain_metric(space, p);
  Json induced = induced_json(report);
  induced["verdict"] = report.is_metric ? "pass" : "fail";
  run.stages.push_back(stage("induced", std::move(induced)));

  if (!regime_text.empty()) {
    std::optional<SandwichRegime> regime = regime_parse(regime_text);
    if (!regime) throw Error("unknown regime: " + regime_text);
    std::optional<Scalar> beta;
    if (!beta_text.empty()) beta = parse_scalar(beta_text, g);
    SandwichReport sr = verify_sandwich(space, report, *regime, beta);
    Json sj = sandwich_json(sr, &space.points);
    sj["verdict"] = (sr.lower_all && sr.upper_all) ? "pass" : "fail";
    run.stages.push_back(stage("sandwich", std::move(sj)));
    if (*regime == SandwichRegime::AIN)
      run.assumptions.push_back(
          "aIN bound uses a caller-supplied beta; its fit to the coefficient is assumed");
  }

  run.artifact_space = report.to_space();
  run.artifact = space_to_json(*run.artifact_space);
  return finish(run, g, command);
}

// ---- discretize -----------------------------------------------------------

int cmd_discretize(const std::string& path, const std::string& method,
                   const std::string& phi_path, int levels, const Global& g,
                   const std::string& command) {
  Run run;
  if (method == "chittenden") {
    DistanceSpace space = load_space(path, g, run);
    std::vector<std::string> notes;
    ThresholdFn phi = load_threshold(phi_path, g, run, notes);
    AuditReport reg = check_uniform_regularity(space, phi);
    reg.notes.insert(reg.notes.end(), notes.begin(), notes.end());
    run.stages.push_back(stage("uniform-regularity", audit_json(reg, &space.points)));
    ChittendenResult res = chittenden_discretize(space, phi);
    run.stages.push_back(stage("chittenden", chittenden_json(res)));
    run.stages.push_back(stage("output-IV", audit_json(check_generalized_triangle(res.output),
                                                       &res.output.points)));
    run.artifact_space = res.output;
    run.artifact = space_to_json(res.output);
  } else if (method == "au") {
    Json j = Json::parse(load_input(path, run), nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw Error("malformed JSON in " + path);
    BallFamilies families = families_from_json(j);
    PointSet points;
    if (j.contains("labels"))
      for (const Json& l : j["labels"]) points.labels.push_back(l.get<std::string>());
    else
      for (size_t i = 0; i < families.universe; ++i)
        points.labels.push_back("p" + std::to_string(i));
    run.stages.push_back(stage("au-conditions", audit_json(check_au_conditions(families),
                                                           &points)));
    DistanceSpace out = au_distance(families, std::move(points));
    run.stages.push_back(stage("output", Json{{"space", space_to_json(out)}}));
    run.stages.push_back(stage("output-IV", audit_json(check_generalized_triangle(out),
                                                       &out.points)));
    run.artifact_space = out;
    run.artifact = space_to_json(out);
  } else if (method == "nw") {
    DistanceSpace space = load_space(path, g, run);
    std::vector<std::string> notes;
    ThresholdFn phi = load_threshold(phi_path, g, run, notes);
    LocalThresholdFn local = [phi](size_t, const Scalar& e) { return phi(e); };
    BallFamilies families = nw_ball_families(space, local, levels);
    Json fj = families_json(families);
    fj["notes"] = notes;
    run.stages.push_back(stage("families", std::move(fj)));
    run.stages.push_back(stage("au-conditions", audit_json(check_au_conditions(families),
                                                           &space.points)));
    DistanceSpace out = au_distance(families, space.points);
    run.stages.push_back(stage("output", Json{{"space", space_to_json(out)}}));
    run.stages.push_back(stage("output-IV", audit_json(check_generalized_triangle(out),
                                                       &out.points)));
    run.artifact_space = out;
    run.artifact = space_to_json(out);
  } else if (method == "twogen") {
    DistanceSpace space = load_space(path, g, run);
    TwoGenResult res = two_gen_discretize(space);
    run.stages.push_back(stage("twogen", twogen_json(res)));
    run.stages.push_back(stage("output-IV", audit_json(check_generalized_triangle(res.output),
                                                       &res.output.points)));
    run.artifact_space = res.output;
    run.artifact = space_to_json(res.output);
  } else {
    throw Error("unknown method: " + method + " (expected chittenden, au, nw, or twogen)");
  }
  return finish(run, g, command);
}

// ---- fixpoint ---------------------------------------------------------------

CoordDistance parse_dist(const std::string& text) {
  if (text == "abs") return CoordDistance::Abs;
  if (text == "pow2") return CoordDistance::Pow2;
  throw Error("unknown distance rule: " + text + " (expected abs or pow2)");
}

Json steps_csv(const IterationTrace& trace) {
  std::string csv = "k,iterate,step_from_prev\n";
  size_t count = trace.coordinate_mode ? trace.coord_iterates.size()
                                       : trace.index_iterates.size();
  for (size_t k = 0; k < count; ++k) {
    csv += std::to_string(k) + ",";
    csv += trace.coordinate_mode ? trace.coord_iterates[k].str()
                                 : std::to_string(trace.index_iterates[k]);
    csv += ",";
    if (k > 0 && k - 1 < trace.step_dists.size()) csv += trace.step_dists[k - 1].str();
    csv += "\n";
  }
  return Json(csv);
}

int cmd_fixpoint(const std::string& path, const std::string& coord, const std::string& table_path,
                 const std::string& domain, const std::string& dist, const std::string& x0_text,
                 const std::string& map_text, const std::string& tol_text,
                 const std::string& exponent, const std::string& decay_lambda, int max_iters,
                 const Global& g, const std::string& command) {
  Run run;
  IterationTrace trace;
  bool have_decay_default = false;
  if (!coord.empty()) {
    if (coord.rfind("affine:", 0) != 0)
      throw Error("coordinate map must look like affine:<lambda>,<offset>");
    std::vector<std::string> parts = split_list(coord.substr(7));
    if (parts.size() != 2) throw Error("coordinate map must look like affine:<lambda>,<offset>");
    std::vector<std::string> dom = split_list(domain);
    if (dom.size() != 2) throw Error("domain must look like <lo>,<hi>");
    AffineMap map{parse_scalar(parts[0], g), parse_scalar(parts[1], g), parse_scalar(dom[0], g),
                  parse_scalar(dom[1], g), parse_dist(dist)};
    if (x0_text.empty()) throw Error("coordinate iteration needs --x0");
    trace = banach_iterate(map, parse_scalar(x0_text, g), parse_scalar(tol_text, g), max_iters);
    have_decay_default = true;
  } else if (!table_path.empty()) {
    Json j = load_aux_json(table_path, run);
    if (!j.contains("grid") || !j.contains("image"))
      throw Error("tabulated map JSON needs 'grid' and 'image'");
    TabulatedMap map;
    for (const Json& v : j["grid"]) map.grid.push_back(scalar_from_json(v, g.float_mode, g.tol));
    for (const Json& v : j["image"]) map.image.push_back(scalar_from_json(v, g.float_mode, g.tol));
    map.dist = parse_dist(j.contains("dist") ? j["dist"].get<std::string>() : dist);
    if (x0_text.empty()) throw Error("tabulated iteration needs --x0");
    trace = banach_iterate(map, parse_scalar(x0_text, g), parse_scalar(tol_text, g), max_iters);
  } else if (!path.empty()) {
    DistanceSpace space = load_space(path, g, run);
    if (map_text.empty()) throw Error("index iteration needs --map");
    IndexMap T;
    for (const std::string& s : split_list(map_text)) T.push_back(std::stoul(s));
    Scalar modulus = contraction_modulus(space, T);
    bool contracting = modulus.lt(Scalar::exact(1));
    run.stages.push_back(stage("contraction-modulus",
                               Json{{"value", scalar_json(modulus)},
                                    {"verdict", contracting ? "pass" : "fail"}}));
    if (x0_text.empty()) throw Error("index iteration needs --x0");
    trace = banach_iterate(space, T, std::stoul(x0_text), max_iters);
    if (!exponent.empty()) {
      if (contracting) {
        AuditReport rep = induced_contraction_check(space, T, parse_scalar(exponent, g));
        run.stages.push_back(stage("induced-contraction", audit_json(rep, &space.points)));
      } else {
        run.stages.push_back(stage("induced-contraction",
                                   Json{{"notes", Json::array({"skipped: modulus " +
                                                               modulus.str() +
                                                               " is not below 1"})}}));
      }
    }
  } else {
    throw Error("fixpoint needs --coord, --table, or a space file with --map");
  }

  run.stages.push_back(stage("trace", trace_json(trace)));
  if (!decay_lambda.empty() || have_decay_default) {
    Scalar lambda = decay_lambda.empty() ? trace.rule_factor : parse_scalar(decay_lambda, g);
    AuditReport rep = geometric_decay_check(trace, lambda);
    run.stages.push_back(stage("geometric-decay", audit_json(rep)));
  }
  run.artifact = steps_csv(trace);
  if (!g.out.empty()) {
    write_text_file(g.out, run.artifact->get<std::string>());
    run.artifact.reset();  // already written as plain CSV
  }
  return finish(run, g, command);
}

// ---- setchain ---------------------------------------------------------------

size_t resolve_point(const std::string& text, const std::vector<std::string>& labels) {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == text) return i;
  try {
    size_t pos = 0;
    unsigned long v = std::stoul(text, &pos);
    if (pos == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error("unknown point: " + text);
}

int cmd_setchain(const std::string& path, const std::string& from, const std::string& to,
                 const Global& g, const std::string& command) {
  Run run;
  Json j = Json::parse(load_input(path, run), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw Error("malformed JSON in " + path);
  BallFamilies families = families_from_json(j);
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const Json& l : j["labels"]) labels.push_back(l.get<std::string>());

  SetChainProblem problem{std::move(families), resolve_point(from, labels),
                          resolve_point(to, labels)};
  std::optional<Scalar> dist = set_chain_distance(problem);
  Json payload{{"from", from}, {"to", to}, {"reachable", dist.has_value()}};
  payload["distance"] = dist ? scalar_json(*dist) : Json(nullptr);
  run.stages.push_back(stage("setchain", std::move(payload)));
  return finish(run, g, command);
}

// ---- gallery ----------------------------------------------------------------

int param_int(const std::vector<std::string>& params, size_t i, const char* what) {
  if (i >= params.size()) throw Error(std::string("missing parameter: ") + what);
  return std::stoi(params[i]);
}

Json scalar_list_json(const std::vector<Scalar>& values) {
  Json out = Json::array();
  for (const Scalar& v : values) out.push_back(scalar_json(v));
  return out;
}

int cmd_gallery(const std::string& name, const std::vector<std::string>& params, const Global& g,
                const std::string& command) {
  Run run;
  Json object;
  if (name == "square-line") {
    run.artifact_space = gen_square_line(param_int(params, 0, "grid size"));
  } else if (name == "ex399") {
    run.artifact_space = gen_example_399(param_int(params, 0, "truncation"));
  } else if (name == "ex387") {
    run.artifact_space = gen_example_387(param_int(params, 0, "truncation"));
  } else if (name == "branciari4") {
    run.artifact_space = gen_branciari4();
  } else if (name == "2gen-slow") {
    run.artifact_space = gen_2gen_slow(param_int(params, 0, "truncation"));
  } else if (name == "noncoherent") {
    NoncoherentGallery res = gen_noncoherent(param_int(params, 0, "truncation"));
    run.artifact_space = res.space;
    object = space_to_json(res.space);
    object["witness_sequences"] = Json{{"a_an", scalar_list_json(res.seq_a_an)},
                                       {"an_bn", scalar_list_json(res.seq_an_bn)},
                                       {"a_bn", scalar_list_json(res.seq_a_bn)}};
  } else if (name == "au-counterexample") {
    AuCounterexample res = gen_au_counterexample(param_int(params, 0, "grid size"),
                                                 param_int(params, 1, "level count"));
    object = families_json(res.families);
    object["labels"] = res.points.labels;
  } else if (name == "lp") {
    if (params.size() < 2) throw Error("lp needs <p> and <vectors.json>");
    Json vj = load_aux_json(params[1], run);
    std::vector<std::vector<Scalar>> vectors;
    for (const Json& row : vj) {
      std::vector<Scalar> v;
      for (const Json& c : row) v.push_back(scalar_from_json(c, g.float_mode, g.tol));
      vectors.push_back(std::move(v));
    }
    size_t dim = vectors.empty() ? 0 : vectors[0].size();
    LpGallery res = gen_lp_truncated(parse_scalar(params[0], g), dim, vectors);
    run.artifact_space = res.space;
    object = space_to_json(res.space);
    object["companion_exponent"] = scalar_json(res.companion_exponent);
  } else if (name == "random-metric") {
    run.artifact_space = gen_random_metric(param_int(params, 0, "size"), g.seed);
  } else if (name == "random-bmetric") {
    if (params.size() < 2) throw Error("random-bmetric needs <n> and <q>");
    run.artifact_space =
        gen_random_bmetric(param_int(params, 0, "size"), parse_scalar(params[1], g), g.seed);
  } else if (name == "random-twogen") {
    run.artifact_space = gen_random_twogen(param_int(params, 0, "size"), g.seed);
  } else if (name == "random-contraction") {
    if (params.size() < 2) throw Error("random-contraction needs <n> and <q>");
    RandomContraction res =
        gen_random_contraction(param_int(params, 0, "size"), param_int(params, 1, "power"),
                               g.seed);
    object = Json{{"space", space_to_json(res.space)},
                  {"map", res.map},
                  {"modulus", scalar_json(res.modulus)},
                  {"chain_exponent", scalar_json(res.chain_exponent)}};
  } else {
    throw Error("unknown gallery entry: " + name);
  }
  if (run.artifact_space && object.is_null()) object = space_to_json(*run.artifact_space);
  run.stages.push_back(stage("gallery", Json{{"name", name}, {"object", object}}));
  run.artifact = object;
  return finish(run, g, command);
}

}  // namespace

int main(int argc, char** argv) {
  std::string command;
  for (int i = 0; i < argc; ++i) {
    if (i) command += ' ';
    command += argv[i];
  }

  CLI::App app{"finite distance-space toolkit: audits, chain metrics, discretizers, iteration"};
  app.require_subcommand(1);

  Global g;
  std::string mode = "exact";
  app.add_option("--mode", mode, "arithmetic mode")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", g.tol, "comparison tolerance in float mode");
  app.add_option("--seed", g.seed, "seed for randomized generators and samplers");
  app.add_option("--out", g.out, "write the command's artifact (space, families, steps) here");

  std::string in_path, axioms = "I,II,III,IV", phi_path;
  CLI::App* audit = app.add_subcommand("audit", "re-derive axiom verdicts for a space file");
  audit->add_option("input", in_path, "space file (.csv or .json)")->required();
  audit->add_option("--axioms", axioms, "comma list of I,II,III,IV,V,nu=<k>");
  audit->add_option("--phi", phi_path, "threshold table JSON [[eps, value], ...]");

  std::string exponent = "1", regime, beta;
  CLI::App* induce = app.add_subcommand("induce", "chain metric of a space, with bound checks");
  induce->add_option("input", in_path, "space file (.csv or .json)")->required();
  induce->add_option("--exponent", exponent, "chain exponent in (0, 1], or 'auto'");
  induce->add_option("--regime", regime, "sandwich bound to verify: frink-IV, pS, or aIN");
  induce->add_option("--beta", beta, "aIN exponent override");

  std::string method;
  int levels = -1;
  CLI::App* discretize = app.add_subcommand("discretize", "threshold a space into dyadic levels");
  discretize->add_option("input", in_path, "space file, or families JSON for --method au")
      ->required();
  discretize->add_option("--method", method, "chittenden, au, nw, or twogen")->required();
  discretize->add_option("--phi", phi_path, "threshold table JSON [[eps, value], ...]");
  discretize->add_option("--levels", levels, "level count for nw (-1 = until separated)");

  std::string coord, table_path, domain = "0,1", dist = "abs", x0, map_text, stop_tol = "1e-12";
  std::string fp_exponent, decay_lambda;
  int max_iters = 100;
  CLI::App* fixpoint = app.add_subcommand("fixpoint", "iterate a self-map and trace the steps");
  fixpoint->add_option("input", in_path, "space file for index-map iteration");
  fixpoint->add_option("--coord", coord, "coordinate map, e.g. affine:4/5,0");
  fixpoint->add_option("--table", table_path, "tabulated map JSON {grid, image, dist}");
  fixpoint->add_option("--domain", domain, "closed interval lo,hi for affine maps");
  fixpoint->add_option("--dist", dist, "step distance rule: abs or pow2");
  fixpoint->add_option("--x0", x0, "start point (value, or index with --map)");
  fixpoint->add_option("--map", map_text, "index map as comma list of images");
  fixpoint->add_option("--tol", stop_tol, "stopping tolerance for coordinate steps");
  fixpoint->add_option("--exponent", fp_exponent, "verify the induced contraction at this exponent");
  fixpoint->add_option("--decay-lambda", decay_lambda, "verify geometric decay at this factor");
  fixpoint->add_option("--max-iters", max_iters, "iteration cap");

  std::string from, to;
  CLI::App* setchain = app.add_subcommand("setchain", "cheapest set chain between two points");
  setchain->add_option("input", in_path, "families JSON")->required();
  setchain->add_option("--from", from, "start point (label or index)")->required();
  setchain->add_option("--to", to, "end point (label or index)")->required();

  std::string gallery_name;
  std::vector<std::string> gallery_params;
  CLI::App* gallery = app.add_subcommand("gallery", "emit a built-in example space");
  gallery->add_option("name", gallery_name, "generator name")->required();
  gallery->add_option("params", gallery_params, "generator parameters");

  // Global flags stay valid after the subcommand name.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  g.float_mode = (mode == "float");

  try {
    if (app.got_subcommand(audit)) return cmd_audit(in_path, axioms, phi_path, g, command);
    if (app.got_subcommand(induce))
      return cmd_induce(in_path, exponent, regime, beta, g, command);
    if (app.got_subcommand(discretize))
      return cmd_discretize(in_path, method, phi_path, levels, g, command);
    if (app.got_subcommand(fixpoint))
      return cmd_fixpoint(in_path, coord, table_path, domain, dist, x0, map_text, stop_tol,
                          fp_exponent, decay_lambda, max_iters, g, command);
    if (app.got_subcommand(setchain)) return cmd_setchain(in_path, from, to, g, command);
    if (app.got_subcommand(gallery)) return cmd_gallery(gallery_name, gallery_params, g, command);
  } catch (const std::exception& e) {
    Json report{{"tool", "metrize"},  {"version", kVersion}, {"command", command},
                {"mode", mode},       {"seed", g.seed},      {"stages", Json::array()},
                {"assumptions", Json::array()},              {"error", e.what()},
                {"exit", 2}};
    std::cout << report.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
