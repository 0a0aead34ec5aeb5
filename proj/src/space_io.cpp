#include "metrize/space_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace metrize {

namespace {

std::vector<std::string> split(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, delim)) out.push_back(cell);
  if (!line.empty() && line.back() == delim) out.emplace_back();
  return out;
}

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string space_to_csv(const DistanceSpace& space) {
  const size_t n = space.size();
  std::string out;
  for (const std::string& l : space.points.labels) {
    if (l.find(',') != std::string::npos)
      throw Error("label '" + l + "' contains a comma; not representable in CSV");
    out += ',';
    out += l;
  }
  out += '\n';
  for (size_t i = 0; i < n; ++i) {
    out += space.points.labels[i];
    for (size_t j = 0; j < n; ++j) {
      out += ',';
      out += space.d(i, j).str();
    }
    out += '\n';
  }
  return out;
}

DistanceSpace space_from_csv(const std::string& text, bool as_float, double cmp_tol,
                             ClaimedClass claimed, bool allow_degenerate) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (trimmed(line).empty()) continue;
    rows.push_back(split(line, ','));
  }
  if (rows.size() < 2) throw Error("CSV needs a header row and at least one data row");

  PointSet pts;
  for (size_t c = 1; c < rows[0].size(); ++c) pts.labels.push_back(trimmed(rows[0][c]));
  const size_t n = pts.labels.size();
  if (rows.size() != n + 1) throw Error("CSV has " + std::to_string(rows.size() - 1) +
                                        " data rows for " + std::to_string(n) + " labels");

  DistanceMatrix grid(n);
  for (size_t i = 0; i < n; ++i) {
    const std::vector<std::string>& row = rows[i + 1];
    if (row.size() != n + 1)
      throw Error("row " + std::to_string(i + 1) + " has " + std::to_string(row.size() - 1) +
                  " cells for " + std::to_string(n) + " labels");
    if (trimmed(row[0]) != pts.labels[i])
      throw Error("row label '" + trimmed(row[0]) + "' does not match header '" +
                  pts.labels[i] + "'");
    for (size_t j = 0; j < n; ++j) grid.at(i, j) = Scalar::parse(trimmed(row[j + 1]), as_float, cmp_tol);
  }
  return make_space(std::move(pts), std::move(grid), claimed, allow_degenerate);
}

namespace {

Json scalar_to_json_value(const Scalar& v) {
  if (v.is_exact()) {
    const Rational& r = v.rat();
    if (r.get_den() == 1 && r.get_num().fits_slong_p())
      return Json(r.get_num().get_si());
    return Json(v.str());
  }
  return Json(v.value());
}

Scalar scalar_from_json_value(const Json& j, bool as_float, double cmp_tol,
                              const std::string& where) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), as_float, cmp_tol);
  if (j.is_number_integer())
    return as_float ? Scalar::real(static_cast<double>(j.get<long long>()), cmp_tol)
                    : Scalar::exact(Rational(static_cast<long>(j.get<long long>())));
  if (j.is_number_float()) {
    if (!as_float)
      throw Error(where + ": fractional number in exact mode; spell the value as a string");
    return Scalar::real(j.get<double>(), cmp_tol);
  }
  throw Error(where + ": expected a number or numeric string");
}

}  // namespace

Scalar scalar_from_json(const Json& j, bool as_float, double cmp_tol) {
  return scalar_from_json_value(j, as_float, cmp_tol, "value");
}

Json space_to_json(const DistanceSpace& space) {
  const size_t n = space.size();
  bool exact = true;
  Json entries = Json::array();
  for (size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < n; ++j) {
      const Scalar& v = space.d(i, j);
      exact = exact && v.is_exact();
      row.push_back(scalar_to_json_value(v));
    }
    entries.push_back(std::move(row));
  }
  Json out{{"labels", space.points.labels},
           {"entries", std::move(entries)},
           {"claimed_class", space.claimed.str()},
           {"mode", exact ? "exact" : "float"}};
  if (space.points.has_coords()) {
    Json coords = Json::array();
    for (const Scalar& c : space.points.coords) coords.push_back(scalar_to_json_value(c));
    out["coords"] = std::move(coords);
  }
  if (space.allow_degenerate) out["allow_degenerate"] = true;
  return out;
}

DistanceSpace space_from_json(const Json& j, bool as_float, double cmp_tol,
                              bool allow_degenerate) {
  if (!j.is_object() || !j.contains("labels") || !j.contains("entries"))
    throw Error("space JSON needs 'labels' and 'entries'");
  if (j.contains("mode") && j["mode"] == "float") as_float = true;

  PointSet pts;
  for (const Json& l : j["labels"]) pts.labels.push_back(l.get<std::string>());
  const size_t n = pts.labels.size();

  const Json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != n) throw Error("'entries' must be an n x n grid");
  DistanceMatrix grid(n);
  for (size_t i = 0; i < n; ++i) {
    if (!entries[i].is_array() || entries[i].size() != n)
      throw Error("'entries' must be an n x n grid");
    for (size_t k = 0; k < n; ++k)
      grid.at(i, k) = scalar_from_json_value(
          entries[i][k], as_float, cmp_tol,
          "entry (" + std::to_string(i) + "," + std::to_string(k) + ")");
  }

  if (j.contains("coords")) {
    const Json& coords = j["coords"];
    if (!coords.is_array() || coords.size() != n)
      throw Error("'coords' must list one coordinate per label");
    for (size_t i = 0; i < n; ++i)
      pts.coords.push_back(scalar_from_json_value(coords[i], as_float, cmp_tol,
                                                  "coord " + std::to_string(i)));
  }

  ClaimedClass cls;
  if (j.contains("claimed_class")) cls = ClaimedClass::parse(j["claimed_class"].get<std::string>());
  if (j.contains("allow_degenerate") && j["allow_degenerate"].get<bool>()) allow_degenerate = true;
  return make_space(std::move(pts), std::move(grid), cls, allow_degenerate);
}

DistanceSpace read_space_file(const std::string& path, bool as_float, double cmp_tol,
                              bool allow_degenerate) {
  std::string text = read_text_file(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
    return space_from_csv(text, as_float, cmp_tol, {}, allow_degenerate);
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw Error("malformed JSON in " + path);
  return space_from_json(j, as_float, cmp_tol, allow_degenerate);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed for " + path);
}

uint64_t fnv1a64(std::string_view text) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(std::string_view text) {
  static const char* digits = "0123456789abcdef";
  uint64_t h = fnv1a64(text);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace metrize
