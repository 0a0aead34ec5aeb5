#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>

#include "metrize/space.hpp"

namespace metrize {

using Json = nlohmann::json;

// CSV grid: header row = empty cell then labels; each data row = label then
// cells. Cells are decimal, scientific, or p/q literals.
std::string space_to_csv(const DistanceSpace& space);
DistanceSpace space_from_csv(const std::string& text, bool as_float = false,
                             double cmp_tol = Scalar::default_tol, ClaimedClass claimed = {},
                             bool allow_degenerate = false);

// JSON object {labels, entries, claimed_class, mode, coords?}. Exact values
// travel as strings (or integers); float values as numbers. Reading in
// exact mode rejects fractional numbers — a parsed JSON number is already a
// binary double, not the decimal that was written, so exact entries must be
// spelled as strings.
Json space_to_json(const DistanceSpace& space);
DistanceSpace space_from_json(const Json& j, bool as_float = false,
                              double cmp_tol = Scalar::default_tol,
                              bool allow_degenerate = false);

// One value under the same rules entries follow (string, integer, or — in
// float mode only — fractional number).
Scalar scalar_from_json(const Json& j, bool as_float = false,
                        double cmp_tol = Scalar::default_tol);

// Dispatches on the .csv / .json extension.
DistanceSpace read_space_file(const std::string& path, bool as_float = false,
                              double cmp_tol = Scalar::default_tol,
                              bool allow_degenerate = false);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

uint64_t fnv1a64(std::string_view text);
std::string fnv1a64_hex(std::string_view text);

}  // namespace metrize
