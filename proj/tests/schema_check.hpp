#pragma once

// Validator for the subset of JSON Schema draft-07 that report.schema.json
// uses: type (single or list), enum, properties, required, items. Returns
// human-readable violations instead of throwing so tests can print them.

#include <string>
#include <vector>

#include <json.hpp>

namespace schema_check {

using Json = nlohmann::json;

inline bool type_matches(const Json& value, const std::string& name) {
  if (name == "object") return value.is_object();
  if (name == "array") return value.is_array();
  if (name == "string") return value.is_string();
  if (name == "integer") return value.is_number_integer();
  if (name == "number") return value.is_number();
  if (name == "boolean") return value.is_boolean();
  if (name == "null") return value.is_null();
  return false;
}

inline void validate_at(const Json& schema, const Json& value, const std::string& where,
                        std::vector<std::string>& out) {
  if (schema.contains("type")) {
    const Json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(value, t.get<std::string>());
    } else {
      for (const Json& alt : t) ok = ok || type_matches(value, alt.get<std::string>());
    }
    if (!ok) {
      out.push_back(where + ": type mismatch, wanted " + t.dump());
      return;  // structural checks below would only cascade
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const Json& alt : schema["enum"]) ok = ok || alt == value;
    if (!ok) out.push_back(where + ": value " + value.dump() + " not in enum");
  }
  if (schema.contains("required") && value.is_object())
    for (const Json& key : schema["required"])
      if (!value.contains(key.get<std::string>()))
        out.push_back(where + ": missing required key " + key.get<std::string>());
  if (schema.contains("properties") && value.is_object())
    for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
      if (value.contains(it.key()))
        validate_at(it.value(), value[it.key()], where + "." + it.key(), out);
  if (schema.contains("items") && value.is_array())
    for (size_t i = 0; i < value.size(); ++i)
      validate_at(schema["items"], value[i], where + "[" + std::to_string(i) + "]", out);
}

inline std::vector<std::string> validate(const Json& schema, const Json& value) {
  std::vector<std::string> out;
  validate_at(schema, value, "$", out);
  return out;
}

}  // namespace schema_check