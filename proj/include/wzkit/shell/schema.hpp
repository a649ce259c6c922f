#pragma once

// Validation against the subset of JSON Schema that the report schema uses:
// type, enum, required, properties, additionalProperties (bool), items,
// minItems, maxItems, minLength, minimum, pattern.

#include <regex>
#include <string>
#include <vector>

#include <json.hpp>

#include "wzkit/schema_data.hpp"

namespace wzkit::shell {

inline const nlohmann::json& report_schema() {
  static const nlohmann::json s = nlohmann::json::parse(schema::kFiles[0].text);
  return s;
}

namespace detail {

inline bool has_type(const nlohmann::json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

inline void validate(const nlohmann::json& v, const nlohmann::json& s, const std::string& path,
                     std::vector<std::string>& errors) {
  auto err = [&](const std::string& m) { errors.push_back((path.empty() ? "/" : path) + ": " + m); };
  if (s.contains("type") && !has_type(v, s["type"].get<std::string>())) {
    err("expected " + s["type"].get<std::string>());
    return;
  }
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) err("value " + v.dump() + " not in enum");
  }
  if (v.is_string()) {
    const auto& str = v.get_ref<const std::string&>();
    if (s.contains("minLength") && str.size() < s["minLength"].get<std::size_t>()) err("string too short");
    if (s.contains("pattern") && !std::regex_search(str, std::regex(s["pattern"].get<std::string>()))) {
      err("'" + str + "' does not match " + s["pattern"].get<std::string>());
    }
  }
  if (v.is_number() && s.contains("minimum") && v.get<double>() < s["minimum"].get<double>()) err("below minimum");
  if (v.is_array()) {
    if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) err("too few items");
    if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) err("too many items");
    if (s.contains("items")) {
      for (std::size_t i = 0; i < v.size(); ++i) validate(v[i], s["items"], path + "/" + std::to_string(i), errors);
    }
  }
  if (v.is_object()) {
    if (s.contains("required")) {
      for (const auto& r : s["required"]) {
        if (!v.contains(r.get<std::string>())) err("missing '" + r.get<std::string>() + "'");
      }
    }
    const nlohmann::json props = s.value("properties", nlohmann::json::object());
    const bool closed = s.contains("additionalProperties") && s["additionalProperties"] == false;
    for (const auto& [key, val] : v.items()) {
      if (props.contains(key)) validate(val, props[key], path + "/" + key, errors);
      else if (closed) err("unexpected property '" + key + "'");
    }
  }
}

}  // namespace detail

/// Empty when `v` conforms to `schema`; otherwise one message per violation.
inline std::vector<std::string> validate(const nlohmann::json& v, const nlohmann::json& schema = report_schema()) {
  std::vector<std::string> errors;
  detail::validate(v, schema, "", errors);
  return errors;
}

}  // namespace wzkit::shell
