#pragma once

// JSON conversions shared between the file readers. Not installed.

#include <json.hpp>
#include <string>

#include "coframes/error.hpp"
#include "coframes/fincat/io.hpp"

namespace coframes::detail {

using nlohmann::json;

inline const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where.empty() ? key : where + "." + key, "missing field");
  return *it;
}

inline int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<int>();
}

inline std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a string");
  return j.get<std::string>();
}

inline json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
}

fincat::CategoryFile category_from_json(const json& j, const std::string& where);
json category_to_json(const fincat::FinCategory& c, const fincat::MorphismClass* weq);

}  // namespace coframes::detail
