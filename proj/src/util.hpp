#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lexsel/error.hpp"

namespace lexsel::detail {

inline bool is_token(std::string_view s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') return false;
  }
  return true;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Malformed, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string string_or(const nlohmann::json& obj, const char* key, const char* fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_string()) {
    throw Error(ErrorKind::Malformed, std::string("field \"") + key + "\" must be a string");
  }
  return obj[key].get<std::string>();
}

}  // namespace lexsel::detail
