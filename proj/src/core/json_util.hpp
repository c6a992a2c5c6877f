#pragma once

// Shared helpers for parsing versioned JSON configs: strict key checking and
// typed field extraction, all failures thrown as ConfigError naming the field.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "core/scenario.hpp"

namespace lfsim::cfg {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] inline void fail(const std::string& field,
                              const std::string& msg) {
  throw ConfigError(field, msg);
}

inline std::string sub(const std::string& ctx, const std::string& key) {
  return ctx.empty() ? key : ctx + "." + key;
}

inline void reject_unknown(const json& j,
                           std::initializer_list<const char*> allowed,
                           const std::string& ctx) {
  if (!j.is_object()) fail(ctx.empty() ? "(root)" : ctx, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) { known = true; break; }
    if (!known) fail(sub(ctx, it.key()), "unknown key");
  }
}

inline const json* find(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

inline int require_int(const json& j, const char* key,
                       const std::string& ctx) {
  const json* v = find(j, key);
  if (!v) fail(sub(ctx, key), "missing required field");
  if (!v->is_number_integer()) fail(sub(ctx, key), "expected an integer");
  return v->get<int>();
}

inline int opt_int(const json& j, const char* key, int def,
                   const std::string& ctx) {
  const json* v = find(j, key);
  if (!v) return def;
  if (!v->is_number_integer()) fail(sub(ctx, key), "expected an integer");
  return v->get<int>();
}

inline double require_num(const json& j, const char* key,
                          const std::string& ctx) {
  const json* v = find(j, key);
  if (!v) fail(sub(ctx, key), "missing required field");
  if (!v->is_number()) fail(sub(ctx, key), "expected a number");
  return v->get<double>();
}

inline double opt_num(const json& j, const char* key, double def,
                      const std::string& ctx) {
  const json* v = find(j, key);
  if (!v) return def;
  if (!v->is_number()) fail(sub(ctx, key), "expected a number");
  return v->get<double>();
}

inline std::string require_str(const json& j, const char* key,
                               const std::string& ctx) {
  const json* v = find(j, key);
  if (!v) fail(sub(ctx, key), "missing required field");
  if (!v->is_string()) fail(sub(ctx, key), "expected a string");
  return v->get<std::string>();
}

inline std::string opt_str(const json& j, const char* key,
                           const std::string& def, const std::string& ctx) {
  const json* v = find(j, key);
  if (!v) return def;
  if (!v->is_string()) fail(sub(ctx, key), "expected a string");
  return v->get<std::string>();
}

// Bidirectional name<->enum table; parse failures list the accepted names.
template <class Enum>
struct NameTable {
  std::vector<std::pair<Enum, const char*>> rows;
  const char* name(Enum e) const {
    for (const auto& [k, n] : rows)
      if (k == e) return n;
    return "?";
  }
  Enum parse(const std::string& s, const std::string& field) const {
    for (const auto& [k, n] : rows)
      if (s == n) return k;
    std::string opts;
    for (const auto& [k, n] : rows) {
      if (!opts.empty()) opts += " | ";
      opts += n;
    }
    fail(field, "expected one of: " + opts);
  }
};

// Parses text as JSON, mapping syntax errors onto the config diagnostic path.
inline json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail("(json)", "not valid JSON");
  return j;
}

}  // namespace lfsim::cfg
