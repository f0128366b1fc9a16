#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heyde/config.hpp"

namespace heyde {

enum class Verdict { pass, fail, error };

std::string verdict_name(Verdict v);

// Ordered key/value payload. The machine rendering is bit-exact and
// deterministic; timing only appears in the human rendering.
struct Report {
  std::optional<Command> cmd;
  Verdict verdict = Verdict::pass;
  std::vector<std::pair<std::string, std::string>> fields;
  double elapsed_ms = 0.0;

  void put(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
};

std::string render_report(const Report& r, bool machine);
int exit_code(const Report& r);

// Generic "key = value" document scan; used to prove report round-trips.
std::optional<std::vector<std::pair<std::string, std::string>>> parse_kv(std::string_view text);
std::string render_kv(const std::vector<std::pair<std::string, std::string>>& kv);

std::string format_double(double v);  // shortest round-trip form

}  // namespace heyde
