#pragma once

#include <string_view>

#include "heyde/config.hpp"
#include "heyde/report.hpp"

namespace heyde {

// Dispatch a validated config to the engines. Deterministic given the seed.
Report run(const JobConfig& cfg);

// Parse + run with the CLI's error mapping: any parse or engine error becomes
// a verdict = ERROR report (exit code 2).
struct CliOverrides {
  std::optional<Rational> tol;
  std::optional<std::int64_t> bound;
};
Report execute_config_text(std::string_view text, const CliOverrides& overrides = {});

}  // namespace heyde
