#include "heyde/report.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

namespace heyde {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::error: return "ERROR";
  }
  return "?";
}

std::string render_report(const Report& r, bool machine) {
  std::ostringstream out;
  if (r.cmd) out << "cmd = " << command_name(*r.cmd) << '\n';
  out << "verdict = " << verdict_name(r.verdict) << '\n';
  for (const auto& [k, v] : r.fields) out << k << " = " << v << '\n';
  if (!machine) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", r.elapsed_ms);
    out << "elapsed_ms = " << buf << '\n';
  }
  return out.str();
}

int exit_code(const Report& r) {
  switch (r.verdict) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::error: return 2;
  }
  return 2;
}

std::optional<std::vector<std::pair<std::string, std::string>>> parse_kv(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) return std::nullopt;  // every line newline-terminated
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty() || line.front() == '#') continue;
    std::size_t eq = line.find(" = ");
    if (eq == std::string_view::npos) return std::nullopt;
    out.emplace_back(std::string(line.substr(0, eq)), std::string(line.substr(eq + 3)));
  }
  return out;
}

std::string render_kv(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::ostringstream out;
  for (const auto& [k, v] : kv) out << k << " = " << v << '\n';
  return out.str();
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace heyde
