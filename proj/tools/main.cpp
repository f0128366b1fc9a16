// Command-line front end: reads a job config from a file or stdin, runs the
// requested verification, prints the report, and exits 0/1/2 for
// PASS/FAIL/ERROR.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "heyde/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the Heyde-type symmetry characterization on R^n x D"};

  std::string config_path = "-";
  std::string tol_text;
  std::int64_t bound = 0;
  std::string format = "human";
  app.add_option("config", config_path, "config file path, or '-' for stdin");
  app.add_option("--tol", tol_text, "residual tolerance as a rational, e.g. 1/1000000000");
  app.add_option("--bound", bound, "exhaustive-enumeration bound on the group order");
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"human", "machine"}));
  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (config_path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "cannot open config file: " << config_path << '\n';
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  heyde::CliOverrides overrides;
  if (!tol_text.empty()) {
    auto tol = heyde::parse_rational(tol_text);
    if (!tol || *tol <= 0) {
      std::cerr << "--tol must be a positive rational\n";
      return 2;
    }
    overrides.tol = *tol;
  }
  if (bound > 0) overrides.bound = bound;

  heyde::Report rep = heyde::execute_config_text(text, overrides);
  std::cout << heyde::render_report(rep, format == "machine");
  return heyde::exit_code(rep);
}
