// Command-line front end; talks to the engine only through the C interface.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "symplex.h"

namespace {

int emit(sx_status status, sx_report* report, const std::string& out_path) {
  if (!report) {
    std::cerr << "symplex: " << sx_last_error() << "\n";
    return status == SX_INTERNAL ? 1 : 2;
  }
  const std::string json = sx_report_json(report);
  const int code = sx_report_exit_code(report);
  sx_report_free(report);
  std::cout << json;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out || !(out << json)) {
      std::cerr << "symplex: cannot write " << out_path << "\n";
      return 2;
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact orthogonal and symplectic geometry on free modules over finite spaces"};
  app.set_version_flag("--version", std::string(sx_version()));
  app.require_subcommand(1);

  std::string scenario, out_path;
  std::optional<std::uint64_t> seed;
  bool timing = false;
  auto* run = app.add_subcommand("run", "Run a scenario file and print its report");
  run->add_option("scenario", scenario, "Scenario file (JSON)")->required();
  run->add_option("--seed", seed, "Seed for oracle tasks without their own");
  run->add_option("--out", out_path, "Also write the report here");
  run->add_flag("--timing", timing, "Record per-task wall time (makes reports non-reproducible)");

  std::string suite, field;
  std::uint64_t oracle_seed = 0;
  std::size_t max_rank = 0, cases = 0;
  auto* oracle = app.add_subcommand("oracle", "Run a property suite against brute-force or equation oracles");
  oracle->add_option("suite", suite, "Suite name (see 'suites')")->required();
  oracle->add_option("--seed", oracle_seed, "Seed");
  oracle->add_option("--max-rank", max_rank, "Largest module rank (0: suite default)");
  oracle->add_option("--cases", cases, "Number of random cases (0: suite default)");
  oracle->add_option("--field", field, "rationals or gf:p");
  oracle->add_option("--out", out_path, "Also write the report here");

  auto* suites = app.add_subcommand("suites", "List oracle suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (suites->parsed()) {
    for (std::size_t i = 0; i < sx_oracle_suite_count(); ++i) std::cout << sx_oracle_suite_name(i) << "\n";
    return 0;
  }

  sx_report* report = nullptr;
  if (run->parsed()) {
    sx_run_options options{};
    options.has_seed = seed.has_value();
    options.seed = seed.value_or(0);
    options.timing = timing;
    if (const char* env = std::getenv("SYMPLEX_FIELD"); env && *env) {
      options.default_field = env;
      options.default_field_source = "env SYMPLEX_FIELD";
    }
    const sx_status status = sx_run_scenario_file(scenario.c_str(), &options, &report);
    return emit(status, report, out_path);
  }

  sx_oracle_options options{};
  options.seed = oracle_seed;
  options.max_rank = max_rank;
  options.cases = cases;
  options.field = field.empty() ? nullptr : field.c_str();
  const sx_status status = sx_run_oracle(suite.c_str(), &options, &report);
  return emit(status, report, out_path);
}
