#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "symplex/oracle.hpp"

namespace symplex {

struct RunOptions {
  std::optional<std::uint64_t> seed;
  bool timing = false;
  /// Field used when the scenario names none, and where it came from
  /// (echoed into the report header).
  std::optional<Field> default_field;
  std::string default_field_source = "builtin";
};

/// Report text (JSON) and process exit code: 0 all tasks ok, 1 some task
/// failed, 2 malformed input.
struct RunResult {
  std::string report;
  int exit_code = 0;
};

RunResult run_scenario_text(std::string_view text, const RunOptions& options = {});
RunResult run_scenario_file(const std::string& path, const RunOptions& options = {});

/// Oracle report; exit code 1 when some case failed.
RunResult oracle_report(std::string_view suite, const OracleOptions& options);

}  // namespace symplex
