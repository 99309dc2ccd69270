#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symplex/scalar.hpp"

namespace symplex {

/// Zero fields mean "suite default".
struct OracleOptions {
  std::uint64_t seed = 0;
  std::size_t max_rank = 0;
  std::optional<Field> field;
  std::size_t cases = 0;
};

struct OracleResult {
  std::string suite;
  Field field;
  std::uint64_t seed = 0;
  std::size_t max_rank = 0;
  std::size_t checked = 0;
  std::size_t failed = 0;
  /// Cases set aside: Witt instances stopped by the freeness gate, or
  /// exhaustive sweeps over the work budget.
  std::size_t skipped = 0;
  std::optional<std::string> counterexample;
  std::vector<std::string> notes;
};

const std::vector<std::string>& oracle_suites();

/// Throws UnknownSuite, or InvalidField when an exhaustive suite is asked for
/// the rationals.
OracleResult run_oracle(std::string_view suite, const OracleOptions& options);

}  // namespace symplex
