#include "support.hpp"

#include "symplex/oracle.hpp"

using namespace support;

namespace {

OracleOptions small(std::uint64_t seed, std::size_t cases, std::size_t max_rank = 4) {
  OracleOptions o;
  o.seed = seed;
  o.cases = cases;
  o.max_rank = max_rank;
  return o;
}

TEST(Oracle, SuiteList) {
  const auto& names = oracle_suites();
  EXPECT_EQ(names.size(), 7u);
  EXPECT_NE(std::find(names.begin(), names.end(), "witt"), names.end());
}

TEST(Oracle, EveryRandomSuitePassesSmallRuns) {
  for (const char* suite : {"orthogonal_calculus", "reflexivity", "splitting", "gram_schmidt", "witt"}) {
    auto r = run_oracle(suite, small(1, 15));
    EXPECT_EQ(r.failed, 0u) << suite << ": " << r.counterexample.value_or("");
    EXPECT_EQ(r.checked + r.skipped, 15u) << suite;
  }
}

TEST(Oracle, ScholiumBothFields) {
  auto exhaustive = run_oracle("scholium_invertibility", OracleOptions{});
  EXPECT_EQ(exhaustive.failed, 0u);
  EXPECT_GT(exhaustive.checked, 0u);
  OracleOptions q;
  q.field = Field::rationals();
  q.cases = 200;
  auto random = run_oracle("scholium_invertibility", q);
  EXPECT_EQ(random.failed, 0u);
  EXPECT_EQ(random.checked, 200u);
}

TEST(Oracle, DichotomyRank1) {
  OracleOptions o;
  o.max_rank = 1;
  auto r = run_oracle("orthosymmetry_dichotomy", o);
  EXPECT_EQ(r.failed, 0u);
  EXPECT_EQ(r.skipped, 0u);
  EXPECT_GT(r.checked, 0u);
}

TEST(Oracle, Deterministic) {
  auto a = run_oracle("gram_schmidt", small(42, 10));
  auto b = run_oracle("gram_schmidt", small(42, 10));
  EXPECT_EQ(a.checked, b.checked);
  EXPECT_EQ(a.notes, b.notes);
}

TEST(Oracle, Errors) {
  EXPECT_SX_ERROR(run_oracle("no_such_suite", {}), ErrorCode::UnknownSuite);
  OracleOptions o;
  o.field = Field::rationals();
  EXPECT_SX_ERROR(run_oracle("orthosymmetry_dichotomy", o), ErrorCode::InvalidField);
}

}  // namespace
