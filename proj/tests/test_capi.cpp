#include <gtest/gtest.h>

#include <string>

#include "symplex.h"

namespace {

const std::string kData = SYMPLEX_TEST_DATA;

TEST(CApi, Version) { EXPECT_STREQ(sx_version(), "0.1.0"); }

TEST(CApi, RunScenarioFile) {
  sx_report* report = nullptr;
  ASSERT_EQ(sx_run_scenario_file((kData + "/normal_form_sierpinski.json").c_str(), nullptr, &report), SX_OK);
  ASSERT_NE(report, nullptr);
  EXPECT_EQ(sx_report_exit_code(report), 0);
  EXPECT_NE(std::string(sx_report_json(report)).find("\"verified\": true"), std::string::npos);
  sx_report_free(report);
}

TEST(CApi, ParseErrorStillReports) {
  sx_report* report = nullptr;
  EXPECT_EQ(sx_run_scenario_text("{", nullptr, &report), SX_PARSE_ERROR);
  ASSERT_NE(report, nullptr);
  EXPECT_EQ(sx_report_exit_code(report), 2);
  sx_report_free(report);
}

TEST(CApi, RunOptions) {
  const char* text = R"({"space": {"points": ["x"], "opens": [[], ["x"]]}, "rank": 2,
                         "gram": [[["0","1"],["-1","0"]]], "tasks": [{"op": "normal_form"}]})";
  sx_run_options options{17, 1, 0, "gf:5", "test"};
  sx_report* report = nullptr;
  ASSERT_EQ(sx_run_scenario_text(text, &options, &report), SX_OK);
  std::string json = sx_report_json(report);
  EXPECT_NE(json.find("\"seed\": 17"), std::string::npos);
  EXPECT_NE(json.find("\"field\": \"gf:5\""), std::string::npos);
  EXPECT_NE(json.find("\"field_source\": \"test\""), std::string::npos);
  sx_report_free(report);
  sx_run_options bad{0, 0, 0, "gf:6", nullptr};
  report = nullptr;
  EXPECT_EQ(sx_run_scenario_text(text, &bad, &report), SX_INVALID_ARGUMENT);
  EXPECT_EQ(report, nullptr);
  EXPECT_STREQ(sx_last_error_code(), "InvalidField");
}

TEST(CApi, Oracle) {
  ASSERT_EQ(sx_oracle_suite_count(), 7u);
  EXPECT_EQ(sx_oracle_suite_name(99), nullptr);
  sx_oracle_options options{1, 4, 5, nullptr};
  sx_report* report = nullptr;
  ASSERT_EQ(sx_run_oracle("gram_schmidt", &options, &report), SX_OK);
  EXPECT_EQ(sx_report_exit_code(report), 0);
  sx_report_free(report);
  report = nullptr;
  EXPECT_EQ(sx_run_oracle("nope", &options, &report), SX_UNKNOWN_SUITE);
  EXPECT_EQ(report, nullptr);
  EXPECT_STREQ(sx_last_error_code(), "UnknownSuite");
}

TEST(CApi, SpacesAndForms) {
  const char* points[] = {"a", "b"};
  const uint64_t opens[] = {0, 1, 2, 3};
  sx_space* space = nullptr;
  ASSERT_EQ(sx_space_new(2, points, 4, opens, &space), SX_OK);
  EXPECT_EQ(sx_space_component_count(space), 2u);

  const char* entries[] = {"0", "2", "-2", "0", "0", "1", "-1", "0"};
  sx_form* form = nullptr;
  ASSERT_EQ(sx_form_new(space, "rationals", 2, entries, &form), SX_OK);
  int flag = -1;
  ASSERT_EQ(sx_form_is_orthosymmetric(form, &flag), SX_OK);
  EXPECT_EQ(flag, 1);
  ASSERT_EQ(sx_form_is_nondegenerate(form, &flag), SX_OK);
  EXPECT_EQ(flag, 1);
  sx_report* nf = nullptr;
  ASSERT_EQ(sx_form_normal_form(form, &nf), SX_OK);
  EXPECT_NE(std::string(sx_report_json(nf)).find("\"1/2\""), std::string::npos);
  sx_report_free(nf);
  sx_form_free(form);

  const char* symmetric[] = {"1", "0", "0", "1", "1", "0", "0", "1"};
  ASSERT_EQ(sx_form_new(space, "rationals", 2, symmetric, &form), SX_OK);
  nf = nullptr;
  EXPECT_EQ(sx_form_normal_form(form, &nf), SX_MATH_ERROR);
  EXPECT_STREQ(sx_last_error_code(), "NotAlternating");
  sx_form_free(form);
  sx_space_free(space);

  const uint64_t bad_opens[] = {0, 1, 2};
  space = nullptr;
  EXPECT_EQ(sx_space_new(2, points, 3, bad_opens, &space), SX_MATH_ERROR);
  EXPECT_STREQ(sx_last_error_code(), "MissingEmptyOrTotal");
  EXPECT_EQ(sx_space_fixture("klein_bottle", &space), SX_INVALID_ARGUMENT);
  ASSERT_EQ(sx_space_fixture("three_point", &space), SX_OK);
  EXPECT_EQ(sx_space_component_count(space), 1u);
  sx_space_free(space);
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(sx_run_scenario_text(nullptr, nullptr, nullptr), SX_INVALID_ARGUMENT);
  EXPECT_EQ(sx_form_is_orthosymmetric(nullptr, nullptr), SX_INVALID_ARGUMENT);
  sx_report_free(nullptr);
  sx_space_free(nullptr);
  sx_form_free(nullptr);
}

}  // namespace
