#include "symplex.h"

#include <string>

#include "io.hpp"
#include "symplex/error.hpp"
#include "symplex/scenario.hpp"
#include "symplex/symplectic.hpp"

struct sx_report {
  std::string json;
  int exit_code = 0;
};

struct sx_space {
  symplex::SpacePtr space;
};

struct sx_form {
  symplex::BilinearForm phi;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_code;

void clear_error() {
  last_error.clear();
  last_code.clear();
}

sx_status set_error(sx_status status, std::string message, std::string code = "") {
  last_error = std::move(message);
  last_code = std::move(code);
  return status;
}

sx_status from_error(const symplex::Error& e) {
  using symplex::ErrorCode;
  sx_status status = SX_MATH_ERROR;
  switch (e.code()) {
    case ErrorCode::ParseError:
      status = SX_PARSE_ERROR;
      break;
    case ErrorCode::UnknownSuite:
      status = SX_UNKNOWN_SUITE;
      break;
    case ErrorCode::InvalidField:
      status = SX_INVALID_ARGUMENT;
      break;
    case ErrorCode::Internal:
      status = SX_INTERNAL;
      break;
    default:
      break;
  }
  return set_error(status, e.what(), std::string(symplex::to_string(e.code())));
}

template <typename Body>
sx_status guarded(Body body) {
  clear_error();
  try {
    return body();
  } catch (const symplex::Error& e) {
    return from_error(e);
  } catch (const std::exception& e) {
    return set_error(SX_INTERNAL, e.what(), "Internal");
  } catch (...) {
    return set_error(SX_INTERNAL, "unknown exception", "Internal");
  }
}

sx_status deliver(symplex::RunResult result, sx_report** out) {
  *out = new sx_report{std::move(result.report), result.exit_code};
  switch ((*out)->exit_code) {
    case 0:
      return SX_OK;
    case 1:
      return set_error(SX_TASK_FAILURE, "some task failed; see the report");
    default:
      return set_error(SX_PARSE_ERROR, "malformed input; see the report", "ParseError");
  }
}

symplex::RunOptions run_options(const sx_run_options* options) {
  symplex::RunOptions out;
  if (!options) return out;
  if (options->has_seed) out.seed = options->seed;
  out.timing = options->timing != 0;
  if (options->default_field) out.default_field = symplex::Field::parse(options->default_field);
  if (options->default_field_source) out.default_field_source = options->default_field_source;
  return out;
}

}  // namespace

extern "C" {

const char* sx_version(void) { return SYMPLEX_VERSION; }
const char* sx_last_error(void) { return last_error.c_str(); }
const char* sx_last_error_code(void) { return last_code.c_str(); }

sx_status sx_run_scenario_file(const char* path, const sx_run_options* options, sx_report** out) {
  return guarded([&] {
    if (!path || !out) return set_error(SX_INVALID_ARGUMENT, "path and out are required");
    return deliver(symplex::run_scenario_file(path, run_options(options)), out);
  });
}

sx_status sx_run_scenario_text(const char* text, const sx_run_options* options, sx_report** out) {
  return guarded([&] {
    if (!text || !out) return set_error(SX_INVALID_ARGUMENT, "text and out are required");
    return deliver(symplex::run_scenario_text(text, run_options(options)), out);
  });
}

sx_status sx_run_oracle(const char* suite, const sx_oracle_options* options, sx_report** out) {
  return guarded([&] {
    if (!suite || !out) return set_error(SX_INVALID_ARGUMENT, "suite and out are required");
    symplex::OracleOptions o;
    if (options) {
      o.seed = options->seed;
      o.max_rank = options->max_rank;
      o.cases = options->cases;
      if (options->field) o.field = symplex::Field::parse(options->field);
    }
    bool known = false;
    for (const auto& name : symplex::oracle_suites()) known = known || name == suite;
    if (!known) {
      return set_error(SX_UNKNOWN_SUITE, std::string("unknown oracle suite '") + suite + "'", "UnknownSuite");
    }
    return deliver(symplex::oracle_report(suite, o), out);
  });
}

size_t sx_oracle_suite_count(void) { return symplex::oracle_suites().size(); }

const char* sx_oracle_suite_name(size_t i) {
  const auto& names = symplex::oracle_suites();
  return i < names.size() ? names[i].c_str() : nullptr;
}

const char* sx_report_json(const sx_report* report) { return report ? report->json.c_str() : ""; }
int sx_report_exit_code(const sx_report* report) { return report ? report->exit_code : 2; }
void sx_report_free(sx_report* report) { delete report; }

sx_status sx_space_new(size_t n_points, const char* const* points, size_t n_opens, const uint64_t* opens,
                       sx_space** out) {
  return guarded([&] {
    if (!out || (n_points && !points) || (n_opens && !opens)) return set_error(SX_INVALID_ARGUMENT, "null argument");
    std::vector<std::string> names(points, points + n_points);
    std::vector<symplex::PointSet> sets(opens, opens + n_opens);
    *out = new sx_space{symplex::share(symplex::FiniteSpace::validate_masks(std::move(names), sets))};
    return SX_OK;
  });
}

sx_status sx_space_fixture(const char* name, sx_space** out) {
  return guarded([&] {
    if (!name || !out) return set_error(SX_INVALID_ARGUMENT, "null argument");
    const std::string n = name;
    symplex::SpacePtr s;
    if (n == "point") s = symplex::fixtures::point();
    else if (n == "sierpinski") s = symplex::fixtures::sierpinski();
    else if (n == "discrete_two_point") s = symplex::fixtures::discrete_two_point();
    else if (n == "three_point") s = symplex::fixtures::three_point();
    else return set_error(SX_INVALID_ARGUMENT, "unknown fixture '" + n + "'");
    *out = new sx_space{s};
    return SX_OK;
  });
}

size_t sx_space_component_count(const sx_space* space) {
  return space ? space->space->component_count(space->space->top()) : 0;
}

void sx_space_free(sx_space* space) { delete space; }

sx_status sx_form_new(const sx_space* space, const char* field, size_t rank, const char* const* entries, sx_form** out) {
  return guarded([&] {
    if (!space || !out || (rank && !entries)) return set_error(SX_INVALID_ARGUMENT, "null argument");
    symplex::Field f = field ? symplex::Field::parse(field) : symplex::Field::rationals();
    symplex::FreeModule m(space->space, f, rank);
    std::vector<symplex::Matrix> grams;
    std::size_t k = 0;
    for (std::size_t c = 0; c < m.global_components(); ++c) {
      symplex::Matrix g(f, rank, rank);
      for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) g(i, j) = symplex::Scalar::parse(f, entries[k++]);
      grams.push_back(std::move(g));
    }
    *out = new sx_form{symplex::BilinearForm(m, std::move(grams))};
    return SX_OK;
  });
}

void sx_form_free(sx_form* form) { delete form; }

sx_status sx_form_is_orthosymmetric(const sx_form* form, int* out) {
  return guarded([&] {
    if (!form || !out) return set_error(SX_INVALID_ARGUMENT, "null argument");
    *out = symplex::classify_orthosymmetry(form->phi).orthosymmetric ? 1 : 0;
    return SX_OK;
  });
}

sx_status sx_form_is_nondegenerate(const sx_form* form, int* out) {
  return guarded([&] {
    if (!form || !out) return set_error(SX_INVALID_ARGUMENT, "null argument");
    *out = symplex::is_nondegenerate(form->phi) ? 1 : 0;
    return SX_OK;
  });
}

sx_status sx_form_normal_form(const sx_form* form, sx_report** out) {
  return guarded([&] {
    if (!form || !out) return set_error(SX_INVALID_ARGUMENT, "null argument");
    symplex::io::Json ps = symplex::io::Json::array();
    for (const auto& p : symplex::normal_form(form->phi)) ps.push_back(symplex::io::to_json(p));
    *out = new sx_report{symplex::io::Json{{"P", ps}}.dump() + "\n", 0};
    return SX_OK;
  });
}

}  // extern "C"
