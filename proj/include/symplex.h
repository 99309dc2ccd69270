/* C interface to the symplex engine. All strings are UTF-8; every function
 * that can fail returns an sx_status and leaves a message retrievable with
 * sx_last_error() on the calling thread. */
#ifndef SYMPLEX_H
#define SYMPLEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SYMPLEX_API __declspec(dllexport)
#else
#define SYMPLEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sx_status {
  SX_OK = 0,
  SX_TASK_FAILURE = 1,  /* report produced, some task or oracle case failed */
  SX_PARSE_ERROR = 2,   /* report produced, input malformed */
  SX_INVALID_ARGUMENT = 3,
  SX_UNKNOWN_SUITE = 4,
  SX_MATH_ERROR = 5,    /* input rejected by a hypothesis check, see sx_last_error_code() */
  SX_INTERNAL = 6
} sx_status;

typedef struct sx_report sx_report;
typedef struct sx_space sx_space;
typedef struct sx_form sx_form;

typedef struct sx_run_options {
  uint64_t seed;
  int has_seed;
  int timing;
  const char* default_field;        /* NULL: rationals */
  const char* default_field_source; /* echoed into the report header; NULL: "builtin" */
} sx_run_options;

typedef struct sx_oracle_options {
  uint64_t seed;
  size_t max_rank; /* 0: suite default */
  size_t cases;    /* 0: suite default */
  const char* field; /* NULL: suite default */
} sx_oracle_options;

SYMPLEX_API const char* sx_version(void);
SYMPLEX_API const char* sx_last_error(void);
/* Symbolic code of the last failure, e.g. "NotAlternating"; "" after success. */
SYMPLEX_API const char* sx_last_error_code(void);

/* Scenario runs. On SX_OK, SX_TASK_FAILURE and SX_PARSE_ERROR *out holds a
 * report that the caller releases with sx_report_free. */
SYMPLEX_API sx_status sx_run_scenario_file(const char* path, const sx_run_options* options, sx_report** out);
SYMPLEX_API sx_status sx_run_scenario_text(const char* text, const sx_run_options* options, sx_report** out);
SYMPLEX_API sx_status sx_run_oracle(const char* suite, const sx_oracle_options* options, sx_report** out);
SYMPLEX_API size_t sx_oracle_suite_count(void);
SYMPLEX_API const char* sx_oracle_suite_name(size_t i);

SYMPLEX_API const char* sx_report_json(const sx_report* report);
SYMPLEX_API int sx_report_exit_code(const sx_report* report);
SYMPLEX_API void sx_report_free(sx_report* report);

/* Finite spaces. opens[i] is a bitmask over points (bit j = points[j]). */
SYMPLEX_API sx_status sx_space_new(size_t n_points, const char* const* points, size_t n_opens, const uint64_t* opens,
                                   sx_space** out);
/* "point", "sierpinski", "discrete_two_point" or "three_point". */
SYMPLEX_API sx_status sx_space_fixture(const char* name, sx_space** out);
SYMPLEX_API size_t sx_space_component_count(const sx_space* space);
SYMPLEX_API void sx_space_free(sx_space* space);

/* entries: component_count * rank * rank scalar strings, each Gram matrix
 * row-major, components ordered by least point. */
SYMPLEX_API sx_status sx_form_new(const sx_space* space, const char* field, size_t rank, const char* const* entries,
                                  sx_form** out);
SYMPLEX_API void sx_form_free(sx_form* form);
SYMPLEX_API sx_status sx_form_is_orthosymmetric(const sx_form* form, int* out);
SYMPLEX_API sx_status sx_form_is_nondegenerate(const sx_form* form, int* out);
/* JSON {"P": [matrix per component]} with P^T G P = A_2n. */
SYMPLEX_API sx_status sx_form_normal_form(const sx_form* form, sx_report** out);

#ifdef __cplusplus
}
#endif

#endif
