/* Copyright 2026 The rtlsym Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Public C interface to the rtlsym library.
 *
 * The library turns a synthesizable Verilog design plus a test harness
 * into a concrete test-vector suite via cycle-bounded symbolic execution,
 * replays suites on a two-state concrete simulator, and reports statement
 * and branch coverage.
 *
 * Conventions:
 *   - Every fallible call returns an rtlsym_status and, on success, stores
 *     a new handle through its `out` parameter. Handles are freed with
 *     their matching *_free function; freeing NULL is a no-op.
 *   - On failure, `out` is left untouched and rtlsym_last_error() returns
 *     a message for the failing call (thread-local; overwritten by the
 *     next fallible call on the same thread).
 *   - `const char*` getters return storage owned by the queried handle,
 *     valid until that handle is freed.
 *   - Handles are not thread-safe individually, but distinct handles may
 *     be used from distinct threads freely.
 */

#ifndef RTLSYM_H_
#define RTLSYM_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rtlsym_status {
  RTLSYM_OK = 0,
  RTLSYM_IO_ERROR,       /* file unreadable / unwritable */
  RTLSYM_LEX_ERROR,      /* malformed token in Verilog source */
  RTLSYM_PARSE_ERROR,    /* Verilog syntax error */
  RTLSYM_ELAB_ERROR,     /* design is not legal for this subset */
  RTLSYM_WIDTH_ERROR,    /* expression width rule violation */
  RTLSYM_HARNESS_ERROR,  /* harness schema or design mismatch */
  RTLSYM_VECTOR_ERROR,   /* test vector does not conform to the design */
  RTLSYM_FORMAT_ERROR,   /* malformed suite / coverage / report text */
  RTLSYM_SOLVER_ERROR,   /* solver backend failed (spawn, parse, model) */
  RTLSYM_MISSING_VAR,    /* evaluation with an incomplete assignment */
  RTLSYM_INTERNAL_ERROR, /* invariant violation inside the library */
  RTLSYM_USAGE_ERROR     /* invalid argument to an API call */
} rtlsym_status;

typedef enum rtlsym_solver_backend {
  RTLSYM_SOLVER_BUILTIN = 0, /* bit-blasting + built-in CDCL SAT solver */
  RTLSYM_SOLVER_EXTERNAL = 1 /* SMT-LIB2 subprocess (e.g. "z3 -in") */
} rtlsym_solver_backend;

/* An elaborated design: signals, processes, statement/branch tables. */
typedef struct rtlsym_design rtlsym_design;
/* A test-generation harness: symbolic/fixed inputs, clocking, budgets. */
typedef struct rtlsym_harness rtlsym_harness;
/* One symbolic-execution run: the generated suite and its statistics. */
typedef struct rtlsym_result rtlsym_result;
/* Statement and branch hit counters for one design. */
typedef struct rtlsym_coverage rtlsym_coverage;
/* A rendered coverage summary with uncovered-location rows. */
typedef struct rtlsym_report rtlsym_report;

/* Library version as "major.minor.patch". */
const char* rtlsym_version(void);

/* Stable lowercase name for a status code ("parse-error", ...). */
const char* rtlsym_status_name(rtlsym_status status);

/* Message for this thread's most recent failing call; "" if the most
 * recent fallible call succeeded. Parse/elaboration diagnostics follow
 * the compiler convention "file:line:col: error: message". */
const char* rtlsym_last_error(void);

/* ---------------------------------------------------------------------
 * Designs
 */

/* Parses and elaborates one Verilog module. */
rtlsym_status rtlsym_design_load(const char* path, rtlsym_design** out);
rtlsym_status rtlsym_design_parse(const char* text, const char* filename,
                                  rtlsym_design** out);
void rtlsym_design_free(rtlsym_design* design);

const char* rtlsym_design_name(const rtlsym_design* design);
int64_t rtlsym_design_signal_count(const rtlsym_design* design);
int64_t rtlsym_design_process_count(const rtlsym_design* design);
int64_t rtlsym_design_statement_count(const rtlsym_design* design);
int64_t rtlsym_design_branch_count(const rtlsym_design* design);
int64_t rtlsym_design_warning_count(const rtlsym_design* design);
/* NULL when index is out of range. */
const char* rtlsym_design_warning(const rtlsym_design* design, int64_t index);

/* ---------------------------------------------------------------------
 * Harnesses
 */

rtlsym_status rtlsym_harness_load(const char* path, rtlsym_harness** out);
rtlsym_status rtlsym_harness_parse(const char* text, const char* filename,
                                   rtlsym_harness** out);
void rtlsym_harness_free(rtlsym_harness* harness);

/* Cross-checks the harness against a design: module name, signal
 * existence/direction/width, and that every input is driven exactly
 * once. Returns RTLSYM_HARNESS_ERROR on any mismatch. */
rtlsym_status rtlsym_harness_validate(const rtlsym_harness* harness,
                                      const rtlsym_design* design);

/* ---------------------------------------------------------------------
 * Test generation
 */

typedef struct rtlsym_testgen_options {
  /* Budget overrides. A value > 0 replaces the harness setting; leave the
   * initialized value to keep what the harness declares. */
  int64_t max_cycles;
  int64_t max_paths;
  int64_t max_solver_calls;
  int64_t timeout_ms;

  /* Worker threads for path exploration (>= 1). Results are byte-identical
   * for every value; runs with explicit budgets are serialized internally
   * so the trip point stays reproducible. */
  int32_t jobs;

  /* rtlsym_solver_backend value. RTLSYM_SOLVER_EXTERNAL requires
   * solver_cmd: a shell command reading SMT-LIB2 on stdin and writing the
   * verdict (and model) to stdout. */
  int32_t solver;
  const char* solver_cmd;

  /* Recorded for interface stability; exploration and solving are fully
   * deterministic, so outputs do not depend on it. */
  uint64_t seed;
} rtlsym_testgen_options;

/* Fills `options` with defaults: keep harness budgets, one worker,
 * built-in solver, seed 0. Call before overriding fields. */
void rtlsym_testgen_options_init(rtlsym_testgen_options* options);

/* Runs cycle-bounded symbolic execution of `design` under `harness` and
 * solves each completed path into a concrete test case. Budget exhaustion
 * is not an error: the partial suite is returned and the tripped budget
 * name is recorded (see rtlsym_result_budget_exhausted). `options` may be
 * NULL for all defaults. */
rtlsym_status rtlsym_testgen(const rtlsym_design* design,
                             const rtlsym_harness* harness,
                             const rtlsym_testgen_options* options,
                             rtlsym_result** out);
void rtlsym_result_free(rtlsym_result* result);

/* The generated suite in the line-oriented test-suite format. */
const char* rtlsym_result_suite_text(const rtlsym_result* result);
/* Run statistics as `key=value` lines; the volatile wall-clock and memory
 * lines come last, everything above them is deterministic. */
const char* rtlsym_result_stats_text(const rtlsym_result* result);
int64_t rtlsym_result_test_count(const rtlsym_result* result);
/* Name of the budget that stopped exploration, or "" if none did. */
const char* rtlsym_result_budget_exhausted(const rtlsym_result* result);

/* ---------------------------------------------------------------------
 * Replay and coverage
 */

/* Replays every test in a serialized suite on the concrete simulator and
 * merges the per-test statement/branch counters. `suite_name` labels the
 * suite in diagnostics (typically its path). */
rtlsym_status rtlsym_replay(const rtlsym_design* design,
                            const rtlsym_harness* harness,
                            const char* suite_text, const char* suite_name,
                            rtlsym_coverage** out);
void rtlsym_coverage_free(rtlsym_coverage* coverage);

/* Counter-file form: `coverage <design> stmts=<n> branches=<m>` header
 * plus one line per statement and branch arm. */
const char* rtlsym_coverage_text(const rtlsym_coverage* coverage);
rtlsym_status rtlsym_coverage_parse(const char* text, const char* filename,
                                    rtlsym_coverage** out);
/* Pointwise sum; both operands must come from the same design. */
rtlsym_status rtlsym_coverage_merge(const rtlsym_coverage* a,
                                    const rtlsym_coverage* b,
                                    rtlsym_coverage** out);

/* ---------------------------------------------------------------------
 * Reports
 */

/* Summarizes coverage against the design's statement and branch tables.
 * Fails with RTLSYM_FORMAT_ERROR when the coverage data belongs to a
 * different design. */
rtlsym_status rtlsym_report_create(const rtlsym_design* design,
                                   const rtlsym_coverage* coverage,
                                   rtlsym_report** out);
void rtlsym_report_free(rtlsym_report* report);

/* Human-readable summary table. */
const char* rtlsym_report_human(const rtlsym_report* report);
/* Machine form: `key=value` lines plus uncovered `file:line:col` rows. */
const char* rtlsym_report_machine(const rtlsym_report* report);
/* Percentages scaled by 10 and rounded half-up (984 = 98.4%). */
int64_t rtlsym_report_stmt_pct_tenths(const rtlsym_report* report);
int64_t rtlsym_report_branch_pct_tenths(const rtlsym_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RTLSYM_H_ */
