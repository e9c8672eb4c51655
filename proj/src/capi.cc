// Copyright 2026 The rtlsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rtlsym.h"

#include <exception>
#include <string>
#include <utility>

#include "elab/design.h"
#include "elab/elaborate.h"
#include "exec/executor.h"
#include "exec/harness.h"
#include "exec/testsuite.h"
#include "frontend/parser.h"
#include "sim/coverage.h"
#include "sim/simulate.h"
#include "support/diag.h"

using namespace rtlsym;

// Each public handle owns the underlying C++ object plus any rendered
// text handed out through const char* getters.
struct rtlsym_design {
  ir::RtlDesign design;
};

struct rtlsym_harness {
  Harness harness;
};

struct rtlsym_result {
  TestSuite suite;
  ExplorationStats stats;
  std::string suite_text;
  std::string stats_text;
};

struct rtlsym_coverage {
  CoverageData data;
  std::string text;
};

struct rtlsym_report {
  CoverageReport report;
  std::string human;
  std::string machine;
};

namespace {

thread_local std::string g_last_error;

rtlsym_status MapCode(StatusCode code) {
  switch (code) {
    case StatusCode::kOk: return RTLSYM_OK;
    case StatusCode::kIoError: return RTLSYM_IO_ERROR;
    case StatusCode::kLexError: return RTLSYM_LEX_ERROR;
    case StatusCode::kParseError: return RTLSYM_PARSE_ERROR;
    case StatusCode::kElabError: return RTLSYM_ELAB_ERROR;
    case StatusCode::kWidthError: return RTLSYM_WIDTH_ERROR;
    case StatusCode::kHarnessError: return RTLSYM_HARNESS_ERROR;
    case StatusCode::kVectorError: return RTLSYM_VECTOR_ERROR;
    case StatusCode::kFormatError: return RTLSYM_FORMAT_ERROR;
    case StatusCode::kSolverError: return RTLSYM_SOLVER_ERROR;
    case StatusCode::kMissingVar: return RTLSYM_MISSING_VAR;
    case StatusCode::kInternalError: return RTLSYM_INTERNAL_ERROR;
    case StatusCode::kUsageError: return RTLSYM_USAGE_ERROR;
  }
  return RTLSYM_INTERNAL_ERROR;
}

rtlsym_status Fail(rtlsym_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs one fallible API body, translating exceptions into status codes
// and maintaining the thread-local error message.
template <typename Fn>
rtlsym_status Api(Fn&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const Diag& d) {
    return Fail(MapCode(d.code()), d.what());
  } catch (const std::exception& e) {
    return Fail(RTLSYM_INTERNAL_ERROR, e.what());
  } catch (...) {
    return Fail(RTLSYM_INTERNAL_ERROR, "unknown exception");
  }
}

rtlsym_status UsageFail(const std::string& message) {
  return Fail(RTLSYM_USAGE_ERROR, message);
}

}  // namespace

extern "C" {

const char* rtlsym_version(void) { return "1.0.0"; }

const char* rtlsym_status_name(rtlsym_status status) {
  switch (status) {
    case RTLSYM_OK: return "ok";
    case RTLSYM_IO_ERROR: return "io-error";
    case RTLSYM_LEX_ERROR: return "lex-error";
    case RTLSYM_PARSE_ERROR: return "parse-error";
    case RTLSYM_ELAB_ERROR: return "elab-error";
    case RTLSYM_WIDTH_ERROR: return "width-error";
    case RTLSYM_HARNESS_ERROR: return "harness-error";
    case RTLSYM_VECTOR_ERROR: return "vector-error";
    case RTLSYM_FORMAT_ERROR: return "format-error";
    case RTLSYM_SOLVER_ERROR: return "solver-error";
    case RTLSYM_MISSING_VAR: return "missing-var";
    case RTLSYM_INTERNAL_ERROR: return "internal-error";
    case RTLSYM_USAGE_ERROR: return "usage-error";
  }
  return "unknown";
}

const char* rtlsym_last_error(void) { return g_last_error.c_str(); }

/* ------------------------------------------------------------------ */

rtlsym_status rtlsym_design_load(const char* path, rtlsym_design** out) {
  return Api([&]() -> rtlsym_status {
    if (path == nullptr || out == nullptr) {
      return UsageFail("rtlsym_design_load requires path and out");
    }
    auto handle = new rtlsym_design{Elaborate(ParseFile(path))};
    *out = handle;
    return RTLSYM_OK;
  });
}

rtlsym_status rtlsym_design_parse(const char* text, const char* filename,
                                  rtlsym_design** out) {
  return Api([&]() -> rtlsym_status {
    if (text == nullptr || filename == nullptr || out == nullptr) {
      return UsageFail("rtlsym_design_parse requires text, filename, and out");
    }
    auto handle = new rtlsym_design{Elaborate(ParseSource(text, filename))};
    *out = handle;
    return RTLSYM_OK;
  });
}

void rtlsym_design_free(rtlsym_design* design) { delete design; }

const char* rtlsym_design_name(const rtlsym_design* design) {
  return design->design.name.c_str();
}

int64_t rtlsym_design_signal_count(const rtlsym_design* design) {
  return static_cast<int64_t>(design->design.signals.size());
}

int64_t rtlsym_design_process_count(const rtlsym_design* design) {
  return static_cast<int64_t>(design->design.processes.size());
}

int64_t rtlsym_design_statement_count(const rtlsym_design* design) {
  return static_cast<int64_t>(design->design.stmt_table.size());
}

int64_t rtlsym_design_branch_count(const rtlsym_design* design) {
  return static_cast<int64_t>(design->design.branch_table.size());
}

int64_t rtlsym_design_warning_count(const rtlsym_design* design) {
  return static_cast<int64_t>(design->design.warnings.size());
}

const char* rtlsym_design_warning(const rtlsym_design* design, int64_t index) {
  const auto& warnings = design->design.warnings;
  if (index < 0 || index >= static_cast<int64_t>(warnings.size())) {
    return nullptr;
  }
  return warnings[static_cast<size_t>(index)].c_str();
}

/* ------------------------------------------------------------------ */

rtlsym_status rtlsym_harness_load(const char* path, rtlsym_harness** out) {
  return Api([&]() -> rtlsym_status {
    if (path == nullptr || out == nullptr) {
      return UsageFail("rtlsym_harness_load requires path and out");
    }
    auto handle = new rtlsym_harness{LoadHarness(path)};
    *out = handle;
    return RTLSYM_OK;
  });
}

rtlsym_status rtlsym_harness_parse(const char* text, const char* filename,
                                   rtlsym_harness** out) {
  return Api([&]() -> rtlsym_status {
    if (text == nullptr || filename == nullptr || out == nullptr) {
      return UsageFail("rtlsym_harness_parse requires text, filename, and out");
    }
    auto handle = new rtlsym_harness{ParseHarness(text, filename)};
    *out = handle;
    return RTLSYM_OK;
  });
}

void rtlsym_harness_free(rtlsym_harness* harness) { delete harness; }

rtlsym_status rtlsym_harness_validate(const rtlsym_harness* harness,
                                      const rtlsym_design* design) {
  return Api([&]() -> rtlsym_status {
    if (harness == nullptr || design == nullptr) {
      return UsageFail("rtlsym_harness_validate requires harness and design");
    }
    ValidateHarness(harness->harness, design->design);
    return RTLSYM_OK;
  });
}

/* ------------------------------------------------------------------ */

void rtlsym_testgen_options_init(rtlsym_testgen_options* options) {
  if (options == nullptr) return;
  options->max_cycles = 0;
  options->max_paths = 0;
  options->max_solver_calls = 0;
  options->timeout_ms = 0;
  options->jobs = 1;
  options->solver = RTLSYM_SOLVER_BUILTIN;
  options->solver_cmd = nullptr;
  options->seed = 0;
}

rtlsym_status rtlsym_testgen(const rtlsym_design* design,
                             const rtlsym_harness* harness,
                             const rtlsym_testgen_options* options,
                             rtlsym_result** out) {
  return Api([&]() -> rtlsym_status {
    if (design == nullptr || harness == nullptr || out == nullptr) {
      return UsageFail("rtlsym_testgen requires design, harness, and out");
    }
    rtlsym_testgen_options defaults;
    rtlsym_testgen_options_init(&defaults);
    const rtlsym_testgen_options& opt = options ? *options : defaults;

    if (opt.max_cycles < 0 || opt.max_paths < 0 || opt.max_solver_calls < 0 ||
        opt.timeout_ms < 0) {
      return UsageFail("testgen budget overrides must be positive");
    }
    if (opt.jobs < 1) return UsageFail("testgen requires jobs >= 1");
    if (opt.solver != RTLSYM_SOLVER_BUILTIN &&
        opt.solver != RTLSYM_SOLVER_EXTERNAL) {
      return UsageFail("unknown solver backend value");
    }
    if (opt.solver == RTLSYM_SOLVER_EXTERNAL &&
        (opt.solver_cmd == nullptr || opt.solver_cmd[0] == '\0')) {
      return UsageFail("the external solver backend requires solver_cmd");
    }

    Harness run = harness->harness;
    if (opt.max_cycles > 0) run.max_cycles = static_cast<int>(opt.max_cycles);
    if (opt.max_paths > 0) run.budgets.max_paths = opt.max_paths;
    if (opt.max_solver_calls > 0) {
      run.budgets.max_solver_calls = opt.max_solver_calls;
    }
    if (opt.timeout_ms > 0) run.budgets.wall_clock_ms = opt.timeout_ms;

    ExecOptions exec;
    exec.jobs = opt.jobs;
    if (opt.solver == RTLSYM_SOLVER_EXTERNAL) {
      exec.solver.backend = SolverConfig::Backend::kExternal;
      exec.solver.external_cmd = opt.solver_cmd;
    }

    Executor executor(design->design, run, exec);
    ExplorationResult result = executor.Run();
    auto handle = new rtlsym_result{std::move(result.suite), result.stats,
                                    std::string(), std::string()};
    handle->suite_text = FormatTestSuite(handle->suite, design->design);
    handle->stats_text = FormatStats(handle->stats);
    *out = handle;
    return RTLSYM_OK;
  });
}

void rtlsym_result_free(rtlsym_result* result) { delete result; }

const char* rtlsym_result_suite_text(const rtlsym_result* result) {
  return result->suite_text.c_str();
}

const char* rtlsym_result_stats_text(const rtlsym_result* result) {
  return result->stats_text.c_str();
}

int64_t rtlsym_result_test_count(const rtlsym_result* result) {
  return static_cast<int64_t>(result->suite.tests.size());
}

const char* rtlsym_result_budget_exhausted(const rtlsym_result* result) {
  return result->stats.budget_exhausted.c_str();
}

/* ------------------------------------------------------------------ */

rtlsym_status rtlsym_replay(const rtlsym_design* design,
                            const rtlsym_harness* harness,
                            const char* suite_text, const char* suite_name,
                            rtlsym_coverage** out) {
  return Api([&]() -> rtlsym_status {
    if (design == nullptr || harness == nullptr || suite_text == nullptr ||
        out == nullptr) {
      return UsageFail(
          "rtlsym_replay requires design, harness, suite_text, and out");
    }
    TestSuite suite =
        ParseTestSuite(suite_text, suite_name ? suite_name : "<suite>");
    if (suite.design != design->design.name) {
      throw Diag(StatusCode::kVectorError,
                 "test suite targets design '" + suite.design +
                     "' but the design is '" + design->design.name + "'");
    }
    CoverageData merged = EmptyCoverage(design->design);
    for (const TestCase& test : suite.tests) {
      merged = Merge(
          merged, Simulate(design->design, harness->harness, test).coverage);
    }
    auto handle = new rtlsym_coverage{std::move(merged), std::string()};
    handle->text = FormatCoverage(handle->data);
    *out = handle;
    return RTLSYM_OK;
  });
}

void rtlsym_coverage_free(rtlsym_coverage* coverage) { delete coverage; }

const char* rtlsym_coverage_text(const rtlsym_coverage* coverage) {
  return coverage->text.c_str();
}

rtlsym_status rtlsym_coverage_parse(const char* text, const char* filename,
                                    rtlsym_coverage** out) {
  return Api([&]() -> rtlsym_status {
    if (text == nullptr || out == nullptr) {
      return UsageFail("rtlsym_coverage_parse requires text and out");
    }
    CoverageData data = ParseCoverage(text, filename ? filename : "<coverage>");
    auto handle = new rtlsym_coverage{std::move(data), std::string()};
    handle->text = FormatCoverage(handle->data);
    *out = handle;
    return RTLSYM_OK;
  });
}

rtlsym_status rtlsym_coverage_merge(const rtlsym_coverage* a,
                                    const rtlsym_coverage* b,
                                    rtlsym_coverage** out) {
  return Api([&]() -> rtlsym_status {
    if (a == nullptr || b == nullptr || out == nullptr) {
      return UsageFail("rtlsym_coverage_merge requires a, b, and out");
    }
    auto handle = new rtlsym_coverage{Merge(a->data, b->data), std::string()};
    handle->text = FormatCoverage(handle->data);
    *out = handle;
    return RTLSYM_OK;
  });
}

/* ------------------------------------------------------------------ */

rtlsym_status rtlsym_report_create(const rtlsym_design* design,
                                   const rtlsym_coverage* coverage,
                                   rtlsym_report** out) {
  return Api([&]() -> rtlsym_status {
    if (design == nullptr || coverage == nullptr || out == nullptr) {
      return UsageFail("rtlsym_report_create requires design, coverage, out");
    }
    if (coverage->data.design != design->design.name) {
      throw Diag(StatusCode::kFormatError,
                 "coverage belongs to design '" + coverage->data.design +
                     "' but the design is '" + design->design.name + "'");
    }
    CoverageReport report = Report(design->design, coverage->data);
    auto handle = new rtlsym_report{std::move(report), std::string(),
                                    std::string()};
    handle->human = RenderReport(handle->report, design->design.name);
    handle->machine = FormatReport(handle->report, design->design.name);
    *out = handle;
    return RTLSYM_OK;
  });
}

void rtlsym_report_free(rtlsym_report* report) { delete report; }

const char* rtlsym_report_human(const rtlsym_report* report) {
  return report->human.c_str();
}

const char* rtlsym_report_machine(const rtlsym_report* report) {
  return report->machine.c_str();
}

int64_t rtlsym_report_stmt_pct_tenths(const rtlsym_report* report) {
  return report->report.stmt_pct_tenths;
}

int64_t rtlsym_report_branch_pct_tenths(const rtlsym_report* report) {
  return report->report.branch_pct_tenths;
}

} /* extern "C" */
