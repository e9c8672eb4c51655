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

// Exercises the public C interface exactly as an embedding application
// would: through rtlsym.h and the shared library, never the C++ headers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <memory>
#include <string>

#include "rtlsym.h"

namespace {

std::string DataPath(const std::string& rel) {
  return std::string(RTLSYM_TEST_DATA_DIR) + "/" + rel;
}

constexpr const char kMuxSource[] =
    "module mux(input din_0, input din_1, input sel, output reg mux_out);\n"
    "always @(sel or din_0 or din_1) begin\n"
    "  if (sel == 1'b0) begin\n"
    "    mux_out = din_0;\n"
    "  end else begin\n"
    "    mux_out = din_1;\n"
    "  end\n"
    "end\n"
    "endmodule\n";

constexpr const char kMuxHarness[] =
    "top mux\n"
    "max_cycles 1\n"
    "symbolic sel bits=1\n"
    "fixed din_0 1\n"
    "fixed din_1 0\n";

template <auto FreeFn>
struct FnDeleter {
  template <typename T>
  void operator()(T* ptr) const {
    FreeFn(ptr);
  }
};

using DesignPtr = std::unique_ptr<rtlsym_design, FnDeleter<rtlsym_design_free>>;
using HarnessPtr =
    std::unique_ptr<rtlsym_harness, FnDeleter<rtlsym_harness_free>>;
using ResultPtr = std::unique_ptr<rtlsym_result, FnDeleter<rtlsym_result_free>>;
using CoveragePtr =
    std::unique_ptr<rtlsym_coverage, FnDeleter<rtlsym_coverage_free>>;
using ReportPtr = std::unique_ptr<rtlsym_report, FnDeleter<rtlsym_report_free>>;

DesignPtr ParseMux() {
  rtlsym_design* raw = nullptr;
  REQUIRE(rtlsym_design_parse(kMuxSource, "mux.v", &raw) == RTLSYM_OK);
  return DesignPtr(raw);
}

HarnessPtr ParseMuxHarness() {
  rtlsym_harness* raw = nullptr;
  REQUIRE(rtlsym_harness_parse(kMuxHarness, "mux.harness", &raw) == RTLSYM_OK);
  return HarnessPtr(raw);
}

ResultPtr TestgenMux(const rtlsym_design* design, const rtlsym_harness* h,
                     const rtlsym_testgen_options* options = nullptr) {
  rtlsym_result* raw = nullptr;
  REQUIRE(rtlsym_testgen(design, h, options, &raw) == RTLSYM_OK);
  return ResultPtr(raw);
}

bool Contains(const char* text, const std::string& needle) {
  return std::string(text).find(needle) != std::string::npos;
}

TEST_CASE("capi: version and status names") {
  REQUIRE(rtlsym_version() != nullptr);
  CHECK(std::string(rtlsym_version()) == "1.0.0");
  CHECK(std::string(rtlsym_status_name(RTLSYM_OK)) == "ok");
  CHECK(std::string(rtlsym_status_name(RTLSYM_PARSE_ERROR)) == "parse-error");
  CHECK(std::string(rtlsym_status_name(RTLSYM_SOLVER_ERROR)) ==
        "solver-error");
  CHECK(std::string(rtlsym_status_name(RTLSYM_USAGE_ERROR)) == "usage-error");
}

TEST_CASE("capi: parse a design and query its shape") {
  DesignPtr design = ParseMux();
  CHECK(std::string(rtlsym_last_error()).empty());
  CHECK(std::string(rtlsym_design_name(design.get())) == "mux");
  CHECK(rtlsym_design_signal_count(design.get()) == 4);
  CHECK(rtlsym_design_process_count(design.get()) == 1);
  CHECK(rtlsym_design_statement_count(design.get()) == 2);
  CHECK(rtlsym_design_branch_count(design.get()) == 1);
  CHECK(rtlsym_design_warning_count(design.get()) == 0);
  CHECK(rtlsym_design_warning(design.get(), 0) == nullptr);
  CHECK(rtlsym_design_warning(design.get(), -1) == nullptr);
}

TEST_CASE("capi: load a design from the corpus") {
  rtlsym_design* raw = nullptr;
  REQUIRE(rtlsym_design_load(DataPath("designs/alu4.v").c_str(), &raw) ==
          RTLSYM_OK);
  DesignPtr design(raw);
  CHECK(std::string(rtlsym_design_name(design.get())) == "alu4");
}

TEST_CASE("capi: failures report a status and leave out untouched") {
  rtlsym_design* sentinel = reinterpret_cast<rtlsym_design*>(0x1);
  rtlsym_design* out = sentinel;

  CHECK(rtlsym_design_load("/definitely/not/here.v", &out) ==
        RTLSYM_IO_ERROR);
  CHECK(out == sentinel);
  CHECK(Contains(rtlsym_last_error(), "cannot open"));

  CHECK(rtlsym_design_parse("module broken(", "broken.v", &out) ==
        RTLSYM_PARSE_ERROR);
  CHECK(out == sentinel);
  CHECK(Contains(rtlsym_last_error(), "broken.v:1:"));
  CHECK(Contains(rtlsym_last_error(), ": error: "));

  // Two processes driving one signal violate the single-driver rule.
  CHECK(rtlsym_design_parse(
            "module dd(input a, output reg y);\n"
            "always @(a) begin y = a; end\n"
            "always @(a) begin y = ~a; end\n"
            "endmodule\n",
            "dd.v", &out) == RTLSYM_ELAB_ERROR);
  CHECK(out == sentinel);

  // A later success clears the error message.
  DesignPtr design = ParseMux();
  CHECK(std::string(rtlsym_last_error()).empty());
}

TEST_CASE("capi: null arguments are usage errors") {
  rtlsym_design* out = nullptr;
  CHECK(rtlsym_design_load(nullptr, &out) == RTLSYM_USAGE_ERROR);
  CHECK(rtlsym_design_parse("x", "x.v", nullptr) == RTLSYM_USAGE_ERROR);
  CHECK(rtlsym_harness_validate(nullptr, nullptr) == RTLSYM_USAGE_ERROR);
  CHECK(rtlsym_testgen(nullptr, nullptr, nullptr, nullptr) ==
        RTLSYM_USAGE_ERROR);
  CHECK(rtlsym_replay(nullptr, nullptr, nullptr, nullptr, nullptr) ==
        RTLSYM_USAGE_ERROR);
  CHECK(rtlsym_coverage_parse(nullptr, nullptr, nullptr) ==
        RTLSYM_USAGE_ERROR);
  CHECK(std::string(rtlsym_last_error()).find("requires") !=
        std::string::npos);

  // Freeing NULL handles is a no-op.
  rtlsym_design_free(nullptr);
  rtlsym_harness_free(nullptr);
  rtlsym_result_free(nullptr);
  rtlsym_coverage_free(nullptr);
  rtlsym_report_free(nullptr);
}

TEST_CASE("capi: harness validation catches design mismatches") {
  DesignPtr design = ParseMux();
  HarnessPtr harness = ParseMuxHarness();
  CHECK(rtlsym_harness_validate(harness.get(), design.get()) == RTLSYM_OK);

  rtlsym_harness* raw = nullptr;
  REQUIRE(rtlsym_harness_parse("top other\nmax_cycles 1\n", "h", &raw) ==
          RTLSYM_OK);
  HarnessPtr wrong(raw);
  CHECK(rtlsym_harness_validate(wrong.get(), design.get()) ==
        RTLSYM_HARNESS_ERROR);
  CHECK(Contains(rtlsym_last_error(), "targets module 'other'"));

  CHECK(rtlsym_harness_parse("top broken\n", "h", &raw) ==
        RTLSYM_HARNESS_ERROR);
  CHECK(Contains(rtlsym_last_error(), "max_cycles"));
}

TEST_CASE("capi: testgen produces the mux suite") {
  DesignPtr design = ParseMux();
  HarnessPtr harness = ParseMuxHarness();
  ResultPtr result = TestgenMux(design.get(), harness.get());

  CHECK(rtlsym_result_test_count(result.get()) == 2);
  CHECK(std::string(rtlsym_result_budget_exhausted(result.get())).empty());
  CHECK(std::string(rtlsym_result_suite_text(result.get())) ==
        "testsuite mux tests=2\n"
        "test 0\n"
        "cycle 0: din_0=0x1 din_1=0x0 sel=0x0\n"
        "end\n"
        "test 1\n"
        "cycle 0: din_0=0x1 din_1=0x0 sel=0x1\n"
        "end\n");
  CHECK(Contains(rtlsym_result_stats_text(result.get()), "tests=2\n"));
  CHECK(Contains(rtlsym_result_stats_text(result.get()),
                 "budget_exhausted=none\n"));
}

TEST_CASE("capi: testgen option validation and budget overrides") {
  DesignPtr design = ParseMux();
  HarnessPtr harness = ParseMuxHarness();

  rtlsym_testgen_options options;
  rtlsym_testgen_options_init(&options);
  CHECK(options.max_cycles == 0);
  CHECK(options.max_paths == 0);
  CHECK(options.max_solver_calls == 0);
  CHECK(options.timeout_ms == 0);
  CHECK(options.jobs == 1);
  CHECK(options.solver == RTLSYM_SOLVER_BUILTIN);
  CHECK(options.solver_cmd == nullptr);
  CHECK(options.seed == 0);

  rtlsym_result* raw = nullptr;
  options.jobs = 0;
  CHECK(rtlsym_testgen(design.get(), harness.get(), &options, &raw) ==
        RTLSYM_USAGE_ERROR);
  options.jobs = 1;
  options.solver = 7;
  CHECK(rtlsym_testgen(design.get(), harness.get(), &options, &raw) ==
        RTLSYM_USAGE_ERROR);
  options.solver = RTLSYM_SOLVER_EXTERNAL;
  CHECK(rtlsym_testgen(design.get(), harness.get(), &options, &raw) ==
        RTLSYM_USAGE_ERROR);
  CHECK(Contains(rtlsym_last_error(), "requires solver_cmd"));
  options.solver = RTLSYM_SOLVER_BUILTIN;
  options.max_paths = -3;
  CHECK(rtlsym_testgen(design.get(), harness.get(), &options, &raw) ==
        RTLSYM_USAGE_ERROR);

  rtlsym_testgen_options_init(&options);
  options.max_paths = 1;
  ResultPtr partial(
      [&] {
        rtlsym_result* r = nullptr;
        REQUIRE(rtlsym_testgen(design.get(), harness.get(), &options, &r) ==
                RTLSYM_OK);
        return r;
      }());
  CHECK(rtlsym_result_test_count(partial.get()) == 1);
  CHECK(std::string(rtlsym_result_budget_exhausted(partial.get())) ==
        "max_paths");
}

TEST_CASE("capi: replay, merge, and report close the loop") {
  DesignPtr design = ParseMux();
  HarnessPtr harness = ParseMuxHarness();
  ResultPtr result = TestgenMux(design.get(), harness.get());

  rtlsym_coverage* craw = nullptr;
  REQUIRE(rtlsym_replay(design.get(), harness.get(),
                        rtlsym_result_suite_text(result.get()), "suite",
                        &craw) == RTLSYM_OK);
  CoveragePtr coverage(craw);
  CHECK(Contains(rtlsym_coverage_text(coverage.get()),
                 "coverage mux stmts=2 branches=1\n"));

  // The serialized counters parse back and merge with themselves.
  rtlsym_coverage* praw = nullptr;
  REQUIRE(rtlsym_coverage_parse(rtlsym_coverage_text(coverage.get()),
                                "cov.txt", &praw) == RTLSYM_OK);
  CoveragePtr parsed(praw);
  rtlsym_coverage* mraw = nullptr;
  REQUIRE(rtlsym_coverage_merge(coverage.get(), parsed.get(), &mraw) ==
          RTLSYM_OK);
  CoveragePtr merged(mraw);
  CHECK(Contains(rtlsym_coverage_text(merged.get()), "stmt 0 hits=2"));

  rtlsym_report* rraw = nullptr;
  REQUIRE(rtlsym_report_create(design.get(), coverage.get(), &rraw) ==
          RTLSYM_OK);
  ReportPtr report(rraw);
  CHECK(rtlsym_report_stmt_pct_tenths(report.get()) == 1000);
  CHECK(rtlsym_report_branch_pct_tenths(report.get()) == 1000);
  CHECK(Contains(rtlsym_report_human(report.get()), "100.0%"));
  CHECK(Contains(rtlsym_report_machine(report.get()), "stmt_pct=100.0\n"));
}

TEST_CASE("capi: replay rejects suites for other designs") {
  DesignPtr design = ParseMux();
  HarnessPtr harness = ParseMuxHarness();

  rtlsym_coverage* raw = nullptr;
  CHECK(rtlsym_replay(design.get(), harness.get(),
                      "testsuite muxer tests=0\n", "suite", &raw) ==
        RTLSYM_VECTOR_ERROR);
  CHECK(Contains(rtlsym_last_error(), "targets design 'muxer'"));

  CHECK(rtlsym_replay(design.get(), harness.get(), "gibberish", "suite",
                      &raw) == RTLSYM_FORMAT_ERROR);
}

TEST_CASE("capi: coverage type errors surface as format errors") {
  DesignPtr design = ParseMux();

  rtlsym_coverage* raw = nullptr;
  CHECK(rtlsym_coverage_parse("not a coverage file", "cov.txt", &raw) ==
        RTLSYM_FORMAT_ERROR);

  rtlsym_coverage* other = nullptr;
  REQUIRE(rtlsym_coverage_parse("coverage other stmts=1 branches=0\n",
                                "cov.txt", &other) == RTLSYM_OK);
  CoveragePtr foreign(other);

  rtlsym_report* rraw = nullptr;
  CHECK(rtlsym_report_create(design.get(), foreign.get(), &rraw) ==
        RTLSYM_FORMAT_ERROR);
  CHECK(Contains(rtlsym_last_error(), "belongs to design 'other'"));

  rtlsym_coverage* mux_cov = nullptr;
  REQUIRE(rtlsym_coverage_parse(
              "coverage mux stmts=2 branches=1\nstmt 0 hits=1\n", "c",
              &mux_cov) == RTLSYM_OK);
  CoveragePtr ours(mux_cov);
  rtlsym_coverage* mraw = nullptr;
  CHECK(rtlsym_coverage_merge(ours.get(), foreign.get(), &mraw) ==
        RTLSYM_FORMAT_ERROR);
  CHECK(Contains(rtlsym_last_error(), "cannot merge"));
}

TEST_CASE("capi: external solver failures surface as solver errors") {
  DesignPtr design = ParseMux();
  HarnessPtr harness = ParseMuxHarness();

  rtlsym_testgen_options options;
  rtlsym_testgen_options_init(&options);
  options.solver = RTLSYM_SOLVER_EXTERNAL;
  options.solver_cmd = "false";

  rtlsym_result* raw = nullptr;
  CHECK(rtlsym_testgen(design.get(), harness.get(), &options, &raw) ==
        RTLSYM_SOLVER_ERROR);
  CHECK(!std::string(rtlsym_last_error()).empty());
}

}  // namespace
