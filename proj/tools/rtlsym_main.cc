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

// Command-line driver. Orchestrates the library strictly through the
// public C interface; all pipeline logic lives behind rtlsym.h.
//
// File conventions inside the --out directory:
//   testgen   writes tests.txt and stats.txt
//   simulate  reads  tests.txt,   writes coverage.txt
//   report    reads  coverage.txt, writes report.txt
//   pipeline  chains testgen, simulate, and report
//
// Exit codes: 0 success, 1 tool error, 2 usage error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rtlsym.h"

namespace {

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

struct Config {
  std::string design_path;
  std::string harness_path;
  std::string out_dir = ".";
  // 0 keeps the harness setting; the CLI only accepts positive overrides.
  int64_t max_cycles = 0;
  int64_t max_paths = 0;
  int64_t max_solver_calls = 0;
  int64_t timeout_s = 0;
  std::string solver = "builtin";
  std::string solver_cmd;
  uint64_t seed = 0;
  int32_t jobs = 1;
};

// Prints the library's diagnostic for the call that just failed.
int ToolFail() {
  std::cerr << rtlsym_last_error() << "\n";
  return 1;
}

bool ReadFileInto(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  *out = buffer.str();
  return true;
}

bool WriteFileFrom(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.flush();
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return false;
  }
  std::cerr << "wrote " << path << "\n";
  return true;
}

std::string OutPath(const Config& cfg, const std::string& name) {
  return (std::filesystem::path(cfg.out_dir) / name).string();
}

DesignPtr LoadDesign(const Config& cfg) {
  rtlsym_design* raw = nullptr;
  if (rtlsym_design_load(cfg.design_path.c_str(), &raw) != RTLSYM_OK) {
    std::cerr << rtlsym_last_error() << "\n";
    return nullptr;
  }
  DesignPtr design(raw);
  int64_t warnings = rtlsym_design_warning_count(design.get());
  for (int64_t i = 0; i < warnings; ++i) {
    std::cerr << "warning: " << rtlsym_design_warning(design.get(), i) << "\n";
  }
  return design;
}

// Loads the harness and cross-checks it against the design.
HarnessPtr LoadHarness(const Config& cfg, const rtlsym_design* design) {
  rtlsym_harness* raw = nullptr;
  if (rtlsym_harness_load(cfg.harness_path.c_str(), &raw) != RTLSYM_OK) {
    std::cerr << rtlsym_last_error() << "\n";
    return nullptr;
  }
  HarnessPtr harness(raw);
  if (rtlsym_harness_validate(harness.get(), design) != RTLSYM_OK) {
    std::cerr << rtlsym_last_error() << "\n";
    return nullptr;
  }
  return harness;
}

bool EnsureOutDir(const Config& cfg) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create output directory '" << cfg.out_dir
              << "': " << ec.message() << "\n";
    return false;
  }
  return true;
}

int RunCheck(const Config& cfg) {
  DesignPtr design = LoadDesign(cfg);
  if (!design) return 1;
  std::cout << "design " << rtlsym_design_name(design.get()) << "\n"
            << "signals " << rtlsym_design_signal_count(design.get()) << "\n"
            << "processes " << rtlsym_design_process_count(design.get())
            << "\n"
            << "statements " << rtlsym_design_statement_count(design.get())
            << "\n"
            << "branches " << rtlsym_design_branch_count(design.get()) << "\n";
  return 0;
}

int RunTestgen(const Config& cfg) {
  DesignPtr design = LoadDesign(cfg);
  if (!design) return 1;
  HarnessPtr harness = LoadHarness(cfg, design.get());
  if (!harness) return 1;

  rtlsym_testgen_options options;
  rtlsym_testgen_options_init(&options);
  options.max_cycles = cfg.max_cycles;
  options.max_paths = cfg.max_paths;
  options.max_solver_calls = cfg.max_solver_calls;
  options.timeout_ms = cfg.timeout_s * 1000;
  options.jobs = cfg.jobs;
  options.solver = cfg.solver == "external" ? RTLSYM_SOLVER_EXTERNAL
                                            : RTLSYM_SOLVER_BUILTIN;
  options.solver_cmd = cfg.solver_cmd.empty() ? nullptr : cfg.solver_cmd.c_str();
  options.seed = cfg.seed;

  rtlsym_result* raw = nullptr;
  if (rtlsym_testgen(design.get(), harness.get(), &options, &raw) !=
      RTLSYM_OK) {
    return ToolFail();
  }
  ResultPtr result(raw);

  std::string budget = rtlsym_result_budget_exhausted(result.get());
  if (!budget.empty()) {
    std::cerr << "note: exploration stopped early, " << budget
              << " budget exhausted\n";
  }
  if (!EnsureOutDir(cfg)) return 1;
  if (!WriteFileFrom(OutPath(cfg, "tests.txt"),
                     rtlsym_result_suite_text(result.get()))) {
    return 1;
  }
  if (!WriteFileFrom(OutPath(cfg, "stats.txt"),
                     rtlsym_result_stats_text(result.get()))) {
    return 1;
  }
  return 0;
}

int RunSimulate(const Config& cfg) {
  DesignPtr design = LoadDesign(cfg);
  if (!design) return 1;
  HarnessPtr harness = LoadHarness(cfg, design.get());
  if (!harness) return 1;

  std::string suite_path = OutPath(cfg, "tests.txt");
  std::string suite_text;
  if (!ReadFileInto(suite_path, &suite_text)) return 1;

  rtlsym_coverage* raw = nullptr;
  if (rtlsym_replay(design.get(), harness.get(), suite_text.c_str(),
                    suite_path.c_str(), &raw) != RTLSYM_OK) {
    return ToolFail();
  }
  CoveragePtr coverage(raw);

  if (!EnsureOutDir(cfg)) return 1;
  if (!WriteFileFrom(OutPath(cfg, "coverage.txt"),
                     rtlsym_coverage_text(coverage.get()))) {
    return 1;
  }
  return 0;
}

int RunReport(const Config& cfg) {
  DesignPtr design = LoadDesign(cfg);
  if (!design) return 1;

  std::string coverage_path = OutPath(cfg, "coverage.txt");
  std::string coverage_text;
  if (!ReadFileInto(coverage_path, &coverage_text)) return 1;

  rtlsym_coverage* craw = nullptr;
  if (rtlsym_coverage_parse(coverage_text.c_str(), coverage_path.c_str(),
                            &craw) != RTLSYM_OK) {
    return ToolFail();
  }
  CoveragePtr coverage(craw);

  rtlsym_report* rraw = nullptr;
  if (rtlsym_report_create(design.get(), coverage.get(), &rraw) != RTLSYM_OK) {
    return ToolFail();
  }
  ReportPtr report(rraw);

  if (!EnsureOutDir(cfg)) return 1;
  if (!WriteFileFrom(OutPath(cfg, "report.txt"),
                     rtlsym_report_machine(report.get()))) {
    return 1;
  }
  std::cout << rtlsym_report_human(report.get());
  return 0;
}

int RunPipeline(const Config& cfg) {
  if (int rc = RunTestgen(cfg); rc != 0) return rc;
  if (int rc = RunSimulate(cfg); rc != 0) return rc;
  return RunReport(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rtlsym: RTL test generation via cycle-bounded symbolic "
               "execution, with concrete replay and coverage reporting"};
  app.require_subcommand(1);

  Config cfg;

  auto add_design = [&](CLI::App* sub) {
    sub->add_option("design", cfg.design_path, "Verilog design file")
        ->required();
  };
  auto add_harness = [&](CLI::App* sub) {
    sub->add_option("harness", cfg.harness_path, "test harness file")
        ->required();
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_dir,
                    "directory for generated files (default '.')");
  };
  const auto positive = CLI::Range(static_cast<int64_t>(1),
                                   std::numeric_limits<int64_t>::max());
  auto add_testgen_flags = [&](CLI::App* sub) {
    sub->add_option("--max-cycles", cfg.max_cycles,
                    "override the harness cycle bound")
        ->check(positive);
    sub->add_option("--max-paths", cfg.max_paths,
                    "stop after this many completed paths")
        ->check(positive);
    sub->add_option("--max-solver-calls", cfg.max_solver_calls,
                    "stop after this many solver calls")
        ->check(positive);
    sub->add_option("--timeout-s", cfg.timeout_s,
                    "wall-clock budget in seconds")
        ->check(positive);
    sub->add_option("--solver", cfg.solver,
                    "constraint solver backend (builtin|external)")
        ->check(CLI::IsMember({"builtin", "external"}));
    sub->add_option("--solver-cmd", cfg.solver_cmd,
                    "external solver command reading SMT-LIB2 on stdin");
    sub->add_option("--seed", cfg.seed,
                    "random seed (outputs do not depend on it; exploration "
                    "is deterministic)");
    sub->add_option("--jobs", cfg.jobs,
                    "worker threads (output is identical for any value)")
        ->check(positive);
  };

  CLI::App* check =
      app.add_subcommand("check", "parse and elaborate a design, print "
                                  "signal/process/statement/branch counts");
  add_design(check);

  CLI::App* testgen = app.add_subcommand(
      "testgen", "generate a test suite by symbolic execution");
  add_design(testgen);
  add_harness(testgen);
  add_out(testgen);
  add_testgen_flags(testgen);

  CLI::App* simulate = app.add_subcommand(
      "simulate", "replay a generated suite and record coverage");
  add_design(simulate);
  add_harness(simulate);
  add_out(simulate);

  CLI::App* report =
      app.add_subcommand("report", "render the coverage report");
  add_design(report);
  add_out(report);

  CLI::App* pipeline = app.add_subcommand(
      "pipeline", "testgen, simulate, and report in sequence");
  add_design(pipeline);
  add_harness(pipeline);
  add_out(pipeline);
  add_testgen_flags(pipeline);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "run '" << (argc > 0 ? argv[0] : "rtlsym")
              << " --help' for the flag reference\n";
    return 2;
  }

  if (cfg.solver == "external" && cfg.solver_cmd.empty()) {
    std::cerr << "error: --solver external requires --solver-cmd\n";
    return 2;
  }

  try {
    if (check->parsed()) return RunCheck(cfg);
    if (testgen->parsed()) return RunTestgen(cfg);
    if (simulate->parsed()) return RunSimulate(cfg);
    if (report->parsed()) return RunReport(cfg);
    if (pipeline->parsed()) return RunPipeline(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
