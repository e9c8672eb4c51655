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

#ifndef RTLSYM_EXEC_TESTSUITE_H_
#define RTLSYM_EXEC_TESTSUITE_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "elab/design.h"
#include "support/bitval.h"

namespace rtlsym {

// One concrete stimulus: per executed cycle, the values of every
// harness-controlled data input (symbolic and fixed alike), listed in
// design declaration order.
struct TestCase {
  int id = 0;
  std::vector<std::vector<std::pair<std::string, BitVal>>> vectors;
  // Branch outcomes (branch id, taken arm) the generating path recorded;
  // carried in memory for soundness checks, not serialized.
  std::vector<std::pair<int, int>> expected_trace;
};

struct TestSuite {
  std::string design;
  std::vector<TestCase> tests;
};

// Counters describing one exploration run. The wall-clock and memory
// lines are volatile across runs, so the text form places them last;
// everything above them is deterministic for fixed inputs and budgets.
struct ExplorationStats {
  int64_t tests = 0;
  int64_t vectors = 0;
  int64_t paths_completed = 0;
  int64_t paths_killed = 0;
  int64_t solver_calls = 0;
  std::string budget_exhausted;  // tripped budget name, or empty
  int64_t wall_clock_ms = 0;
  int64_t peak_memory_kb = -1;  // -1: not available on this platform
};

// Test-suite text format, line-oriented:
//
//   testsuite <design> tests=<n>
//   test <id>
//   cycle <k>: <sig>=0x<hex> <sig>=0x<hex> ...
//   end
//
// Hex values are zero-padded to ceil(width/4) digits; the design supplies
// the widths and the declaration order.
std::string FormatTestSuite(const TestSuite& suite,
                            const ir::RtlDesign& design);

// Throws Diag(kFormatError) with the offending line on malformed input.
TestSuite ParseTestSuite(const std::string& text, const std::string& filename);
// Throws Diag(kIoError) when the file cannot be read.
TestSuite LoadTestSuite(const std::string& path);

// `key=value` lines, one per ExplorationStats field, volatile lines last.
std::string FormatStats(const ExplorationStats& stats);

// Reads /proc to report the process high-water resident set, in kilobytes;
// returns -1 where unsupported.
int64_t PeakMemoryKb();

}  // namespace rtlsym

#endif  // RTLSYM_EXEC_TESTSUITE_H_
