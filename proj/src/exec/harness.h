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

#ifndef RTLSYM_EXEC_HARNESS_H_
#define RTLSYM_EXEC_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elab/design.h"
#include "support/bitval.h"

namespace rtlsym {

// How a symbolic input evolves over cycles: `kHold` binds one symbol at
// cycle 0 and holds it, `kFreshPerCycle` binds a new symbol every cycle.
enum class InputMode { kHold, kFreshPerCycle };

struct SymbolicInput {
  std::string signal;
  int bits = 1;
  InputMode mode = InputMode::kHold;
};

struct FixedInput {
  std::string signal;
  BitVal value;
};

struct ResetSpec {
  std::string signal;
  int active_level = 1;  // 0 or 1
  int hold_cycles = 1;   // cycles the reset stays asserted from cycle 0
};

// Exploration budgets; < 0 means unlimited.
struct Budgets {
  int64_t max_paths = -1;
  int64_t max_solver_calls = -1;
  int64_t wall_clock_ms = -1;
};

// Test-generation configuration for one design: which inputs are symbolic
// (and how wide), which are pinned, how the clock and reset are driven,
// and how many cycles to run.
//
// File schema (one `key value...` entry per line; `#` starts a comment):
//
//   top <module>                                   required
//   max_cycles <n>                                 required, n >= 1
//   clock <signal>                                 optional
//   reset <signal> active=<0|1> hold=<n>           optional
//   symbolic <signal> bits=<n> [mode=hold|fresh_per_cycle]
//   fixed <signal> <value>                         value: decimal or 0x hex
//   max_paths <n>  /  max_solver_calls <n>  /  wall_clock_ms <n>
struct Harness {
  std::string top;
  std::string clock;  // empty: no clock signal named
  std::optional<ResetSpec> reset;
  std::vector<SymbolicInput> symbolic_inputs;
  std::vector<FixedInput> fixed_inputs;
  int max_cycles = 1;
  Budgets budgets;
};

// Both throw Diag(kHarnessError) with the offending line on schema
// violations; LoadHarness throws Diag(kIoError) on unreadable files.
Harness ParseHarness(const std::string& text, const std::string& filename);
Harness LoadHarness(const std::string& path);

// Cross-checks the harness against the design: the named module, signal
// existence and direction, widths, value ranges, and that every design
// input is driven by exactly one of clock, reset, symbolic, or fixed.
// Throws Diag(kHarnessError).
void ValidateHarness(const Harness& harness, const ir::RtlDesign& design);

}  // namespace rtlsym

#endif  // RTLSYM_EXEC_HARNESS_H_
