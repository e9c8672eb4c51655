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

#ifndef RTLSYM_SIM_SIMULATE_H_
#define RTLSYM_SIM_SIMULATE_H_

#include <utility>
#include <vector>

#include "elab/design.h"
#include "exec/harness.h"
#include "exec/testsuite.h"
#include "sim/coverage.h"
#include "support/bitval.h"

namespace rtlsym {

struct SimState {
  std::vector<BitVal> values;  // indexed like RtlDesign::signals
  int cycle = 0;
};

struct SimResult {
  SimState final_state;
  std::vector<std::pair<int, int>> trace;  // (branch id, taken arm)
  CoverageData coverage;
  // values after each cycle's combinational settle, before the clock
  // edge; one snapshot per executed cycle, for cross-checking other
  // evaluators.
  std::vector<std::vector<BitVal>> settled_values;
};

// Two-state concrete replay of one test case: all signals start at zero;
// per cycle the harness and the cycle's vector drive the inputs, the
// combinational processes settle, and the clocked processes run with a
// simultaneous nonblocking commit. Every executed assignment bumps its
// statement counter and every evaluated branch its taken arm's counter.
//
// Throws Diag(kVectorError) on vectors that do not conform to the design
// and harness, and Diag(kInternalError) if combinational values fail to
// reach a fixpoint within the settle bound.
SimResult Simulate(const ir::RtlDesign& design, const Harness& harness,
                   const TestCase& test);

}  // namespace rtlsym

#endif  // RTLSYM_SIM_SIMULATE_H_
