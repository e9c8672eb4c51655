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

#ifndef RTLSYM_SOLVER_SAT_H_
#define RTLSYM_SOLVER_SAT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "solver/cnf.h"

namespace rtlsym {

enum class SatVerdict { kSat, kUnsat, kUnknown };

struct SatBudget {
  int64_t max_conflicts = -1;  // < 0: unlimited
  int64_t timeout_ms = -1;     // < 0: unlimited
};

struct SatResult {
  SatVerdict verdict = SatVerdict::kUnknown;
  std::vector<bool> model;      // indexed 1..num_vars; kSat only
  std::string unknown_reason;   // "timeout" or "conflict-budget"; kUnknown only
  int64_t conflicts = 0;
  int64_t decisions = 0;
  int64_t propagations = 0;
};

// Complete CDCL search: two-watched-literal propagation, first-UIP clause
// learning, Luby restarts, exponential variable-activity decay. Decisions
// assign false first and break activity ties toward the lowest variable
// index, so runs are bitwise reproducible.
SatResult SatSolve(const Cnf& cnf, const SatBudget& budget);

}  // namespace rtlsym

#endif  // RTLSYM_SOLVER_SAT_H_
