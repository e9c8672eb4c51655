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

#ifndef RTLSYM_SOLVER_CHECK_H_
#define RTLSYM_SOLVER_CHECK_H_

#include <cstdint>
#include <span>
#include <string>

#include "sym/expr.h"

namespace rtlsym {

enum class CheckVerdict { kSat, kUnsat, kUnknown };

struct CheckResult {
  CheckVerdict verdict = CheckVerdict::kUnknown;
  Assignment model;            // kSat: total over the constraints' variables
  std::string unknown_reason;  // kUnknown: "timeout" or "conflict-budget"
};

struct SolverConfig {
  enum class Backend { kBuiltin, kExternal };

  Backend backend = Backend::kBuiltin;
  // External backend: shell command reading SMT-LIB2 from stdin and
  // writing the verdict and model to stdout (e.g. "z3 -in").
  std::string external_cmd;
  int64_t timeout_ms = -1;      // < 0: unlimited
  int64_t max_conflicts = -1;   // built-in backend only; < 0: unlimited
  // Re-evaluate every constraint under a Sat model and fail loudly on a
  // mismatch instead of propagating a bogus test vector.
  bool verify_models = true;
};

// Decides satisfiability of the conjunction of width-1 constraints.
// Unknown is a result (budget or timeout); genuine backend failures —
// spawn errors, unparseable solver output, unsound models — throw
// Diag(kSolverError) instead.
CheckResult Check(const NodeTable& table, std::span<const NodeId> constraints,
                  const SolverConfig& config);

}  // namespace rtlsym

#endif  // RTLSYM_SOLVER_CHECK_H_
