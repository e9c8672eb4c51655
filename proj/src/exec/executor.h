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

#ifndef RTLSYM_EXEC_EXECUTOR_H_
#define RTLSYM_EXEC_EXECUTOR_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <utility>
#include <vector>

#include "elab/design.h"
#include "exec/harness.h"
#include "exec/testsuite.h"
#include "solver/check.h"
#include "sym/expr.h"

namespace rtlsym {

enum class PathStatus { kActive, kComplete, kInfeasible, kBudgetKilled };

// One branch of the symbolic exploration tree: a symbolic value per
// signal, the accumulated branch constraints, and the outcomes taken so
// far. Forking copies the whole state; nodes live in the shared table.
struct PathState {
  std::vector<NodeId> store;  // indexed like RtlDesign::signals
  std::vector<NodeId> path_condition;
  int cycle = 0;
  std::vector<std::pair<int, int>> trace;  // (branch id, taken arm)
  PathStatus status = PathStatus::kActive;
};

struct ExecOptions {
  SolverConfig solver;
  // Worker threads for path exploration. The suite content and order are
  // unaffected by this value; runs with explicit budgets are serialized
  // so the trip point stays reproducible.
  int jobs = 1;
};

struct ExplorationResult {
  TestSuite suite;
  ExplorationStats stats;
};

// Cycle-bounded symbolic execution of one design under one harness.
// Each cycle: bind this cycle's input symbols, settle combinational
// processes in dependency order (forking on symbolic branch guards with
// an eager feasibility check per kept arm), evaluate clocked processes
// against the settled store, and commit their nonblocking writes
// simultaneously. Completed paths become concrete test cases by solving
// their path condition.
class Executor {
 public:
  // Validates the harness against the design (throws Diag(kHarnessError)).
  Executor(const ir::RtlDesign& design, const Harness& harness,
           ExecOptions options = {});

  // All signals start at zero; symbolic inputs are bound to their cycle-0
  // symbols, fixed inputs to constants, reset to its asserted level.
  PathState InitState();

  // Runs the combinational processes once in topological order. Returns
  // the feasible descendants (one per explored branch combination); a
  // child whose feasibility check comes back Unknown is dropped and
  // counted in paths_killed.
  std::vector<PathState> SettleComb(const PathState& state);

  // One full cycle: rebind per-cycle inputs, settle, run clocked
  // processes, commit nonblocking writes, advance the cycle counter.
  // States that reach the harness cycle bound come back kComplete.
  std::vector<PathState> StepCycle(const PathState& state);

  // Depth-first exploration from InitState until every path completes or
  // a budget trips (recorded in stats; the partial suite is still
  // returned). Test cases are ordered by their branch-outcome sequence,
  // which equals single-worker depth-first completion order.
  ExplorationResult Run();

  NodeTable& table() { return table_; }
  int64_t solver_calls() const { return solver_calls_.load(); }
  int64_t paths_killed() const { return paths_killed_.load(); }

 private:
  struct NbaWrite {
    int signal = -1;
    int hi = 0, lo = 0;
    NodeId value = kNoNode;
  };
  struct Frame {
    PathState path;
    std::vector<NbaWrite> nba;
  };
  using Sink = std::function<void(Frame)>;

  NodeId EvalExpr(const PathState& state, const ir::IrExpr& expr);
  NodeId InsertBits(NodeId whole, int width, int hi, int lo, NodeId value);
  void BindCycleInputs(PathState* state);

  void RunStmts(Frame frame, const std::vector<ir::IrStmt>* stmts, size_t i,
                const Sink& done);
  void RunProcesses(Frame frame, size_t proc_index, size_t proc_end,
                    const Sink& done);
  void ApplyBranch(Frame frame, const ir::IrStmt& stmt, const Sink& done);

  // Counts one solver call against the budget, tripping the stop flag
  // once it is exceeded.
  void CountSolverCall();
  // One feasibility check; bumps solver_calls_ and the budget trip flag.
  CheckVerdict Feasibility(const std::vector<NodeId>& condition);

  TestCase FinalizePath(const PathState& state);

  const ir::RtlDesign& design_;
  const Harness& harness_;
  ExecOptions options_;
  NodeTable table_;

  std::atomic<int64_t> solver_calls_{0};
  std::atomic<int64_t> paths_killed_{0};
  std::atomic<bool> stop_{false};
  std::string budget_exhausted_;
  std::mutex budget_mu_;
  int64_t deadline_ms_ = -1;  // absolute, against steady_clock_ms()
};

}  // namespace rtlsym

#endif  // RTLSYM_EXEC_EXECUTOR_H_
