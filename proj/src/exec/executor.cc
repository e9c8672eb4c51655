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

#include "exec/executor.h"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <thread>

#include "support/diag.h"

namespace rtlsym {
namespace {

int64_t SteadyClockMs() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

Executor::Executor(const ir::RtlDesign& design, const Harness& harness,
                   ExecOptions options)
    : design_(design), harness_(harness), options_(std::move(options)) {
  ValidateHarness(harness_, design_);
  if (options_.jobs < 1) options_.jobs = 1;
  // Budget trip points depend on exploration order; serialize so that a
  // tripped run is still reproducible.
  const Budgets& b = harness_.budgets;
  if (b.max_paths >= 0 || b.max_solver_calls >= 0 || b.wall_clock_ms >= 0) {
    options_.jobs = 1;
  }
}

NodeId Executor::EvalExpr(const PathState& state, const ir::IrExpr& expr) {
  switch (expr.kind) {
    case ir::IrExpr::Kind::kConst:
      return table_.Const(expr.width, expr.value);
    case ir::IrExpr::Kind::kSignal:
      return state.store[expr.signal];
    case ir::IrExpr::Kind::kOp:
      break;
  }
  std::vector<NodeId> operands;
  operands.reserve(expr.operands.size());
  for (const auto& op : expr.operands) {
    operands.push_back(EvalExpr(state, *op));
  }
  if (expr.op == BvOp::kExtract) {
    return table_.Extract(operands[0], expr.hi, expr.lo);
  }
  if (expr.op == BvOp::kZeroExt) {
    return table_.ZeroExt(operands[0], expr.width);
  }
  return table_.Op(expr.op, std::move(operands));
}

// Replaces bits [hi:lo] of `whole` (of the given width) with `value`.
NodeId Executor::InsertBits(NodeId whole, int width, int hi, int lo,
                            NodeId value) {
  if (hi == width - 1 && lo == 0) return value;
  std::vector<NodeId> parts;  // most significant first
  if (hi < width - 1) parts.push_back(table_.Extract(whole, width - 1, hi + 1));
  parts.push_back(value);
  if (lo > 0) parts.push_back(table_.Extract(whole, lo - 1, 0));
  return table_.Op(BvOp::kConcat, std::move(parts));
}

void Executor::BindCycleInputs(PathState* state) {
  for (const SymbolicInput& s : harness_.symbolic_inputs) {
    int idx = design_.FindSignal(s.signal);
    int cycle = s.mode == InputMode::kFreshPerCycle ? state->cycle : 0;
    state->store[idx] = table_.Var(s.signal, s.bits, cycle);
  }
  if (harness_.reset.has_value()) {
    const ResetSpec& r = *harness_.reset;
    int level = state->cycle < r.hold_cycles ? r.active_level
                                             : 1 - r.active_level;
    state->store[design_.FindSignal(r.signal)] = table_.ConstU64(1, level);
  }
}

PathState Executor::InitState() {
  PathState state;
  state.store.resize(design_.signals.size());
  for (size_t i = 0; i < design_.signals.size(); ++i) {
    state.store[i] = table_.ConstU64(design_.signals[i].width, 0);
  }
  for (const FixedInput& f : harness_.fixed_inputs) {
    int idx = design_.FindSignal(f.signal);
    state.store[idx] = table_.Const(design_.signals[idx].width, f.value);
  }
  BindCycleInputs(&state);
  return state;
}

void Executor::CountSolverCall() {
  int64_t calls = solver_calls_.fetch_add(1) + 1;
  const Budgets& b = harness_.budgets;
  if (b.max_solver_calls >= 0 && calls > b.max_solver_calls) {
    std::lock_guard<std::mutex> lock(budget_mu_);
    if (budget_exhausted_.empty()) budget_exhausted_ = "max_solver_calls";
    stop_.store(true);
  }
}

CheckVerdict Executor::Feasibility(const std::vector<NodeId>& condition) {
  CountSolverCall();
  return Check(table_, condition, options_.solver).verdict;
}

void Executor::RunStmts(Frame frame, const std::vector<ir::IrStmt>* stmts,
                        size_t i, const Sink& done) {
  while (i < stmts->size() &&
         (*stmts)[i].kind == ir::IrStmt::Kind::kAssign) {
    const ir::IrStmt& stmt = (*stmts)[i];
    NodeId value = EvalExpr(frame.path, *stmt.rhs);
    if (stmt.nonblocking) {
      frame.nba.push_back(
          NbaWrite{stmt.lhs.signal, stmt.lhs.hi, stmt.lhs.lo, value});
    } else {
      int width = design_.signals[stmt.lhs.signal].width;
      frame.path.store[stmt.lhs.signal] = InsertBits(
          frame.path.store[stmt.lhs.signal], width, stmt.lhs.hi, stmt.lhs.lo,
          value);
    }
    ++i;
  }
  if (i == stmts->size()) {
    done(std::move(frame));
    return;
  }
  // A branch: explore its arms, then continue with the rest of the list.
  const ir::IrStmt& stmt = (*stmts)[i];
  ApplyBranch(std::move(frame), stmt, [&, i](Frame after) {
    RunStmts(std::move(after), stmts, i + 1, done);
  });
}

void Executor::ApplyBranch(Frame frame, const ir::IrStmt& stmt,
                           const Sink& done) {
  size_t arm_count = stmt.arms.size();
  NodeId one = table_.ConstU64(1, 1);

  // Arm k is taken iff its own guard holds and every earlier one fails;
  // the final arm has no guard of its own.
  std::vector<NodeId> taken(arm_count);
  NodeId priors_failed = one;
  for (size_t k = 0; k < arm_count; ++k) {
    if (k < stmt.guards.size()) {
      NodeId g = EvalExpr(frame.path, *stmt.guards[k]);
      taken[k] = table_.Op2(BvOp::kAnd, priors_failed, g);
      priors_failed =
          table_.Op2(BvOp::kAnd, priors_failed, table_.NotOf(g));
    } else {
      taken[k] = priors_failed;
    }
  }

  // A constant-true arm condition means the branch is decided: take that
  // arm in place, without forking or consulting the solver.
  for (size_t k = 0; k < arm_count; ++k) {
    if (table_.IsConstValue(taken[k], 1)) {
      frame.path.trace.emplace_back(stmt.branch_id, static_cast<int>(k));
      RunStmts(std::move(frame), &stmt.arms[k], 0, done);
      return;
    }
  }

  for (size_t k = 0; k < arm_count; ++k) {
    if (table_.IsConstValue(taken[k], 0)) continue;  // arm unreachable
    Frame child = frame;
    child.path.path_condition.push_back(taken[k]);
    CheckVerdict verdict = Feasibility(child.path.path_condition);
    if (verdict == CheckVerdict::kUnsat) continue;
    if (verdict == CheckVerdict::kUnknown) {
      // Never treat an undecided check as infeasible; the child dies but
      // is accounted for.
      paths_killed_.fetch_add(1);
      continue;
    }
    child.path.trace.emplace_back(stmt.branch_id, static_cast<int>(k));
    RunStmts(std::move(child), &stmt.arms[k], 0, done);
  }
}

void Executor::RunProcesses(Frame frame, size_t proc_index, size_t proc_end,
                            const Sink& done) {
  if (proc_index == proc_end) {
    done(std::move(frame));
    return;
  }
  const ir::IrProcess& proc = design_.processes[proc_index];
  RunStmts(std::move(frame), &proc.body, 0, [&](Frame after) {
    RunProcesses(std::move(after), proc_index + 1, proc_end, done);
  });
}

std::vector<PathState> Executor::SettleComb(const PathState& state) {
  std::vector<PathState> out;
  Frame frame;
  frame.path = state;
  RunProcesses(std::move(frame), 0, static_cast<size_t>(design_.num_comb),
               [&](Frame settled) { out.push_back(std::move(settled.path)); });
  return out;
}

std::vector<PathState> Executor::StepCycle(const PathState& state) {
  if (state.status != PathStatus::kActive ||
      state.cycle >= harness_.max_cycles) {
    throw Diag(StatusCode::kInternalError,
               "step requested on a non-active path");
  }

  PathState bound = state;
  BindCycleInputs(&bound);

  std::vector<PathState> out;
  Frame frame;
  frame.path = std::move(bound);
  // Settle combinational logic, then evaluate every clocked process
  // against the settled (pre-update) store; their nonblocking writes
  // gather in the frame and land together afterwards.
  RunProcesses(
      std::move(frame), 0, static_cast<size_t>(design_.num_comb),
      [&](Frame settled) {
        RunProcesses(
            std::move(settled), static_cast<size_t>(design_.num_comb),
            design_.processes.size(), [&](Frame stepped) {
              for (const NbaWrite& w : stepped.nba) {
                int width = design_.signals[w.signal].width;
                stepped.path.store[w.signal] =
                    InsertBits(stepped.path.store[w.signal], width, w.hi,
                               w.lo, w.value);
              }
              stepped.nba.clear();
              stepped.path.cycle += 1;
              if (stepped.path.cycle >= harness_.max_cycles) {
                stepped.path.status = PathStatus::kComplete;
              }
              out.push_back(std::move(stepped.path));
            });
      });
  return out;
}

TestCase Executor::FinalizePath(const PathState& state) {
  CountSolverCall();
  CheckResult result =
      Check(table_, state.path_condition, options_.solver);
  if (result.verdict == CheckVerdict::kUnknown) {
    paths_killed_.fetch_add(1);
    TestCase dead;
    dead.id = -1;
    return dead;
  }
  if (result.verdict != CheckVerdict::kSat) {
    // Every fork on this path was certified satisfiable with the same
    // condition set, so Unsat here means the solver contradicted itself.
    throw Diag(StatusCode::kInternalError,
               "final path condition unsatisfiable after feasible forks");
  }

  TestCase test;
  test.expected_trace = state.trace;
  test.vectors.resize(harness_.max_cycles);
  for (int k = 0; k < harness_.max_cycles; ++k) {
    for (size_t i = 0; i < design_.signals.size(); ++i) {
      const std::string& name = design_.signals[i].name;
      for (const SymbolicInput& s : harness_.symbolic_inputs) {
        if (s.signal != name) continue;
        int cycle = s.mode == InputMode::kFreshPerCycle ? k : 0;
        const BitVal* v = result.model.Find(name, cycle);
        test.vectors[k].emplace_back(name, v != nullptr ? *v : BitVal{});
      }
      for (const FixedInput& f : harness_.fixed_inputs) {
        if (f.signal == name) test.vectors[k].emplace_back(name, f.value);
      }
    }
  }
  return test;
}

ExplorationResult Executor::Run() {
  int64_t start_ms = SteadyClockMs();
  if (harness_.budgets.wall_clock_ms >= 0) {
    deadline_ms_ = start_ms + harness_.budgets.wall_clock_ms;
  }

  std::mutex mu;
  std::condition_variable cv;
  std::vector<PathState> stack;
  std::vector<TestCase> completed;
  int busy = 0;
  std::exception_ptr failure;

  stack.push_back(InitState());

  auto trip_budget = [&](const char* which) {
    std::lock_guard<std::mutex> lock(budget_mu_);
    if (budget_exhausted_.empty()) budget_exhausted_ = which;
    stop_.store(true);
  };

  auto worker = [&] {
    std::unique_lock<std::mutex> lock(mu);
    for (;;) {
      cv.wait(lock, [&] {
        return stop_.load() || !stack.empty() || busy == 0;
      });
      if (stop_.load() || (stack.empty() && busy == 0)) return;
      if (stack.empty()) continue;
      PathState state = std::move(stack.back());
      stack.pop_back();
      ++busy;
      lock.unlock();

      try {
        if (deadline_ms_ >= 0 && SteadyClockMs() >= deadline_ms_) {
          trip_budget("wall_clock_ms");
        }
        if (state.status == PathStatus::kComplete) {
          TestCase test = FinalizePath(state);
          lock.lock();
          if (test.id >= 0) {
            completed.push_back(std::move(test));
            if (harness_.budgets.max_paths >= 0 &&
                static_cast<int64_t>(completed.size()) >=
                    harness_.budgets.max_paths) {
              lock.unlock();
              trip_budget("max_paths");
              lock.lock();
            }
          }
        } else {
          std::vector<PathState> children = StepCycle(state);
          lock.lock();
          // Reversed so the first arm is popped (and completed) first.
          for (auto it = children.rbegin(); it != children.rend(); ++it) {
            stack.push_back(std::move(*it));
          }
        }
      } catch (...) {
        if (!lock.owns_lock()) lock.lock();
        if (!failure) failure = std::current_exception();
        stop_.store(true);
      }
      --busy;
      cv.notify_all();
    }
  };

  if (options_.jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < options_.jobs; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Identical decision prefixes diverge at one branch with distinct arms,
  // so ordering by trace reproduces single-worker depth-first order no
  // matter how the work was scheduled.
  std::sort(completed.begin(), completed.end(),
            [](const TestCase& a, const TestCase& b) {
              return a.expected_trace < b.expected_trace;
            });
  for (size_t i = 0; i < completed.size(); ++i) {
    completed[i].id = static_cast<int>(i);
  }

  ExplorationResult out;
  out.suite.design = design_.name;
  out.suite.tests = std::move(completed);
  out.stats.tests = static_cast<int64_t>(out.suite.tests.size());
  out.stats.vectors = out.stats.tests * harness_.max_cycles;
  out.stats.paths_completed = out.stats.tests;
  out.stats.paths_killed = paths_killed_.load();
  out.stats.solver_calls = solver_calls_.load();
  {
    std::lock_guard<std::mutex> lock(budget_mu_);
    out.stats.budget_exhausted = budget_exhausted_;
  }
  out.stats.wall_clock_ms = SteadyClockMs() - start_ms;
  out.stats.peak_memory_kb = PeakMemoryKb();
  return out;
}

}  // namespace rtlsym
