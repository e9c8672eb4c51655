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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>
#include <utility>
#include <vector>

#include "elab/elaborate.h"
#include "exec/executor.h"
#include "exec/harness.h"
#include "exec/testsuite.h"
#include "frontend/parser.h"
#include "sim/simulate.h"
#include "solver/check.h"
#include "support/diag.h"

namespace rtlsym {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string DataPath(const std::string& rel) {
  return std::string(RTLSYM_TEST_DATA_DIR) + "/" + rel;
}

ir::RtlDesign LoadDesign(const std::string& name) {
  std::string path = DataPath("designs/" + name + ".v");
  return Elaborate(ParseSource(ReadFile(path), path));
}

Harness LoadCorpusHarness(const std::string& name) {
  return LoadHarness(DataPath("designs/" + name + ".harness"));
}

using Trace = std::vector<std::pair<int, int>>;

// Every concrete input sequence the harness admits, as replayable test
// cases: held inputs get one value for all cycles, fresh ones a value per
// cycle. The independent ground truth for exploration results.
std::vector<TestCase> EnumerateInputs(const Harness& h) {
  struct Slot {
    std::string name;
    int bits;
    int cycle;  // < 0: held
  };
  std::vector<Slot> slots;
  int total_bits = 0;
  for (const SymbolicInput& s : h.symbolic_inputs) {
    if (s.mode == InputMode::kHold) {
      slots.push_back({s.signal, s.bits, -1});
      total_bits += s.bits;
    }
  }
  for (int k = 0; k < h.max_cycles; ++k) {
    for (const SymbolicInput& s : h.symbolic_inputs) {
      if (s.mode == InputMode::kFreshPerCycle) {
        slots.push_back({s.signal, s.bits, k});
        total_bits += s.bits;
      }
    }
  }
  REQUIRE(total_bits <= 12);

  std::vector<TestCase> out;
  for (uint64_t pattern = 0; pattern < (uint64_t{1} << total_bits);
       ++pattern) {
    TestCase t;
    t.vectors.resize(h.max_cycles);
    uint64_t rest = pattern;
    for (const Slot& slot : slots) {
      uint64_t v = rest & ((uint64_t{1} << slot.bits) - 1);
      rest >>= slot.bits;
      if (slot.cycle < 0) {
        for (int k = 0; k < h.max_cycles; ++k) {
          t.vectors[k].emplace_back(slot.name, BitVal::FromU64(v));
        }
      } else {
        t.vectors[slot.cycle].emplace_back(slot.name, BitVal::FromU64(v));
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::set<Trace> BruteForceTraces(const ir::RtlDesign& design,
                                 const Harness& h) {
  std::set<Trace> traces;
  for (const TestCase& t : EnumerateInputs(h)) {
    traces.insert(Simulate(design, h, t).trace);
  }
  return traces;
}

std::set<Trace> SuiteTraces(const TestSuite& suite) {
  std::set<Trace> traces;
  for (const TestCase& t : suite.tests) traces.insert(t.expected_trace);
  return traces;
}

// A stand-in external solver: a shell script with the given body.
std::string WriteScript(const std::string& body) {
  static int counter = 0;
  std::string path = "/tmp/rtlsym_exec_mock_" + std::to_string(getpid()) +
                     "_" + std::to_string(counter++) + ".sh";
  std::ofstream out(path);
  out << "#!/bin/sh\n" << body << "\n";
  out.close();
  return "sh " + path;
}

const BitVal* FindVec(const std::vector<std::pair<std::string, BitVal>>& vec,
                      const std::string& name) {
  for (const auto& [n, v] : vec) {
    if (n == name) return &v;
  }
  return nullptr;
}

// ---------------------------------------------------------------------
// Initial state

TEST_CASE("executor: initial store binds symbols, constants, and zeros") {
  ir::RtlDesign design = LoadDesign("mux");
  Harness h = LoadCorpusHarness("mux");
  Executor ex(design, h);

  PathState init = ex.InitState();
  REQUIRE(init.store.size() == design.signals.size());
  CHECK(init.store[design.FindSignal("sel")] == ex.table().Var("sel", 1, 0));
  CHECK(ex.table().IsConstValue(init.store[design.FindSignal("din_0")], 1));
  CHECK(ex.table().IsConstValue(init.store[design.FindSignal("din_1")], 0));
  CHECK(ex.table().IsConstValue(init.store[design.FindSignal("mux_out")], 0));
  CHECK(init.cycle == 0);
  CHECK(init.path_condition.empty());
  CHECK(init.status == PathStatus::kActive);
}

TEST_CASE("executor: harness violations surface at construction") {
  ir::RtlDesign design = LoadDesign("mux");

  Harness h = LoadCorpusHarness("mux");
  h.symbolic_inputs[0].signal = "selx";
  try {
    Executor ex(design, h);
    FAIL_CHECK("expected a harness error");
  } catch (const Diag& d) {
    CHECK(d.code() == StatusCode::kHarnessError);
    CHECK(d.message().find("unknown signal 'selx'") != std::string::npos);
  }

  h = LoadCorpusHarness("mux");
  h.symbolic_inputs[0].bits = 8;
  try {
    Executor ex(design, h);
    FAIL_CHECK("expected a harness error");
  } catch (const Diag& d) {
    CHECK(d.code() == StatusCode::kHarnessError);
    CHECK(d.message().find("width mismatch: 'sel' declared 1") !=
          std::string::npos);
  }
}

// ---------------------------------------------------------------------
// Combinational settling and forking

TEST_CASE("executor: symbolic select forks into both mux arms") {
  ir::RtlDesign design = LoadDesign("mux");
  Harness h = LoadCorpusHarness("mux");
  Executor ex(design, h);

  std::vector<PathState> children = ex.SettleComb(ex.InitState());
  REQUIRE(children.size() == 2);
  CHECK(ex.solver_calls() == 2);  // one feasibility check per arm

  int mux_out = design.FindSignal("mux_out");
  const PathState& then_arm = children[0];
  const PathState& else_arm = children[1];

  CHECK(then_arm.trace == Trace{{0, 0}});
  CHECK(else_arm.trace == Trace{{0, 1}});
  // din_0 = 1 flows through the first arm, din_1 = 0 through the second.
  CHECK(ex.table().IsConstValue(then_arm.store[mux_out], 1));
  CHECK(ex.table().IsConstValue(else_arm.store[mux_out], 0));

  // The recorded conditions really are [sel == 0] and [sel != 0].
  REQUIRE(then_arm.path_condition.size() == 1);
  REQUIRE(else_arm.path_condition.size() == 1);
  Assignment sel0, sel1;
  sel0.Set("sel", 0, BitVal::FromU64(0));
  sel1.Set("sel", 0, BitVal::FromU64(1));
  CHECK(ex.table().Eval(then_arm.path_condition[0], sel0).AsU64() == 1);
  CHECK(ex.table().Eval(then_arm.path_condition[0], sel1).AsU64() == 0);
  CHECK(ex.table().Eval(else_arm.path_condition[0], sel0).AsU64() == 0);
  CHECK(ex.table().Eval(else_arm.path_condition[0], sel1).AsU64() == 1);
}

TEST_CASE("executor: a pinned select decides the branch without forking") {
  ir::RtlDesign design = LoadDesign("mux");
  Harness h = LoadCorpusHarness("mux");
  h.symbolic_inputs.clear();
  h.fixed_inputs.push_back({"sel", BitVal::FromU64(0)});

  Executor ex(design, h);
  std::vector<PathState> children = ex.SettleComb(ex.InitState());
  REQUIRE(children.size() == 1);
  CHECK(children[0].path_condition.empty());
  CHECK(children[0].trace == Trace{{0, 0}});
  CHECK(ex.solver_calls() == 0);  // the branch folded; no solver involved
}

TEST_CASE("executor: two independent branches give four children") {
  ir::RtlDesign design = LoadDesign("twocmp");
  Harness h = LoadCorpusHarness("twocmp");
  Executor ex(design, h);

  std::vector<PathState> children = ex.SettleComb(ex.InitState());
  REQUIRE(children.size() == 4);

  int x = design.FindSignal("x");
  CHECK(children[0].trace == Trace{{0, 0}, {1, 0}});
  CHECK(children[1].trace == Trace{{0, 0}, {1, 1}});
  CHECK(children[2].trace == Trace{{0, 1}, {1, 0}});
  CHECK(children[3].trace == Trace{{0, 1}, {1, 1}});
  CHECK(ex.table().IsConstValue(children[0].store[x], 3));
  CHECK(ex.table().IsConstValue(children[1].store[x], 1));
  CHECK(ex.table().IsConstValue(children[2].store[x], 2));
  CHECK(ex.table().IsConstValue(children[3].store[x], 0));

  // Path disjointness: distinct children contradict each other.
  SolverConfig config;
  for (size_t i = 0; i < children.size(); ++i) {
    for (size_t j = i + 1; j < children.size(); ++j) {
      std::vector<NodeId> both = children[i].path_condition;
      both.insert(both.end(), children[j].path_condition.begin(),
                  children[j].path_condition.end());
      CHECK(Check(ex.table(), both, config).verdict == CheckVerdict::kUnsat);
    }
  }
}

// ---------------------------------------------------------------------
// Cycle stepping

TEST_CASE("executor: counter forks once per cycle on the fresh enable") {
  ir::RtlDesign design = LoadDesign("counter2");
  Harness h = LoadCorpusHarness("counter2");
  Executor ex(design, h);

  ExplorationResult r = ex.Run();
  REQUIRE(r.suite.tests.size() == 4);
  CHECK(r.stats.tests == 4);
  CHECK(r.stats.vectors == 8);
  CHECK(r.stats.paths_completed == 4);
  CHECK(r.stats.paths_killed == 0);
  CHECK(r.stats.budget_exhausted.empty());
  // 2 feasibility checks at cycle 0, 4 at cycle 1, 4 final checks.
  CHECK(r.stats.solver_calls == 10);

  // Depth-first order: arm 0 (enable taken) first at every fork.
  uint64_t want_en[4][2] = {{1, 1}, {1, 0}, {0, 1}, {0, 0}};
  for (int i = 0; i < 4; ++i) {
    const TestCase& t = r.suite.tests[i];
    CHECK(t.id == i);
    REQUIRE(t.vectors.size() == 2);
    for (int k = 0; k < 2; ++k) {
      const BitVal* en = FindVec(t.vectors[k], "en");
      REQUIRE(en != nullptr);
      CHECK(en->AsU64() == want_en[i][k]);
    }
  }
}

TEST_CASE("executor: held inputs repeat their cycle-zero value") {
  ir::RtlDesign design = LoadDesign("counter2");
  Harness h = LoadCorpusHarness("counter2");
  h.symbolic_inputs[0].mode = InputMode::kHold;
  Executor ex(design, h);

  ExplorationResult r = ex.Run();
  REQUIRE(r.suite.tests.size() == 2);
  CHECK(r.suite.tests[0].expected_trace == Trace{{0, 0}, {0, 0}});
  CHECK(r.suite.tests[1].expected_trace == Trace{{0, 1}, {0, 1}});
  for (const TestCase& t : r.suite.tests) {
    const BitVal* en0 = FindVec(t.vectors[0], "en");
    const BitVal* en1 = FindVec(t.vectors[1], "en");
    REQUIRE(en0 != nullptr);
    REQUIRE(en1 != nullptr);
    CHECK(en0->AsU64() == en1->AsU64());
  }
  CHECK(r.suite.tests[0].vectors[0][0].second.AsU64() == 1);
  CHECK(r.suite.tests[1].vectors[0][0].second.AsU64() == 0);
}

TEST_CASE("executor: reset folds the branch during its hold cycles") {
  ir::RtlDesign design = LoadDesign("rcounter");
  Harness h = LoadCorpusHarness("rcounter");

  Executor probe(design, h);
  std::vector<PathState> after_reset = probe.StepCycle(probe.InitState());
  REQUIRE(after_reset.size() == 1);  // no fork while reset is asserted
  CHECK(probe.solver_calls() == 0);
  CHECK(after_reset[0].trace == Trace{{0, 0}});
  CHECK(after_reset[0].cycle == 1);

  Executor ex(design, h);
  ExplorationResult r = ex.Run();
  REQUIRE(r.suite.tests.size() == 4);
  CHECK(r.stats.vectors == 12);
  for (const TestCase& t : r.suite.tests) {
    // Cycle 0 is reset-dominated; en is unconstrained there and defaults 0.
    const BitVal* en0 = FindVec(t.vectors[0], "en");
    REQUIRE(en0 != nullptr);
    CHECK(en0->AsU64() == 0);
  }
}

TEST_CASE("executor: stepping a completed path is an internal error") {
  ir::RtlDesign design = LoadDesign("mux");
  Harness h = LoadCorpusHarness("mux");
  Executor ex(design, h);

  std::vector<PathState> done = ex.StepCycle(ex.InitState());
  REQUIRE(!done.empty());
  CHECK(done[0].status == PathStatus::kComplete);
  try {
    ex.StepCycle(done[0]);
    FAIL_CHECK("expected an internal error");
  } catch (const Diag& d) {
    CHECK(d.code() == StatusCode::kInternalError);
  }
}

// ---------------------------------------------------------------------
// Whole-run behavior

TEST_CASE("executor: mux run yields exactly the two select values") {
  ir::RtlDesign design = LoadDesign("mux");
  Harness h = LoadCorpusHarness("mux");
  Executor ex(design, h);

  ExplorationResult r = ex.Run();
  REQUIRE(r.suite.tests.size() == 2);
  CHECK(r.suite.design == "mux");
  const BitVal* sel0 = FindVec(r.suite.tests[0].vectors[0], "sel");
  const BitVal* sel1 = FindVec(r.suite.tests[1].vectors[0], "sel");
  REQUIRE(sel0 != nullptr);
  REQUIRE(sel1 != nullptr);
  CHECK(sel0->AsU64() == 0);
  CHECK(sel1->AsU64() == 1);
  // Fixed inputs ride along in every vector.
  CHECK(FindVec(r.suite.tests[0].vectors[0], "din_0")->AsU64() == 1);
  CHECK(FindVec(r.suite.tests[0].vectors[0], "din_1")->AsU64() == 0);
}

TEST_CASE("executor: zero symbolic inputs give exactly one test") {
  ir::RtlDesign design = LoadDesign("mux");
  Harness h = LoadCorpusHarness("mux");
  h.symbolic_inputs.clear();
  h.fixed_inputs.push_back({"sel", BitVal::FromU64(1)});

  Executor ex(design, h);
  ExplorationResult r = ex.Run();
  REQUIRE(r.suite.tests.size() == 1);
  CHECK(r.suite.tests[0].expected_trace == Trace{{0, 1}});
}

TEST_CASE("executor: generated traces equal brute-force enumeration") {
  // Bounded completeness on every corpus design small enough to
  // enumerate: the suite's branch-outcome sequences match ground truth.
  for (const char* name :
       {"mux", "twocmp", "counter2", "rcounter", "shifty", "muxcase"}) {
    CAPTURE(name);
    ir::RtlDesign design = LoadDesign(name);
    Harness h = LoadCorpusHarness(name);
    Executor ex(design, h);
    ExplorationResult r = ex.Run();
    CHECK(SuiteTraces(r.suite) == BruteForceTraces(design, h));
    // Traces are also pairwise distinct, i.e. one test per path.
    CHECK(SuiteTraces(r.suite).size() == r.suite.tests.size());
  }
}

TEST_CASE("executor: replay reproduces every expected trace") {
  for (const char* name : {"mux", "twocmp", "counter2", "rcounter", "alu4",
                           "shifty", "muxcase"}) {
    CAPTURE(name);
    ir::RtlDesign design = LoadDesign(name);
    Harness h = LoadCorpusHarness(name);
    Executor ex(design, h);
    ExplorationResult r = ex.Run();
    REQUIRE(!r.suite.tests.empty());
    for (const TestCase& t : r.suite.tests) {
      CAPTURE(t.id);
      SimResult sim = Simulate(design, h, t);
      CHECK(sim.trace == t.expected_trace);
    }
  }
}

TEST_CASE("executor: all-fixed inputs degenerate to the concrete run") {
  struct Pin {
    const char* design;
    std::vector<std::pair<std::string, uint64_t>> values;
  };
  std::vector<Pin> pins = {
      {"twocmp", {{"a", 5}, {"b", 9}}},
      {"alu4", {{"op", 2}, {"a", 12}, {"b", 10}}},
      {"fpu8", {{"opcode", 3}, {"opa", 200}, {"opb", 0}, {"rmode", 1}}},
  };
  for (const Pin& pin : pins) {
    CAPTURE(pin.design);
    ir::RtlDesign design = LoadDesign(pin.design);
    Harness h = LoadCorpusHarness(pin.design);
    h.symbolic_inputs.clear();
    for (const auto& [name, value] : pin.values) {
      h.fixed_inputs.push_back({name, BitVal::FromU64(value)});
    }

    Executor ex(design, h);
    ExplorationResult r = ex.Run();
    REQUIRE(r.suite.tests.size() == 1);
    CHECK(ex.solver_calls() == 1);  // only the final (empty) check

    // The symbolic stores fold to constants equal to the simulator's
    // settled values, signal by signal, cycle by cycle.
    SimResult sim = Simulate(design, h, r.suite.tests[0]);
    Executor walk(design, h);
    PathState state = walk.InitState();
    for (int k = 0; k < h.max_cycles; ++k) {
      std::vector<PathState> settled = walk.SettleComb(state);
      REQUIRE(settled.size() == 1);
      for (size_t i = 0; i < design.signals.size(); ++i) {
        CAPTURE(k);
        CAPTURE(design.signals[i].name);
        NodeId node = settled[0].store[i];
        REQUIRE(walk.table().IsConst(node));
        CHECK(walk.table().node(node).value == sim.settled_values[k][i]);
      }
      std::vector<PathState> next = walk.StepCycle(state);
      REQUIRE(next.size() == 1);
      state = next[0];
    }
    for (size_t i = 0; i < design.signals.size(); ++i) {
      NodeId node = state.store[i];
      REQUIRE(walk.table().IsConst(node));
      CHECK(walk.table().node(node).value == sim.final_state.values[i]);
    }
  }
}

TEST_CASE("executor: suite bytes are identical for any worker count") {
  for (const char* name : {"twocmp", "alu4", "counter2"}) {
    CAPTURE(name);
    ir::RtlDesign design = LoadDesign(name);
    Harness h = LoadCorpusHarness(name);

    std::string reference;
    ExplorationStats ref_stats;
    for (int jobs : {1, 2, 8}) {
      CAPTURE(jobs);
      ExecOptions options;
      options.jobs = jobs;
      Executor ex(design, h, options);
      ExplorationResult r = ex.Run();
      std::string text = FormatTestSuite(r.suite, design);
      if (jobs == 1) {
        reference = text;
        ref_stats = r.stats;
        CHECK(!reference.empty());
      } else {
        CHECK(text == reference);
        CHECK(r.stats.tests == ref_stats.tests);
        CHECK(r.stats.vectors == ref_stats.vectors);
        CHECK(r.stats.paths_completed == ref_stats.paths_completed);
        CHECK(r.stats.paths_killed == ref_stats.paths_killed);
        CHECK(r.stats.solver_calls == ref_stats.solver_calls);
        CHECK(r.stats.budget_exhausted == ref_stats.budget_exhausted);
      }
    }
  }
}

// ---------------------------------------------------------------------
// Budgets and solver trouble

TEST_CASE("executor: path budget stops after the first N tests") {
  ir::RtlDesign design = LoadDesign("twocmp");
  Harness h = LoadCorpusHarness("twocmp");
  h.budgets.max_paths = 2;

  Executor ex(design, h);
  ExplorationResult r = ex.Run();
  CHECK(r.stats.budget_exhausted == "max_paths");
  REQUIRE(r.suite.tests.size() == 2);
  // The partial suite is the depth-first prefix.
  CHECK(r.suite.tests[0].expected_trace == Trace{{0, 0}, {1, 0}});
  CHECK(r.suite.tests[1].expected_trace == Trace{{0, 0}, {1, 1}});
}

TEST_CASE("executor: solver-call budget trips and is recorded") {
  ir::RtlDesign design = LoadDesign("twocmp");
  Harness h = LoadCorpusHarness("twocmp");
  h.budgets.max_solver_calls = 1;

  Executor ex(design, h);
  ExplorationResult r = ex.Run();
  CHECK(r.stats.budget_exhausted == "max_solver_calls");
  CHECK(r.suite.tests.size() < 4);
}

TEST_CASE("executor: an expired clock budget still returns cleanly") {
  ir::RtlDesign design = LoadDesign("counter2");
  Harness h = LoadCorpusHarness("counter2");
  // A zero allowance is already spent when the first path is picked up,
  // so the run stops before producing anything.
  h.budgets.wall_clock_ms = 0;

  Executor ex(design, h);
  ExplorationResult r = ex.Run();
  CHECK(r.stats.budget_exhausted == "wall_clock_ms");
  CHECK(r.suite.tests.empty());
}

TEST_CASE("executor: undecided feasibility kills the child, not the run") {
  ir::RtlDesign design = LoadDesign("mux");
  Harness h = LoadCorpusHarness("mux");

  ExecOptions options;
  options.solver.backend = SolverConfig::Backend::kExternal;
  options.solver.external_cmd = WriteScript("echo unknown");
  Executor ex(design, h, options);

  ExplorationResult r = ex.Run();
  CHECK(r.suite.tests.empty());
  CHECK(r.stats.paths_killed == 2);
  CHECK(r.stats.budget_exhausted.empty());
}

TEST_CASE("executor: a broken solver aborts the run loudly") {
  ir::RtlDesign design = LoadDesign("mux");
  Harness h = LoadCorpusHarness("mux");

  ExecOptions options;
  options.solver.backend = SolverConfig::Backend::kExternal;
  options.solver.external_cmd = WriteScript("echo flagrant nonsense");
  Executor ex(design, h, options);

  try {
    ex.Run();
    FAIL_CHECK("expected a solver error");
  } catch (const Diag& d) {
    CHECK(d.code() == StatusCode::kSolverError);
  }
}

}  // namespace
}  // namespace rtlsym
