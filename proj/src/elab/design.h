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

#ifndef RTLSYM_ELAB_DESIGN_H_
#define RTLSYM_ELAB_DESIGN_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "support/bitval.h"
#include "support/diag.h"
#include "sym/ops.h"

namespace rtlsym::ir {

struct Signal {
  enum class Kind { kInput, kOutput, kInternal };
  std::string name;
  int width = 1;
  Kind kind = Kind::kInternal;
  bool is_reg = false;
  SourceLoc loc;
};

// Expression tree with explicit result widths. Lowering inserts ZeroExt /
// Extract nodes so that every binary operator sees equal-width operands;
// the symbolic builder and the concrete interpreter can therefore share
// one operator semantics (EvalBvOp / NodeTable::Op).
struct IrExpr {
  enum class Kind { kConst, kSignal, kOp };

  Kind kind = Kind::kConst;
  int width = 1;
  SourceLoc loc;

  BitVal value;      // kConst
  int signal = -1;   // kSignal: index into RtlDesign::signals

  BvOp op = BvOp::kAdd;                         // kOp
  int hi = 0, lo = 0;                           // kExtract bounds
  std::vector<std::unique_ptr<IrExpr>> operands;
};

// Assignment target: a contiguous bit range [hi:lo] of one signal.
// Whole-signal writes use hi = width-1, lo = 0.
struct LhsRef {
  int signal = -1;
  int hi = 0, lo = 0;
  SourceLoc loc;

  int width() const { return hi - lo + 1; }
};

struct IrStmt {
  enum class Kind { kAssign, kBranch };

  Kind kind = Kind::kAssign;
  SourceLoc loc;

  // kAssign. `rhs` is already fitted to lhs.width().
  int stmt_id = -1;
  LhsRef lhs;
  std::unique_ptr<IrExpr> rhs;
  bool nonblocking = false;

  // kBranch: unified if/case. Arm k (k < guards.size()) is taken iff
  // guards[k] evaluates to 1 and all guards[j<k] evaluated to 0; the last
  // arm (else / default) is taken iff every guard evaluated to 0. Guards
  // have width 1. arms.size() == guards.size() + 1.
  int branch_id = -1;
  std::vector<std::unique_ptr<IrExpr>> guards;
  std::vector<std::vector<IrStmt>> arms;
};

struct IrProcess {
  enum class Kind { kComb, kClocked };

  int id = -1;
  Kind kind = Kind::kComb;
  bool posedge = true;     // kClocked
  int clock_signal = -1;   // kClocked
  std::vector<IrStmt> body;

  // Upward-exposed reads: signals whose value on process entry can affect
  // the process. Reads that only see values the process itself assigned
  // earlier in the body are excluded, so `t = a; y = t;` depends on `a`
  // but not on `t`.
  std::vector<int> read_signals;
  std::vector<int> write_signals;
  SourceLoc loc;
};

struct StmtInfo {
  SourceLoc loc;
};

struct BranchInfo {
  SourceLoc loc;
  int arm_count = 2;
};

struct RtlDesign {
  std::string name;
  std::string source_file;

  // Ports in port-list order, then internal nets in declaration order.
  std::vector<Signal> signals;

  // Combinational processes first, in topological dependency order,
  // followed by clocked processes in source order. Process ids equal
  // vector positions.
  std::vector<IrProcess> processes;
  int num_comb = 0;

  // Coverage tables: stmt_table enumerates assignment statements,
  // branch_table enumerates if/case statements; ids equal positions.
  std::vector<StmtInfo> stmt_table;
  std::vector<BranchInfo> branch_table;

  std::vector<std::string> warnings;

  int FindSignal(std::string_view name) const {
    for (size_t i = 0; i < signals.size(); ++i) {
      if (signals[i].name == name) return static_cast<int>(i);
    }
    return -1;
  }
};

}  // namespace rtlsym::ir

#endif  // RTLSYM_ELAB_DESIGN_H_
