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

#include "sim/simulate.h"

#include <string>

#include "support/diag.h"
#include "sym/expr.h"

namespace rtlsym {
namespace {

[[noreturn]] void VectorFail(const std::string& msg) {
  throw Diag(StatusCode::kVectorError, msg);
}

struct NbaWrite {
  int signal = -1;
  int hi = 0, lo = 0;
  BitVal value;
};

class Interpreter {
 public:
  Interpreter(const ir::RtlDesign& design, const Harness& harness)
      : design_(design), harness_(harness) {
    result_.coverage = EmptyCoverage(design);
    result_.final_state.values.assign(design.signals.size(), BitVal{});
  }

  SimResult Run(const TestCase& test) {
    for (size_t k = 0; k < test.vectors.size(); ++k) {
      ApplyInputs(test.vectors[k], static_cast<int>(k));
      Settle();
      result_.settled_values.push_back(values());
      RunClocked();
      result_.final_state.cycle += 1;
    }
    return std::move(result_);
  }

 private:
  std::vector<BitVal>& values() { return result_.final_state.values; }

  void ApplyInputs(const std::vector<std::pair<std::string, BitVal>>& vec,
                   int cycle) {
    for (const auto& [name, value] : vec) {
      int idx = design_.FindSignal(name);
      if (idx < 0) VectorFail("test vector names unknown signal '" + name + "'");
      const ir::Signal& sig = design_.signals[idx];
      if (sig.kind != ir::Signal::Kind::kInput) {
        VectorFail("test vector drives non-input signal '" + name + "'");
      }
      if (!bv::Fits(value, sig.width)) {
        VectorFail("value for '" + name + "' does not fit " +
                   std::to_string(sig.width) + " bits");
      }
      values()[idx] = value;
    }
    // Harness-driven signals win over anything the vector may claim.
    if (harness_.reset.has_value()) {
      const ResetSpec& r = *harness_.reset;
      int level = cycle < r.hold_cycles ? r.active_level
                                        : 1 - r.active_level;
      values()[design_.FindSignal(r.signal)] = BitVal::FromU64(level);
    }
    for (const FixedInput& f : harness_.fixed_inputs) {
      values()[design_.FindSignal(f.signal)] = f.value;
    }
  }

  BitVal Eval(const ir::IrExpr& e) {
    switch (e.kind) {
      case ir::IrExpr::Kind::kConst:
        return e.value;
      case ir::IrExpr::Kind::kSignal:
        return values()[e.signal];
      case ir::IrExpr::Kind::kOp:
        break;
    }
    std::vector<BitVal> operand_values;
    std::vector<int> operand_widths;
    operand_values.reserve(e.operands.size());
    operand_widths.reserve(e.operands.size());
    for (const auto& op : e.operands) {
      operand_values.push_back(Eval(*op));
      operand_widths.push_back(op->width);
    }
    return EvalBvOp(e.op, e.width, e.hi, e.lo, operand_values,
                    operand_widths);
  }

  void WriteBits(int signal, int hi, int lo, BitVal value) {
    const ir::Signal& sig = design_.signals[signal];
    if (hi == sig.width - 1 && lo == 0) {
      values()[signal] = value;
      return;
    }
    BitVal whole = values()[signal];
    BitVal cleared =
        bv::And(whole, bv::Not(bv::Shl(BitVal::Ones(hi - lo + 1),
                                       BitVal::FromU64(lo), sig.width),
                               sig.width));
    values()[signal] =
        bv::Or(cleared, bv::Shl(value, BitVal::FromU64(lo), sig.width));
  }

  // `counting` is false during settle verification re-runs, so coverage
  // and the trace reflect each evaluation exactly once.
  void RunStmts(const std::vector<ir::IrStmt>& stmts, bool counting) {
    for (const ir::IrStmt& stmt : stmts) {
      if (stmt.kind == ir::IrStmt::Kind::kAssign) {
        BitVal value = Eval(*stmt.rhs);
        if (counting) {
          result_.coverage.stmt_hits[stmt.stmt_id] += 1;
        }
        if (stmt.nonblocking) {
          if (counting) {
            nba_.push_back(NbaWrite{stmt.lhs.signal, stmt.lhs.hi, stmt.lhs.lo,
                                    value});
          }
        } else {
          WriteBits(stmt.lhs.signal, stmt.lhs.hi, stmt.lhs.lo, value);
        }
        continue;
      }
      // Branch: first guard that evaluates to 1 wins; otherwise the last
      // arm (else / default).
      size_t taken = stmt.guards.size();
      for (size_t k = 0; k < stmt.guards.size(); ++k) {
        if (Eval(*stmt.guards[k]) == BitVal::FromU64(1)) {
          taken = k;
          break;
        }
      }
      if (counting) {
        result_.coverage.branch_hits[stmt.branch_id][taken] += 1;
        result_.trace.emplace_back(stmt.branch_id, static_cast<int>(taken));
      }
      RunStmts(stmt.arms[taken], counting);
    }
  }

  void Settle() {
    // One pass in dependency order settles an acyclic design; coverage
    // counts this pass only.
    for (int p = 0; p < design_.num_comb; ++p) {
      RunStmts(design_.processes[p].body, /*counting=*/true);
    }
    // Re-run until stable as a guard against broken ordering invariants.
    for (int round = 0; round <= design_.num_comb; ++round) {
      std::vector<BitVal> before = values();
      for (int p = 0; p < design_.num_comb; ++p) {
        RunStmts(design_.processes[p].body, /*counting=*/false);
      }
      if (values() == before) return;
    }
    throw Diag(StatusCode::kInternalError,
               "combinational settle did not converge within " +
                   std::to_string(design_.num_comb + 1) + " iterations");
  }

  void RunClocked() {
    nba_.clear();
    for (size_t p = design_.num_comb; p < design_.processes.size(); ++p) {
      RunStmts(design_.processes[p].body, /*counting=*/true);
    }
    for (const NbaWrite& w : nba_) {
      WriteBits(w.signal, w.hi, w.lo, w.value);
    }
  }

  const ir::RtlDesign& design_;
  const Harness& harness_;
  SimResult result_;
  std::vector<NbaWrite> nba_;
};

}  // namespace

SimResult Simulate(const ir::RtlDesign& design, const Harness& harness,
                   const TestCase& test) {
  return Interpreter(design, harness).Run(test);
}

}  // namespace rtlsym
