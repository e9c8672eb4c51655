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

#include "sym/smtlib.h"

#include <unordered_map>
#include <unordered_set>

#include "support/diag.h"

namespace rtlsym {

std::string SmtVarSymbol(const std::string& name, int cycle) {
  if (cycle == 0) return name;
  return name + "$" + std::to_string(cycle);
}

namespace {

std::string BinLiteral(BitVal v, int width) {
  std::string s = "#b";
  for (int i = width - 1; i >= 0; --i) {
    s.push_back(v.Bit(i) ? '1' : '0');
  }
  return s;
}

std::string ZeroLiteral(int width) {
  return BinLiteral(BitVal(), width);
}

class ScriptWriter {
 public:
  explicit ScriptWriter(const NodeTable& table) : table_(table) {}

  std::string Render(std::span<const NodeId> constraints) {
    std::string out = "(set-logic QF_BV)\n";
    for (NodeId var : table_.CollectVars(constraints)) {
      const BvNode& n = table_.node(var);
      out += "(declare-const " + SmtVarSymbol(table_.var_name(n), n.cycle) +
             " (_ BitVec " + std::to_string(n.width) + "))\n";
    }
    for (NodeId c : constraints) {
      EmitDefs(c, &out);
    }
    for (NodeId c : constraints) {
      out += "(assert (= " + Ref(c) + " #b1))\n";
    }
    out += "(check-sat)\n(get-model)\n";
    return out;
  }

 private:
  // Emits define-fun lines for every operator node under `root` in
  // topological order (operands before users).
  void EmitDefs(NodeId root, std::string* out) {
    std::vector<std::pair<NodeId, bool>> stack;
    stack.emplace_back(root, false);
    while (!stack.empty()) {
      auto [id, expanded] = stack.back();
      stack.pop_back();
      if (defined_.count(id)) continue;
      const BvNode& n = table_.node(id);
      if (n.kind != BvKind::kOp) {
        defined_.insert(id);
        continue;
      }
      if (!expanded) {
        stack.emplace_back(id, true);
        for (auto it = n.operands.rbegin(); it != n.operands.rend(); ++it) {
          stack.emplace_back(*it, false);
        }
        continue;
      }
      defined_.insert(id);
      const std::string name = "t" + std::to_string(next_def_++);
      names_[id] = name;
      *out += "(define-fun " + name + " () (_ BitVec " +
              std::to_string(n.width) + ") " + OpTerm(n) + ")\n";
    }
  }

  std::string Ref(NodeId id) {
    const BvNode& n = table_.node(id);
    switch (n.kind) {
      case BvKind::kConst:
        return BinLiteral(n.value, n.width);
      case BvKind::kVar:
        return SmtVarSymbol(table_.var_name(n), n.cycle);
      case BvKind::kOp:
        return names_.at(id);
    }
    throw Diag(StatusCode::kInternalError, "bad node kind");
  }

  std::string OpTerm(const BvNode& n) {
    auto a = [&](size_t i) { return Ref(n.operands[i]); };
    const int w0 =
        n.operands.empty() ? 0 : table_.node(n.operands[0]).width;
    switch (n.op) {
      case BvOp::kAdd: return "(bvadd " + a(0) + " " + a(1) + ")";
      case BvOp::kSub: return "(bvsub " + a(0) + " " + a(1) + ")";
      case BvOp::kMul: return "(bvmul " + a(0) + " " + a(1) + ")";
      case BvOp::kUdiv:
        return "(ite (= " + a(1) + " " + ZeroLiteral(w0) + ") " +
               ZeroLiteral(n.width) + " (bvudiv " + a(0) + " " + a(1) + "))";
      case BvOp::kUrem:
        return "(ite (= " + a(1) + " " + ZeroLiteral(w0) + ") " +
               ZeroLiteral(n.width) + " (bvurem " + a(0) + " " + a(1) + "))";
      case BvOp::kAnd: return "(bvand " + a(0) + " " + a(1) + ")";
      case BvOp::kOr: return "(bvor " + a(0) + " " + a(1) + ")";
      case BvOp::kXor: return "(bvxor " + a(0) + " " + a(1) + ")";
      case BvOp::kNot: return "(bvnot " + a(0) + ")";
      case BvOp::kShl: return "(bvshl " + a(0) + " " + a(1) + ")";
      case BvOp::kLshr: return "(bvlshr " + a(0) + " " + a(1) + ")";
      case BvOp::kEq:
        return "(ite (= " + a(0) + " " + a(1) + ") #b1 #b0)";
      case BvOp::kUlt:
        return "(ite (bvult " + a(0) + " " + a(1) + ") #b1 #b0)";
      case BvOp::kUle:
        return "(ite (bvule " + a(0) + " " + a(1) + ") #b1 #b0)";
      case BvOp::kRedAnd:
        return "(ite (= " + a(0) + " " + BinLiteral(BitVal::Ones(w0), w0) +
               ") #b1 #b0)";
      case BvOp::kRedOr:
        return "(ite (= " + a(0) + " " + ZeroLiteral(w0) + ") #b0 #b1)";
      case BvOp::kRedXor: {
        if (w0 == 1) return a(0);
        std::string term = "(bvxor";
        for (int i = 0; i < w0; ++i) {
          term += " ((_ extract " + std::to_string(i) + " " +
                  std::to_string(i) + ") " + a(0) + ")";
        }
        return term + ")";
      }
      case BvOp::kIte:
        return "(ite (= " + a(0) + " #b1) " + a(1) + " " + a(2) + ")";
      case BvOp::kExtract:
        return "((_ extract " + std::to_string(n.hi) + " " +
               std::to_string(n.lo) + ") " + a(0) + ")";
      case BvOp::kConcat: {
        // concat is binary in SMT-LIB; fold right over the operands.
        std::string term = a(n.operands.size() - 1);
        for (size_t i = n.operands.size() - 1; i-- > 0;) {
          term = "(concat " + a(i) + " " + term + ")";
        }
        return term;
      }
      case BvOp::kZeroExt:
        return "((_ zero_extend " + std::to_string(n.width - w0) + ") " +
               a(0) + ")";
    }
    throw Diag(StatusCode::kInternalError, "bad operator");
  }

  const NodeTable& table_;
  std::unordered_set<NodeId> defined_;
  std::unordered_map<NodeId, std::string> names_;
  int next_def_ = 0;
};

}  // namespace

std::string ToSmtLib(const NodeTable& table,
                     std::span<const NodeId> constraints) {
  return ScriptWriter(table).Render(constraints);
}

}  // namespace rtlsym
