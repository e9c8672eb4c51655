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

#ifndef RTLSYM_SYM_EXPR_H_
#define RTLSYM_SYM_EXPR_H_

#include <atomic>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "support/bitval.h"
#include "sym/ops.h"

namespace rtlsym {

using NodeId = uint32_t;
inline constexpr NodeId kNoNode = 0xffffffffu;

enum class BvKind : uint8_t { kConst, kVar, kOp };

// One node of the hash-consed expression DAG. Structurally equal nodes
// share a single id, so handle equality is structural equality.
struct BvNode {
  BvKind kind = BvKind::kConst;
  BvOp op = BvOp::kAdd;       // kOp only
  int width = 1;              // 1..kMaxWidth
  BitVal value;               // kConst only
  uint32_t name_id = 0;       // kVar: interned name
  int32_t cycle = 0;          // kVar: per-cycle instance tag
  int hi = 0, lo = 0;         // kExtract bounds
  std::vector<NodeId> operands;
};

// Variable identity: name plus the cycle the symbol was created for.
struct VarKey {
  std::string name;
  int cycle = 0;

  auto operator<=>(const VarKey&) const = default;
};

// Concrete values for the variables of an expression.
class Assignment {
 public:
  void Set(const std::string& name, int cycle, BitVal value) {
    values_[VarKey{name, cycle}] = value;
  }
  const BitVal* Find(const std::string& name, int cycle) const {
    auto it = values_.find(VarKey{name, cycle});
    return it == values_.end() ? nullptr : &it->second;
  }
  bool empty() const { return values_.empty(); }
  size_t size() const { return values_.size(); }
  const std::map<VarKey, BitVal>& values() const { return values_; }

 private:
  std::map<VarKey, BitVal> values_;
};

// Append-only node table. Creation is serialized by a mutex; readers may
// dereference any id they already hold without synchronization because
// nodes live in a deque and are never mutated after publication.
class NodeTable {
 public:
  NodeTable();

  // Throws Diag(kWidthError) when value does not fit or width is out of
  // range. Repeated calls with equal arguments return the same handle.
  NodeId Const(int width, BitVal value);
  NodeId ConstU64(int width, uint64_t value) {
    return Const(width, BitVal::FromU64(value));
  }
  NodeId Var(std::string_view name, int width, int cycle);

  // Generic operator constructor; applies the fixed simplification rules
  // (constant folding, identity/annihilator elements, x-op-x collapses,
  // constant-condition Ite, double negation). Throws Diag(kWidthError)
  // on operand-width violations.
  NodeId Op(BvOp op, std::vector<NodeId> operands);
  NodeId Op2(BvOp op, NodeId a, NodeId b) { return Op(op, {a, b}); }
  NodeId NotOf(NodeId a) { return Op(BvOp::kNot, {a}); }
  NodeId Ite(NodeId c, NodeId t, NodeId e) { return Op(BvOp::kIte, {c, t, e}); }
  NodeId Extract(NodeId x, int hi, int lo);
  NodeId ZeroExt(NodeId x, int new_width);

  // Truthiness of an arbitrary-width expression as a width-1 node.
  NodeId Boolify(NodeId x);

  const BvNode& node(NodeId id) const;
  int width(NodeId id) const { return node(id).width; }
  bool IsConst(NodeId id) const { return node(id).kind == BvKind::kConst; }
  bool IsConstValue(NodeId id, uint64_t v) const {
    return IsConst(id) && node(id).value == BitVal::FromU64(v);
  }
  const std::string& var_name(const BvNode& n) const;
  size_t size() const { return published_.load(std::memory_order_acquire); }

  // Evaluates under modular unsigned semantics. Throws Diag(kMissingVar)
  // when the assignment does not cover some variable of the expression.
  BitVal Eval(NodeId id, const Assignment& a) const;

  // Lists the distinct variables of the given roots in first-occurrence
  // (depth-first, operand order) order.
  std::vector<NodeId> CollectVars(std::span<const NodeId> roots) const;

 private:
  struct PendingNode;
  NodeId Intern(BvNode n);
  NodeId Simplify(BvOp op, const std::vector<NodeId>& ops, int width, int hi,
                  int lo, bool* done);

  mutable std::mutex mu_;
  std::deque<BvNode> nodes_;
  std::atomic<size_t> published_{0};
  std::unordered_map<uint64_t, std::vector<NodeId>> dedup_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, uint32_t> name_ids_;
};

// Operator semantics on concrete values, shared by constant folding,
// Eval, and nothing else; the concrete simulator carries its own copy of
// the statement-level semantics but bottoms out in the same BitVal ops.
// `widths` are the operand widths, `width` the result width.
BitVal EvalBvOp(BvOp op, int width, int hi, int lo,
                std::span<const BitVal> operand_values,
                std::span<const int> operand_widths);

// Result width for an operator application; throws Diag(kWidthError) on
// illegal operand widths (mismatched binaries, bad extract bounds,
// concat beyond kMaxWidth).
int ResultWidth(BvOp op, int hi, int lo, std::span<const int> operand_widths,
                int zext_width);

}  // namespace rtlsym

#endif  // RTLSYM_SYM_EXPR_H_
