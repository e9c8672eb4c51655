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

#include "sym/expr.h"

#include <cassert>

#include "support/diag.h"

namespace rtlsym {

const char* BvOpName(BvOp op) {
  switch (op) {
    case BvOp::kAdd: return "add";
    case BvOp::kSub: return "sub";
    case BvOp::kMul: return "mul";
    case BvOp::kUdiv: return "udiv";
    case BvOp::kUrem: return "urem";
    case BvOp::kAnd: return "and";
    case BvOp::kOr: return "or";
    case BvOp::kXor: return "xor";
    case BvOp::kNot: return "not";
    case BvOp::kShl: return "shl";
    case BvOp::kLshr: return "lshr";
    case BvOp::kEq: return "eq";
    case BvOp::kUlt: return "ult";
    case BvOp::kUle: return "ule";
    case BvOp::kRedAnd: return "redand";
    case BvOp::kRedOr: return "redor";
    case BvOp::kRedXor: return "redxor";
    case BvOp::kIte: return "ite";
    case BvOp::kExtract: return "extract";
    case BvOp::kConcat: return "concat";
    case BvOp::kZeroExt: return "zeroext";
  }
  return "?";
}

const char* StatusCodeName(StatusCode code) {
  switch (code) {
    case StatusCode::kOk: return "ok";
    case StatusCode::kIoError: return "io-error";
    case StatusCode::kLexError: return "lex-error";
    case StatusCode::kParseError: return "parse-error";
    case StatusCode::kElabError: return "elab-error";
    case StatusCode::kWidthError: return "width-error";
    case StatusCode::kHarnessError: return "harness-error";
    case StatusCode::kVectorError: return "vector-error";
    case StatusCode::kFormatError: return "format-error";
    case StatusCode::kSolverError: return "solver-error";
    case StatusCode::kMissingVar: return "missing-var";
    case StatusCode::kInternalError: return "internal-error";
    case StatusCode::kUsageError: return "usage-error";
  }
  return "?";
}

int ResultWidth(BvOp op, int hi, int lo, std::span<const int> operand_widths,
                int zext_width) {
  auto require = [&](bool ok, std::string msg) {
    if (!ok) throw Diag(StatusCode::kWidthError, std::move(msg));
  };
  auto same_binary = [&]() {
    require(operand_widths.size() == 2, "operator takes two operands");
    require(operand_widths[0] == operand_widths[1],
            "operand width mismatch: " + std::to_string(operand_widths[0]) +
                " vs " + std::to_string(operand_widths[1]));
  };
  switch (op) {
    case BvOp::kAdd:
    case BvOp::kSub:
    case BvOp::kMul:
    case BvOp::kUdiv:
    case BvOp::kUrem:
    case BvOp::kAnd:
    case BvOp::kOr:
    case BvOp::kXor:
    case BvOp::kShl:
    case BvOp::kLshr:
      same_binary();
      return operand_widths[0];
    case BvOp::kEq:
    case BvOp::kUlt:
    case BvOp::kUle:
      same_binary();
      return 1;
    case BvOp::kNot:
      require(operand_widths.size() == 1, "not takes one operand");
      return operand_widths[0];
    case BvOp::kRedAnd:
    case BvOp::kRedOr:
    case BvOp::kRedXor:
      require(operand_widths.size() == 1, "reduction takes one operand");
      return 1;
    case BvOp::kIte:
      require(operand_widths.size() == 3, "ite takes three operands");
      require(operand_widths[0] == 1, "ite condition must have width 1");
      require(operand_widths[1] == operand_widths[2],
              "ite arms must have equal widths");
      return operand_widths[1];
    case BvOp::kExtract:
      require(operand_widths.size() == 1, "extract takes one operand");
      require(lo >= 0 && hi >= lo && hi < operand_widths[0],
              "extract bounds out of range");
      return hi - lo + 1;
    case BvOp::kConcat: {
      require(!operand_widths.empty(), "concat needs operands");
      int sum = 0;
      for (int w : operand_widths) sum += w;
      require(sum <= kMaxWidth, "concatenation exceeds 128 bits");
      return sum;
    }
    case BvOp::kZeroExt:
      require(operand_widths.size() == 1, "zero-extend takes one operand");
      require(zext_width >= operand_widths[0] && zext_width <= kMaxWidth,
              "zero-extend target narrower than operand");
      return zext_width;
  }
  throw Diag(StatusCode::kInternalError, "unhandled operator");
}

BitVal EvalBvOp(BvOp op, int width, int hi, int lo,
                std::span<const BitVal> v, std::span<const int> w) {
  switch (op) {
    case BvOp::kAdd: return bv::Add(v[0], v[1], width);
    case BvOp::kSub: return bv::Sub(v[0], v[1], width);
    case BvOp::kMul: return bv::Mul(v[0], v[1], width);
    case BvOp::kUdiv: return bv::Udiv(v[0], v[1], width);
    case BvOp::kUrem: return bv::Urem(v[0], v[1], width);
    case BvOp::kAnd: return bv::And(v[0], v[1]);
    case BvOp::kOr: return bv::Or(v[0], v[1]);
    case BvOp::kXor: return bv::Xor(v[0], v[1]);
    case BvOp::kNot: return bv::Not(v[0], width);
    case BvOp::kShl: return bv::Shl(v[0], v[1], width);
    case BvOp::kLshr: return bv::Lshr(v[0], v[1], width);
    case BvOp::kEq: return BitVal::FromU64(bv::Eq(v[0], v[1]) ? 1 : 0);
    case BvOp::kUlt: return BitVal::FromU64(bv::Ult(v[0], v[1]) ? 1 : 0);
    case BvOp::kUle: return BitVal::FromU64(bv::Ule(v[0], v[1]) ? 1 : 0);
    case BvOp::kRedAnd:
      return BitVal::FromU64(bv::RedAnd(v[0], w[0]) ? 1 : 0);
    case BvOp::kRedOr: return BitVal::FromU64(bv::RedOr(v[0]) ? 1 : 0);
    case BvOp::kRedXor: return BitVal::FromU64(bv::RedXor(v[0]) ? 1 : 0);
    case BvOp::kIte: return v[0].IsZero() ? v[2] : v[1];
    case BvOp::kExtract: return bv::Extract(v[0], hi, lo);
    case BvOp::kConcat: {
      BitVal acc = v[0];
      int acc_width = w[0];
      for (size_t i = 1; i < v.size(); ++i) {
        acc = bv::Concat(acc, v[i], w[i]);
        acc_width += w[i];
      }
      (void)acc_width;
      return acc;
    }
    case BvOp::kZeroExt: return v[0];
  }
  throw Diag(StatusCode::kInternalError, "unhandled operator");
}

namespace {

uint64_t HashMix(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

uint64_t HashNode(const BvNode& n) {
  uint64_t h = static_cast<uint64_t>(n.kind);
  h = HashMix(h, static_cast<uint64_t>(n.op));
  h = HashMix(h, static_cast<uint64_t>(n.width));
  h = HashMix(h, n.value.lo);
  h = HashMix(h, n.value.hi);
  h = HashMix(h, n.name_id);
  h = HashMix(h, static_cast<uint64_t>(static_cast<int64_t>(n.cycle)));
  h = HashMix(h, static_cast<uint64_t>(n.hi));
  h = HashMix(h, static_cast<uint64_t>(n.lo));
  for (NodeId o : n.operands) h = HashMix(h, o);
  return h;
}

bool SameNode(const BvNode& a, const BvNode& b) {
  return a.kind == b.kind && a.op == b.op && a.width == b.width &&
         a.value == b.value && a.name_id == b.name_id && a.cycle == b.cycle &&
         a.hi == b.hi && a.lo == b.lo && a.operands == b.operands;
}

}  // namespace

NodeTable::NodeTable() = default;

const BvNode& NodeTable::node(NodeId id) const {
  assert(id < published_.load(std::memory_order_acquire));
  return nodes_[id];
}

const std::string& NodeTable::var_name(const BvNode& n) const {
  return names_[n.name_id];
}

NodeId NodeTable::Intern(BvNode n) {
  const uint64_t h = HashNode(n);
  std::lock_guard<std::mutex> lock(mu_);
  auto& bucket = dedup_[h];
  for (NodeId id : bucket) {
    if (SameNode(nodes_[id], n)) return id;
  }
  const NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(std::move(n));
  bucket.push_back(id);
  published_.store(nodes_.size(), std::memory_order_release);
  return id;
}

NodeId NodeTable::Const(int width, BitVal value) {
  if (width < 1 || width > kMaxWidth) {
    throw Diag(StatusCode::kWidthError,
               "width " + std::to_string(width) + " out of range 1..128");
  }
  if (!bv::Fits(value, width)) {
    throw Diag(StatusCode::kWidthError,
               "constant " + bv::ToDec(value) + " does not fit in " +
                   std::to_string(width) + " bits");
  }
  BvNode n;
  n.kind = BvKind::kConst;
  n.width = width;
  n.value = value;
  return Intern(std::move(n));
}

NodeId NodeTable::Var(std::string_view name, int width, int cycle) {
  if (width < 1 || width > kMaxWidth) {
    throw Diag(StatusCode::kWidthError,
               "width " + std::to_string(width) + " out of range 1..128");
  }
  BvNode n;
  n.kind = BvKind::kVar;
  n.width = width;
  n.cycle = cycle;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = name_ids_.find(std::string(name));
    if (it == name_ids_.end()) {
      n.name_id = static_cast<uint32_t>(names_.size());
      names_.emplace_back(name);
      name_ids_.emplace(names_.back(), n.name_id);
    } else {
      n.name_id = it->second;
    }
  }
  return Intern(std::move(n));
}

NodeId NodeTable::Extract(NodeId x, int hi, int lo) {
  const int xw = width(x);
  const int xw_span[] = {xw};
  const int w = ResultWidth(BvOp::kExtract, hi, lo, xw_span, 0);
  if (w == xw) return x;  // full-range extract
  if (IsConst(x)) return Const(w, bv::Extract(node(x).value, hi, lo));
  // Extract of extract composes into a single node.
  if (node(x).kind == BvKind::kOp && node(x).op == BvOp::kExtract) {
    const BvNode& inner = node(x);
    return Extract(inner.operands[0], inner.lo + hi, inner.lo + lo);
  }
  BvNode n;
  n.kind = BvKind::kOp;
  n.op = BvOp::kExtract;
  n.width = w;
  n.hi = hi;
  n.lo = lo;
  n.operands = {x};
  return Intern(std::move(n));
}

NodeId NodeTable::ZeroExt(NodeId x, int new_width) {
  const int xw = width(x);
  const int xw_span[] = {xw};
  const int w = ResultWidth(BvOp::kZeroExt, 0, 0, xw_span, new_width);
  if (w == xw) return x;
  if (IsConst(x)) return Const(w, node(x).value);
  BvNode n;
  n.kind = BvKind::kOp;
  n.op = BvOp::kZeroExt;
  n.width = w;
  n.operands = {x};
  return Intern(std::move(n));
}

NodeId NodeTable::Boolify(NodeId x) {
  if (width(x) == 1) return x;
  return Op(BvOp::kRedOr, {x});
}

NodeId NodeTable::Simplify(BvOp op, const std::vector<NodeId>& ops, int width,
                           int /*hi*/, int /*lo*/, bool* done) {
  *done = true;
  const bool binary = ops.size() == 2;
  const NodeId a = ops.empty() ? kNoNode : ops[0];
  const NodeId b = binary ? ops[1] : kNoNode;
  auto const_is = [&](NodeId id, bool all_ones) {
    if (id == kNoNode || !IsConst(id)) return false;
    const BvNode& n = node(id);
    return all_ones ? n.value == BitVal::Ones(n.width) : n.value.IsZero();
  };

  switch (op) {
    case BvOp::kAnd:
      if (a == b) return a;
      if (const_is(a, false) || const_is(b, false)) return Const(width, BitVal());
      if (const_is(a, true)) return b;
      if (const_is(b, true)) return a;
      break;
    case BvOp::kOr:
      if (a == b) return a;
      if (const_is(a, false)) return b;
      if (const_is(b, false)) return a;
      if (const_is(a, true) || const_is(b, true)) {
        return Const(width, BitVal::Ones(width));
      }
      break;
    case BvOp::kXor:
      if (a == b) return Const(width, BitVal());
      if (const_is(a, false)) return b;
      if (const_is(b, false)) return a;
      break;
    case BvOp::kAdd:
      if (const_is(a, false)) return b;
      if (const_is(b, false)) return a;
      break;
    case BvOp::kSub:
      if (a == b) return Const(width, BitVal());
      if (const_is(b, false)) return a;
      break;
    case BvOp::kShl:
    case BvOp::kLshr:
      if (const_is(b, false)) return a;
      if (IsConst(b) &&
          bv::Ule(BitVal::FromU64(static_cast<uint64_t>(width)),
                  node(b).value)) {
        return Const(width, BitVal());
      }
      break;
    case BvOp::kEq:
      if (a == b) return ConstU64(1, 1);
      break;
    case BvOp::kIte:
      if (IsConst(ops[0])) {
        return node(ops[0]).value.IsZero() ? ops[2] : ops[1];
      }
      break;
    case BvOp::kNot:
      if (node(a).kind == BvKind::kOp && node(a).op == BvOp::kNot) {
        return node(a).operands[0];
      }
      break;
    default:
      break;
  }
  *done = false;
  return kNoNode;
}

NodeId NodeTable::Op(BvOp op, std::vector<NodeId> operands) {
  if (op == BvOp::kExtract || op == BvOp::kZeroExt) {
    throw Diag(StatusCode::kInternalError,
               "use Extract/ZeroExt for parameterized operators");
  }
  std::vector<int> widths;
  widths.reserve(operands.size());
  for (NodeId o : operands) widths.push_back(width(o));
  const int w = ResultWidth(op, 0, 0, widths, 0);

  // Constant folding.
  bool all_const = true;
  for (NodeId o : operands) all_const &= IsConst(o);
  if (all_const) {
    std::vector<BitVal> vals;
    vals.reserve(operands.size());
    for (NodeId o : operands) vals.push_back(node(o).value);
    return Const(w, EvalBvOp(op, w, 0, 0, vals, widths));
  }

  bool done = false;
  const NodeId simplified = Simplify(op, operands, w, 0, 0, &done);
  if (done) return simplified;

  BvNode n;
  n.kind = BvKind::kOp;
  n.op = op;
  n.width = w;
  n.operands = std::move(operands);
  return Intern(std::move(n));
}

BitVal NodeTable::Eval(NodeId root, const Assignment& a) const {
  std::unordered_map<NodeId, BitVal> memo;
  std::vector<std::pair<NodeId, bool>> stack;
  stack.emplace_back(root, false);
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    if (memo.count(id)) continue;
    const BvNode& n = node(id);
    if (n.kind == BvKind::kConst) {
      memo.emplace(id, n.value);
      continue;
    }
    if (n.kind == BvKind::kVar) {
      const BitVal* v = a.Find(var_name(n), n.cycle);
      if (v == nullptr) {
        throw Diag(StatusCode::kMissingVar,
                   "assignment does not cover variable '" + var_name(n) +
                       "' at cycle " + std::to_string(n.cycle));
      }
      memo.emplace(id, *v);
      continue;
    }
    if (!expanded) {
      stack.emplace_back(id, true);
      for (auto it = n.operands.rbegin(); it != n.operands.rend(); ++it) {
        stack.emplace_back(*it, false);
      }
      continue;
    }
    std::vector<BitVal> vals;
    std::vector<int> widths;
    vals.reserve(n.operands.size());
    widths.reserve(n.operands.size());
    for (NodeId o : n.operands) {
      vals.push_back(memo.at(o));
      widths.push_back(node(o).width);
    }
    memo.emplace(id, EvalBvOp(n.op, n.width, n.hi, n.lo, vals, widths));
  }
  return memo.at(root);
}

std::vector<NodeId> NodeTable::CollectVars(std::span<const NodeId> roots) const {
  std::vector<NodeId> vars;
  std::unordered_map<NodeId, bool> seen;
  std::vector<NodeId> stack;
  // Depth-first preorder over each root in turn.
  for (NodeId root : roots) {
    stack.push_back(root);
    while (!stack.empty()) {
      NodeId id = stack.back();
      stack.pop_back();
      if (seen[id]) continue;
      seen[id] = true;
      const BvNode& n = node(id);
      if (n.kind == BvKind::kVar) {
        vars.push_back(id);
        continue;
      }
      for (auto it = n.operands.rbegin(); it != n.operands.rend(); ++it) {
        stack.push_back(*it);
      }
    }
  }
  return vars;
}

}  // namespace rtlsym
