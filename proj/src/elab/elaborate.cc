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

#include "elab/elaborate.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace rtlsym {
namespace {

using ir::IrExpr;
using ir::IrProcess;
using ir::IrStmt;
using ir::LhsRef;
using ir::RtlDesign;
using ir::Signal;

std::unique_ptr<IrExpr> MakeConst(int width, BitVal value, SourceLoc loc) {
  auto e = std::make_unique<IrExpr>();
  e->kind = IrExpr::Kind::kConst;
  e->width = width;
  e->value = value;
  e->loc = loc;
  return e;
}

std::unique_ptr<IrExpr> MakeSignal(int index, int width, SourceLoc loc) {
  auto e = std::make_unique<IrExpr>();
  e->kind = IrExpr::Kind::kSignal;
  e->width = width;
  e->signal = index;
  e->loc = loc;
  return e;
}

std::unique_ptr<IrExpr> MakeOp(BvOp op, int width, SourceLoc loc,
                               std::vector<std::unique_ptr<IrExpr>> operands) {
  auto e = std::make_unique<IrExpr>();
  e->kind = IrExpr::Kind::kOp;
  e->op = op;
  e->width = width;
  e->loc = loc;
  e->operands = std::move(operands);
  return e;
}

std::unique_ptr<IrExpr> MakeOp2(BvOp op, int width, SourceLoc loc,
                                std::unique_ptr<IrExpr> a,
                                std::unique_ptr<IrExpr> b) {
  std::vector<std::unique_ptr<IrExpr>> v;
  v.push_back(std::move(a));
  v.push_back(std::move(b));
  return MakeOp(op, width, loc, std::move(v));
}

std::unique_ptr<IrExpr> MakeOp1(BvOp op, int width, SourceLoc loc,
                                std::unique_ptr<IrExpr> a) {
  std::vector<std::unique_ptr<IrExpr>> v;
  v.push_back(std::move(a));
  return MakeOp(op, width, loc, std::move(v));
}

// Widens with zeros or takes the low bits to reach `width`.
std::unique_ptr<IrExpr> Fit(std::unique_ptr<IrExpr> e, int width) {
  if (e->width == width) return e;
  SourceLoc loc = e->loc;
  if (e->width < width) {
    auto out = MakeOp1(BvOp::kZeroExt, width, loc, std::move(e));
    return out;
  }
  auto out = MakeOp1(BvOp::kExtract, width, loc, std::move(e));
  out->hi = width - 1;
  out->lo = 0;
  return out;
}

// Collapses a value to one bit: nonzero -> 1.
std::unique_ptr<IrExpr> Boolify(std::unique_ptr<IrExpr> e) {
  if (e->width == 1) return e;
  SourceLoc loc = e->loc;
  return MakeOp1(BvOp::kRedOr, 1, loc, std::move(e));
}

struct LowerCtx {
  bool procedural = false;  // inside an always block (vs continuous assign)
  bool clocked = false;
};

class Elaborator {
 public:
  explicit Elaborator(const ast::ModuleAst& m) : m_(m) {}

  RtlDesign Run() {
    BuildSignals();
    for (const ast::Item& item : m_.items) {
      BuildProcess(item);
    }
    for (IrProcess& p : procs_) {
      ComputeReadsWrites(&p);
    }
    EmitSensitivityWarnings();
    CheckDrivers();
    OrderProcesses();
    d_.name = m_.name;
    d_.source_file = m_.source_file;
    return std::move(d_);
  }

  // Exposed for width queries against a module context (tests, tools).
  int LoweredWidth(const ast::Expr& e) {
    BuildSignals();
    return Lower(e)->width;
  }

 private:
  [[noreturn]] void Fail(SourceLoc loc, const std::string& msg) const {
    throw Diag(StatusCode::kElabError, m_.source_file, loc, msg);
  }

  void BuildSignals() {
    if (!d_.signals.empty()) return;
    auto add = [this](const std::string& name, int width, Signal::Kind kind,
                      bool is_reg, SourceLoc loc) {
      if (width < 1 || width > kMaxWidth) {
        Fail(loc, "signal '" + name + "' has illegal width " +
                      std::to_string(width));
      }
      if (!signal_index_.emplace(name, d_.signals.size()).second) {
        Fail(loc, "duplicate signal '" + name + "'");
      }
      Signal s;
      s.name = name;
      s.width = width;
      s.kind = kind;
      s.is_reg = is_reg;
      s.loc = loc;
      d_.signals.push_back(std::move(s));
    };
    for (const ast::PortDecl& p : m_.ports) {
      add(p.name, p.width,
          p.dir == ast::PortDir::kInput ? Signal::Kind::kInput
                                        : Signal::Kind::kOutput,
          p.is_reg, p.loc);
    }
    for (const ast::NetDecl& n : m_.nets) {
      add(n.name, n.width, Signal::Kind::kInternal, n.is_reg, n.loc);
    }
  }

  int ResolveSignal(const std::string& name, SourceLoc loc) const {
    auto it = signal_index_.find(name);
    if (it == signal_index_.end()) {
      Fail(loc, "undeclared name '" + name + "'");
    }
    return it->second;
  }

  // -------------------------------------------------------------------
  // Expression lowering

  std::unique_ptr<IrExpr> LowerConst(const ast::Expr& e) const {
    if (!bv::Fits(e.value, e.width)) {
      Fail(e.loc, "literal value " + bv::ToDec(e.value) +
                      " does not fit in " + std::to_string(e.width) +
                      " bits");
    }
    return MakeConst(e.width, e.value, e.loc);
  }

  std::unique_ptr<IrExpr> Lower(const ast::Expr& e) {
    switch (e.kind) {
      case ast::Expr::Kind::kConst:
        return LowerConst(e);
      case ast::Expr::Kind::kRef: {
        int s = ResolveSignal(e.name, e.loc);
        return MakeSignal(s, d_.signals[s].width, e.loc);
      }
      case ast::Expr::Kind::kBitSelect:
        return LowerBitSelect(e);
      case ast::Expr::Kind::kPartSelect: {
        int s = ResolveSignal(e.name, e.loc);
        int w = d_.signals[s].width;
        if (e.hi >= w) {
          Fail(e.loc, "part-select [" + std::to_string(e.hi) + ":" +
                          std::to_string(e.lo) + "] is out of range for '" +
                          e.name + "' (" + std::to_string(w) + " bits)");
        }
        auto out = MakeOp1(BvOp::kExtract, e.hi - e.lo + 1, e.loc,
                           MakeSignal(s, w, e.loc));
        out->hi = e.hi;
        out->lo = e.lo;
        return out;
      }
      case ast::Expr::Kind::kUnary:
        return LowerUnary(e);
      case ast::Expr::Kind::kBinary:
        return LowerBinary(e);
      case ast::Expr::Kind::kTernary: {
        auto cond = Boolify(Lower(*e.a));
        auto t = Lower(*e.b);
        auto f = Lower(*e.c);
        int w = std::max(t->width, f->width);
        std::vector<std::unique_ptr<IrExpr>> v;
        v.push_back(std::move(cond));
        v.push_back(Fit(std::move(t), w));
        v.push_back(Fit(std::move(f), w));
        return MakeOp(BvOp::kIte, w, e.loc, std::move(v));
      }
      case ast::Expr::Kind::kConcat: {
        std::vector<std::unique_ptr<IrExpr>> parts;
        int total = 0;
        for (const auto& sub : e.elems) {
          parts.push_back(Lower(*sub));
          total += parts.back()->width;
        }
        if (total > kMaxWidth) {
          Fail(e.loc, "concatenation is " + std::to_string(total) +
                          " bits wide; the limit is " +
                          std::to_string(kMaxWidth));
        }
        return MakeOp(BvOp::kConcat, total, e.loc, std::move(parts));
      }
    }
    Fail(e.loc, "unsupported expression");
  }

  std::unique_ptr<IrExpr> LowerBitSelect(const ast::Expr& e) {
    int s = ResolveSignal(e.name, e.loc);
    int w = d_.signals[s].width;
    auto idx = Lower(*e.index);
    if (idx->kind == IrExpr::Kind::kConst) {
      if (!idx->value.FitsU64() ||
          idx->value.AsU64() >= static_cast<uint64_t>(w)) {
        Fail(e.loc, "bit-select index " + bv::ToDec(idx->value) +
                        " is out of range for '" + e.name + "' (" +
                        std::to_string(w) + " bits)");
      }
      int i = static_cast<int>(idx->value.AsU64());
      auto out = MakeOp1(BvOp::kExtract, 1, e.loc, MakeSignal(s, w, e.loc));
      out->hi = i;
      out->lo = i;
      return out;
    }
    // Dynamic index: (x >> idx)[0]; an out-of-range index reads 0.
    int m = std::max(w, idx->width);
    auto shifted =
        MakeOp2(BvOp::kLshr, m, e.loc,
                Fit(MakeSignal(s, w, e.loc), m), Fit(std::move(idx), m));
    auto out = MakeOp1(BvOp::kExtract, 1, e.loc, std::move(shifted));
    out->hi = 0;
    out->lo = 0;
    return out;
  }

  std::unique_ptr<IrExpr> LowerUnary(const ast::Expr& e) {
    auto a = Lower(*e.a);
    int w = a->width;
    switch (e.un_op) {
      case ast::UnaryOp::kBitNot:
        return MakeOp1(BvOp::kNot, w, e.loc, std::move(a));
      case ast::UnaryOp::kLogNot:
        return MakeOp1(BvOp::kNot, 1, e.loc, Boolify(std::move(a)));
      case ast::UnaryOp::kNegate:
        return MakeOp2(BvOp::kSub, w, e.loc, MakeConst(w, BitVal{}, e.loc),
                       std::move(a));
      case ast::UnaryOp::kPlus:
        return a;
      case ast::UnaryOp::kRedAnd:
        return MakeOp1(BvOp::kRedAnd, 1, e.loc, std::move(a));
      case ast::UnaryOp::kRedOr:
        return MakeOp1(BvOp::kRedOr, 1, e.loc, std::move(a));
      case ast::UnaryOp::kRedXor:
        return MakeOp1(BvOp::kRedXor, 1, e.loc, std::move(a));
    }
    Fail(e.loc, "unsupported unary operator");
  }

  std::unique_ptr<IrExpr> LowerBinary(const ast::Expr& e) {
    auto a = Lower(*e.a);
    auto b = Lower(*e.b);
    int wa = a->width;
    int m = std::max(a->width, b->width);
    auto ext = [&](std::unique_ptr<IrExpr> x) { return Fit(std::move(x), m); };

    switch (e.bin_op) {
      case ast::BinaryOp::kAdd:
        return MakeOp2(BvOp::kAdd, m, e.loc, ext(std::move(a)),
                       ext(std::move(b)));
      case ast::BinaryOp::kSub:
        return MakeOp2(BvOp::kSub, m, e.loc, ext(std::move(a)),
                       ext(std::move(b)));
      case ast::BinaryOp::kMul:
        return MakeOp2(BvOp::kMul, m, e.loc, ext(std::move(a)),
                       ext(std::move(b)));
      case ast::BinaryOp::kBitAnd:
        return MakeOp2(BvOp::kAnd, m, e.loc, ext(std::move(a)),
                       ext(std::move(b)));
      case ast::BinaryOp::kBitOr:
        return MakeOp2(BvOp::kOr, m, e.loc, ext(std::move(a)),
                       ext(std::move(b)));
      case ast::BinaryOp::kBitXor:
        return MakeOp2(BvOp::kXor, m, e.loc, ext(std::move(a)),
                       ext(std::move(b)));
      case ast::BinaryOp::kDiv:
        // Result takes the dividend's width; quotient and remainder never
        // exceed the dividend, so the narrowing extract is lossless.
        return Fit(MakeOp2(BvOp::kUdiv, m, e.loc, ext(std::move(a)),
                           ext(std::move(b))),
                   wa);
      case ast::BinaryOp::kMod:
        return Fit(MakeOp2(BvOp::kUrem, m, e.loc, ext(std::move(a)),
                           ext(std::move(b))),
                   wa);
      case ast::BinaryOp::kShl:
        return Fit(MakeOp2(BvOp::kShl, m, e.loc, ext(std::move(a)),
                           ext(std::move(b))),
                   wa);
      case ast::BinaryOp::kShr:
        return Fit(MakeOp2(BvOp::kLshr, m, e.loc, ext(std::move(a)),
                           ext(std::move(b))),
                   wa);
      case ast::BinaryOp::kEq:
        return MakeOp2(BvOp::kEq, 1, e.loc, ext(std::move(a)),
                       ext(std::move(b)));
      case ast::BinaryOp::kNe:
        return MakeOp1(BvOp::kNot, 1, e.loc,
                       MakeOp2(BvOp::kEq, 1, e.loc, ext(std::move(a)),
                               ext(std::move(b))));
      case ast::BinaryOp::kLt:
        return MakeOp2(BvOp::kUlt, 1, e.loc, ext(std::move(a)),
                       ext(std::move(b)));
      case ast::BinaryOp::kLe:
        return MakeOp2(BvOp::kUle, 1, e.loc, ext(std::move(a)),
                       ext(std::move(b)));
      case ast::BinaryOp::kGt:
        return MakeOp2(BvOp::kUlt, 1, e.loc, ext(std::move(b)),
                       ext(std::move(a)));
      case ast::BinaryOp::kGe:
        return MakeOp2(BvOp::kUle, 1, e.loc, ext(std::move(b)),
                       ext(std::move(a)));
      case ast::BinaryOp::kLogAnd:
        return MakeOp2(BvOp::kAnd, 1, e.loc, Boolify(std::move(a)),
                       Boolify(std::move(b)));
      case ast::BinaryOp::kLogOr:
        return MakeOp2(BvOp::kOr, 1, e.loc, Boolify(std::move(a)),
                       Boolify(std::move(b)));
    }
    Fail(e.loc, "unsupported binary operator");
  }

  // -------------------------------------------------------------------
  // Statement lowering

  LhsRef LowerLhs(const ast::LValue& lv, const LowerCtx& ctx, int proc_index) {
    int s = ResolveSignal(lv.name, lv.loc);
    const Signal& sig = d_.signals[s];
    if (sig.kind == Signal::Kind::kInput) {
      Fail(lv.loc, "assignment to input '" + lv.name + "'");
    }
    if (ctx.procedural && !sig.is_reg) {
      Fail(lv.loc, "assignment target '" + lv.name +
                       "' must be declared reg inside an always block");
    }
    if (!ctx.procedural && sig.is_reg) {
      Fail(lv.loc, "continuous assignment to reg '" + lv.name + "'");
    }
    LhsRef ref;
    ref.signal = s;
    ref.loc = lv.loc;
    switch (lv.kind) {
      case ast::LValue::Kind::kWhole:
        ref.hi = sig.width - 1;
        ref.lo = 0;
        break;
      case ast::LValue::Kind::kBit:
        if (lv.index >= sig.width) {
          Fail(lv.loc, "bit-select index " + std::to_string(lv.index) +
                           " is out of range for '" + lv.name + "' (" +
                           std::to_string(sig.width) + " bits)");
        }
        ref.hi = ref.lo = lv.index;
        break;
      case ast::LValue::Kind::kPart:
        if (lv.hi >= sig.width) {
          Fail(lv.loc, "part-select [" + std::to_string(lv.hi) + ":" +
                           std::to_string(lv.lo) + "] is out of range for '" +
                           lv.name + "' (" + std::to_string(sig.width) +
                           " bits)");
        }
        ref.hi = lv.hi;
        ref.lo = lv.lo;
        break;
    }
    write_sites_[s].emplace_back(proc_index, lv.loc);
    return ref;
  }

  IrStmt LowerAssign(const ast::LValue& lhs, const ast::Expr& rhs,
                     bool nonblocking, SourceLoc loc, const LowerCtx& ctx,
                     int proc_index) {
    IrStmt out;
    out.kind = IrStmt::Kind::kAssign;
    out.loc = loc;
    out.stmt_id = static_cast<int>(d_.stmt_table.size());
    d_.stmt_table.push_back({loc});
    out.lhs = LowerLhs(lhs, ctx, proc_index);
    out.rhs = Fit(Lower(rhs), out.lhs.width());
    out.nonblocking = nonblocking;
    return out;
  }

  void LowerStmtInto(const ast::Stmt& s, const LowerCtx& ctx, int proc_index,
                     std::vector<IrStmt>* out) {
    switch (s.kind) {
      case ast::Stmt::Kind::kBlock:
        for (const auto& sub : s.stmts) {
          LowerStmtInto(*sub, ctx, proc_index, out);
        }
        return;
      case ast::Stmt::Kind::kBlockingAssign:
        if (ctx.clocked) {
          Fail(s.loc,
               "blocking assignment in a clocked process (use '<=')");
        }
        out->push_back(
            LowerAssign(s.lhs, *s.rhs, false, s.loc, ctx, proc_index));
        return;
      case ast::Stmt::Kind::kNonblockingAssign:
        if (!ctx.clocked) {
          Fail(s.loc,
               "nonblocking assignment in a combinational process (use '=')");
        }
        out->push_back(
            LowerAssign(s.lhs, *s.rhs, true, s.loc, ctx, proc_index));
        return;
      case ast::Stmt::Kind::kIf: {
        IrStmt br;
        br.kind = IrStmt::Kind::kBranch;
        br.loc = s.loc;
        br.branch_id = static_cast<int>(d_.branch_table.size());
        d_.branch_table.push_back({s.loc, 2});
        br.guards.push_back(Boolify(Lower(*s.cond)));
        br.arms.emplace_back();
        LowerStmtInto(*s.then_stmt, ctx, proc_index, &br.arms.back());
        br.arms.emplace_back();
        if (s.else_stmt) {
          LowerStmtInto(*s.else_stmt, ctx, proc_index, &br.arms.back());
        }
        out->push_back(std::move(br));
        return;
      }
      case ast::Stmt::Kind::kCase: {
        IrStmt br;
        br.kind = IrStmt::Kind::kBranch;
        br.loc = s.loc;
        br.branch_id = static_cast<int>(d_.branch_table.size());
        d_.branch_table.push_back(
            {s.loc, static_cast<int>(s.arms.size()) + 1});
        for (const auto& arm : s.arms) {
          // A multi-label arm matches if the subject equals any label.
          std::unique_ptr<IrExpr> guard;
          for (const auto& label : arm.labels) {
            auto subj = Lower(*s.cond);
            auto lab = Lower(*label);
            int m = std::max(subj->width, lab->width);
            auto eq = MakeOp2(BvOp::kEq, 1, label->loc,
                              Fit(std::move(subj), m), Fit(std::move(lab), m));
            guard = guard ? MakeOp2(BvOp::kOr, 1, label->loc,
                                    std::move(guard), std::move(eq))
                          : std::move(eq);
          }
          br.guards.push_back(std::move(guard));
        }
        for (const auto& arm : s.arms) {
          br.arms.emplace_back();
          LowerStmtInto(*arm.body, ctx, proc_index, &br.arms.back());
        }
        br.arms.emplace_back();
        if (s.default_stmt) {
          LowerStmtInto(*s.default_stmt, ctx, proc_index, &br.arms.back());
        }
        out->push_back(std::move(br));
        return;
      }
    }
  }

  // -------------------------------------------------------------------
  // Processes

  void BuildProcess(const ast::Item& item) {
    IrProcess p;
    p.id = static_cast<int>(procs_.size());
    p.loc = item.loc;
    LowerCtx ctx;

    if (item.kind == ast::Item::Kind::kContinuousAssign) {
      p.kind = IrProcess::Kind::kComb;
      ctx.procedural = false;
      ctx.clocked = false;
      p.body.push_back(
          LowerAssign(item.lhs, *item.rhs, false, item.loc, ctx, p.id));
      procs_.push_back(std::move(p));
      return;
    }

    const ast::SensitivityList& sens = item.sensitivity;
    bool has_edge = false;
    bool has_level = false;
    for (const ast::SensItem& s : sens.items) {
      (s.is_edge ? has_edge : has_level) = true;
    }
    if (has_edge && has_level) {
      Fail(item.loc, "sensitivity list mixes edge and level items");
    }

    ctx.procedural = true;
    if (has_edge) {
      if (sens.items.size() != 1) {
        Fail(item.loc,
             "multiple edges in one sensitivity list are not supported");
      }
      p.kind = IrProcess::Kind::kClocked;
      p.posedge = sens.items[0].posedge;
      p.clock_signal = ResolveSignal(sens.items[0].signal, sens.items[0].loc);
      ctx.clocked = true;
    } else {
      // @(*) and level-sensitive lists are both treated as combinational.
      p.kind = IrProcess::Kind::kComb;
      ctx.clocked = false;
    }
    LowerStmtInto(*item.body, ctx, p.id, &p.body);
    procs_.push_back(std::move(p));
  }

  // -------------------------------------------------------------------
  // Dataflow analysis

  void ReadsOfExpr(const IrExpr& e, const std::set<int>& defined,
                   std::set<int>* uer) const {
    if (e.kind == IrExpr::Kind::kSignal) {
      if (!defined.count(e.signal)) uer->insert(e.signal);
      return;
    }
    for (const auto& op : e.operands) {
      ReadsOfExpr(*op, defined, uer);
    }
  }

  void WalkStmts(const std::vector<IrStmt>& body, std::set<int>* defined,
                 std::set<int>* uer, std::set<int>* writes) const {
    for (const IrStmt& s : body) {
      if (s.kind == IrStmt::Kind::kAssign) {
        ReadsOfExpr(*s.rhs, *defined, uer);
        const Signal& sig = d_.signals[s.lhs.signal];
        bool whole = s.lhs.lo == 0 && s.lhs.hi == sig.width - 1;
        if (!whole && !defined->count(s.lhs.signal)) {
          // A partial write reads the unwritten bits of the old value.
          uer->insert(s.lhs.signal);
        }
        writes->insert(s.lhs.signal);
        // Nonblocking writes land after the process finishes, so they
        // never define a signal for later reads within the body.
        if (whole && !s.nonblocking) defined->insert(s.lhs.signal);
        continue;
      }
      for (const auto& g : s.guards) {
        ReadsOfExpr(*g, *defined, uer);
      }
      std::vector<std::set<int>> arm_defined;
      for (const auto& arm : s.arms) {
        std::set<int> local = *defined;
        WalkStmts(arm, &local, uer, writes);
        arm_defined.push_back(std::move(local));
      }
      // Only signals defined on every arm are defined afterwards.
      std::set<int> common = arm_defined.front();
      for (size_t i = 1; i < arm_defined.size(); ++i) {
        std::set<int> next;
        std::set_intersection(common.begin(), common.end(),
                              arm_defined[i].begin(), arm_defined[i].end(),
                              std::inserter(next, next.begin()));
        common = std::move(next);
      }
      defined->insert(common.begin(), common.end());
    }
  }

  void ComputeReadsWrites(IrProcess* p) const {
    std::set<int> defined, uer, writes;
    WalkStmts(p->body, &defined, &uer, &writes);
    p->read_signals.assign(uer.begin(), uer.end());
    p->write_signals.assign(writes.begin(), writes.end());
  }

  void EmitSensitivityWarnings() {
    for (size_t i = 0; i < procs_.size(); ++i) {
      const ast::Item& item = m_.items[i];
      if (item.kind != ast::Item::Kind::kAlwaysBlock) continue;
      if (item.sensitivity.star || item.sensitivity.items.empty()) continue;
      if (procs_[i].kind != IrProcess::Kind::kComb) continue;
      std::set<std::string> listed;
      for (const ast::SensItem& s : item.sensitivity.items) {
        listed.insert(s.signal);
      }
      for (int sig : procs_[i].read_signals) {
        if (!listed.count(d_.signals[sig].name)) {
          std::ostringstream msg;
          msg << m_.source_file << ":" << item.loc.line << ":" << item.loc.col
              << ": warning: sensitivity list omits '"
              << d_.signals[sig].name
              << "'; the block is treated as combinational";
          d_.warnings.push_back(msg.str());
        }
      }
    }
  }

  void CheckDrivers() {
    for (const auto& [sig, sites] : write_sites_) {
      int first_proc = sites.front().first;
      for (const auto& [proc, loc] : sites) {
        if (proc != first_proc) {
          Fail(loc, "signal '" + d_.signals[sig].name +
                        "' has multiple drivers");
        }
      }
    }
  }

  // Places combinational processes in dependency order (producers before
  // consumers), then clocked processes in source order.
  void OrderProcesses() {
    std::vector<int> comb, clocked;
    for (size_t i = 0; i < procs_.size(); ++i) {
      (procs_[i].kind == IrProcess::Kind::kComb ? comb : clocked)
          .push_back(static_cast<int>(i));
    }

    // driver[s] = comb process (original index) writing signal s, if any.
    std::map<int, int> driver;
    for (int pi : comb) {
      for (int s : procs_[pi].write_signals) driver[s] = pi;
    }

    // edges[p] = comb processes that must run after p.
    std::map<int, std::vector<int>> succs;
    std::map<int, int> indegree;
    for (int pi : comb) indegree[pi] = 0;
    for (int pi : comb) {
      for (int s : procs_[pi].read_signals) {
        auto it = driver.find(s);
        if (it == driver.end()) continue;
        int producer = it->second;
        if (producer == pi) {
          Fail(procs_[pi].loc,
               "combinational cycle: process both reads and writes '" +
                   d_.signals[s].name + "'");
        }
        succs[producer].push_back(pi);
        ++indegree[pi];
      }
    }

    std::vector<int> order;
    std::set<int> ready;
    for (int pi : comb) {
      if (indegree[pi] == 0) ready.insert(pi);
    }
    while (!ready.empty()) {
      int pi = *ready.begin();
      ready.erase(ready.begin());
      order.push_back(pi);
      for (int succ : succs[pi]) {
        if (--indegree[succ] == 0) ready.insert(succ);
      }
    }
    if (order.size() != comb.size()) {
      // Some processes remain on a cycle; name a signal involved.
      std::set<int> remaining(comb.begin(), comb.end());
      for (int pi : order) remaining.erase(pi);
      int witness = *remaining.begin();
      std::string sig_name = "?";
      for (int s : procs_[witness].read_signals) {
        auto it = driver.find(s);
        if (it != driver.end() && remaining.count(it->second)) {
          sig_name = d_.signals[s].name;
          break;
        }
      }
      Fail(procs_[witness].loc,
           "combinational cycle detected involving signal '" + sig_name +
               "'");
    }

    // Clocked processes must agree on one clock and edge; multi-clock
    // designs are out of scope.
    for (size_t i = 1; i < clocked.size(); ++i) {
      const IrProcess& a = procs_[clocked[0]];
      const IrProcess& b = procs_[clocked[i]];
      if (a.clock_signal != b.clock_signal || a.posedge != b.posedge) {
        Fail(b.loc,
             "clocked processes must share a single clock signal and edge");
      }
    }

    for (int pi : order) d_.processes.push_back(std::move(procs_[pi]));
    d_.num_comb = static_cast<int>(order.size());
    for (int pi : clocked) d_.processes.push_back(std::move(procs_[pi]));
    for (size_t i = 0; i < d_.processes.size(); ++i) {
      d_.processes[i].id = static_cast<int>(i);
    }
  }

  const ast::ModuleAst& m_;
  RtlDesign d_;
  std::map<std::string, int> signal_index_;
  std::vector<IrProcess> procs_;
  // signal -> (process original index, write location), in lowering order.
  std::map<int, std::vector<std::pair<int, SourceLoc>>> write_sites_;
};

}  // namespace

ir::RtlDesign Elaborate(const ast::ModuleAst& m) {
  return Elaborator(m).Run();
}

int WidthOf(const ast::Expr& e, const ast::ModuleAst& m) {
  return Elaborator(m).LoweredWidth(e);
}

}  // namespace rtlsym
