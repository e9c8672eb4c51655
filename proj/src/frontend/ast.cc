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

#include "frontend/ast.h"

#include <sstream>

namespace rtlsym::ast {
namespace {

const char* UnaryOpToken(UnaryOp op) {
  switch (op) {
    case UnaryOp::kBitNot: return "~";
    case UnaryOp::kLogNot: return "!";
    case UnaryOp::kNegate: return "-";
    case UnaryOp::kPlus: return "+";
    case UnaryOp::kRedAnd: return "&";
    case UnaryOp::kRedOr: return "|";
    case UnaryOp::kRedXor: return "^";
  }
  return "?";
}

const char* BinaryOpToken(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kBitAnd: return "&";
    case BinaryOp::kBitOr: return "|";
    case BinaryOp::kBitXor: return "^";
    case BinaryOp::kShl: return "<<";
    case BinaryOp::kShr: return ">>";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kLogAnd: return "&&";
    case BinaryOp::kLogOr: return "||";
  }
  return "?";
}

class Printer {
 public:
  std::string Print(const ModuleAst& m) {
    out_ << "module " << m.name << "(";
    for (size_t i = 0; i < m.ports.size(); ++i) {
      if (i) out_ << ", ";
      const PortDecl& p = m.ports[i];
      out_ << (p.dir == PortDir::kInput ? "input" : "output");
      if (p.is_reg) out_ << " reg";
      if (p.width > 1) out_ << " [" << p.width - 1 << ":0]";
      out_ << " " << p.name;
    }
    out_ << ");\n";
    for (const NetDecl& n : m.nets) {
      out_ << "  " << (n.is_reg ? "reg" : "wire");
      if (n.width > 1) out_ << " [" << n.width - 1 << ":0]";
      out_ << " " << n.name << ";\n";
    }
    for (const Item& item : m.items) {
      PrintItem(item);
    }
    out_ << "endmodule\n";
    return out_.str();
  }

 private:
  void Indent(int depth) {
    for (int i = 0; i < depth; ++i) out_ << "  ";
  }

  void PrintItem(const Item& item) {
    if (item.kind == Item::Kind::kContinuousAssign) {
      out_ << "  assign ";
      PrintLValue(item.lhs);
      out_ << " = ";
      PrintExpr(*item.rhs);
      out_ << ";\n";
      return;
    }
    out_ << "  always @";
    if (item.sensitivity.star) {
      out_ << "(*)";
    } else {
      out_ << "(";
      for (size_t i = 0; i < item.sensitivity.items.size(); ++i) {
        if (i) out_ << " or ";
        const SensItem& s = item.sensitivity.items[i];
        if (s.is_edge) out_ << (s.posedge ? "posedge " : "negedge ");
        out_ << s.signal;
      }
      out_ << ")";
    }
    out_ << "\n";
    PrintStmt(*item.body, 2);
  }

  void PrintStmt(const Stmt& s, int depth) {
    switch (s.kind) {
      case Stmt::Kind::kBlock:
        Indent(depth);
        out_ << "begin\n";
        for (const auto& sub : s.stmts) PrintStmt(*sub, depth + 1);
        Indent(depth);
        out_ << "end\n";
        break;
      case Stmt::Kind::kIf:
        Indent(depth);
        out_ << "if (";
        PrintExpr(*s.cond);
        out_ << ")\n";
        PrintStmt(*s.then_stmt, depth + 1);
        if (s.else_stmt) {
          Indent(depth);
          out_ << "else\n";
          PrintStmt(*s.else_stmt, depth + 1);
        }
        break;
      case Stmt::Kind::kCase:
        Indent(depth);
        out_ << "case (";
        PrintExpr(*s.cond);
        out_ << ")\n";
        for (const auto& arm : s.arms) {
          Indent(depth + 1);
          for (size_t i = 0; i < arm.labels.size(); ++i) {
            if (i) out_ << ", ";
            PrintExpr(*arm.labels[i]);
          }
          out_ << ":\n";
          PrintStmt(*arm.body, depth + 2);
        }
        if (s.default_stmt) {
          Indent(depth + 1);
          out_ << "default:\n";
          PrintStmt(*s.default_stmt, depth + 2);
        }
        Indent(depth);
        out_ << "endcase\n";
        break;
      case Stmt::Kind::kBlockingAssign:
      case Stmt::Kind::kNonblockingAssign:
        Indent(depth);
        PrintLValue(s.lhs);
        out_ << (s.kind == Stmt::Kind::kBlockingAssign ? " = " : " <= ");
        PrintExpr(*s.rhs);
        out_ << ";\n";
        break;
    }
  }

  void PrintLValue(const LValue& lv) {
    out_ << lv.name;
    if (lv.kind == LValue::Kind::kBit) {
      out_ << "[" << lv.index << "]";
    } else if (lv.kind == LValue::Kind::kPart) {
      out_ << "[" << lv.hi << ":" << lv.lo << "]";
    }
  }

  void PrintExpr(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kConst:
        if (e.sized) {
          out_ << e.width << "'h" << bv::ToHex(e.value, e.width);
        } else {
          out_ << bv::ToDec(e.value);
        }
        break;
      case Expr::Kind::kRef:
        out_ << e.name;
        break;
      case Expr::Kind::kBitSelect:
        out_ << e.name << "[";
        PrintExpr(*e.index);
        out_ << "]";
        break;
      case Expr::Kind::kPartSelect:
        out_ << e.name << "[" << e.hi << ":" << e.lo << "]";
        break;
      case Expr::Kind::kUnary:
        out_ << "(" << UnaryOpToken(e.un_op);
        PrintExpr(*e.a);
        out_ << ")";
        break;
      case Expr::Kind::kBinary:
        out_ << "(";
        PrintExpr(*e.a);
        out_ << " " << BinaryOpToken(e.bin_op) << " ";
        PrintExpr(*e.b);
        out_ << ")";
        break;
      case Expr::Kind::kTernary:
        out_ << "(";
        PrintExpr(*e.a);
        out_ << " ? ";
        PrintExpr(*e.b);
        out_ << " : ";
        PrintExpr(*e.c);
        out_ << ")";
        break;
      case Expr::Kind::kConcat:
        out_ << "{";
        for (size_t i = 0; i < e.elems.size(); ++i) {
          if (i) out_ << ", ";
          PrintExpr(*e.elems[i]);
        }
        out_ << "}";
        break;
    }
  }

  std::ostringstream out_;
};

bool EqExpr(const Expr* a, const Expr* b);

bool EqExprVec(const std::vector<std::unique_ptr<Expr>>& a,
               const std::vector<std::unique_ptr<Expr>>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!EqExpr(a[i].get(), b[i].get())) return false;
  }
  return true;
}

bool EqExpr(const Expr* a, const Expr* b) {
  if (a == nullptr || b == nullptr) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Kind::kConst:
      return a->value.lo == b->value.lo && a->value.hi == b->value.hi &&
             a->width == b->width && a->sized == b->sized;
    case Expr::Kind::kRef:
      return a->name == b->name;
    case Expr::Kind::kBitSelect:
      return a->name == b->name && EqExpr(a->index.get(), b->index.get());
    case Expr::Kind::kPartSelect:
      return a->name == b->name && a->hi == b->hi && a->lo == b->lo;
    case Expr::Kind::kUnary:
      return a->un_op == b->un_op && EqExpr(a->a.get(), b->a.get());
    case Expr::Kind::kBinary:
      return a->bin_op == b->bin_op && EqExpr(a->a.get(), b->a.get()) &&
             EqExpr(a->b.get(), b->b.get());
    case Expr::Kind::kTernary:
      return EqExpr(a->a.get(), b->a.get()) && EqExpr(a->b.get(), b->b.get()) &&
             EqExpr(a->c.get(), b->c.get());
    case Expr::Kind::kConcat:
      return EqExprVec(a->elems, b->elems);
  }
  return false;
}

bool EqLValue(const LValue& a, const LValue& b) {
  if (a.kind != b.kind || a.name != b.name) return false;
  switch (a.kind) {
    case LValue::Kind::kWhole: return true;
    case LValue::Kind::kBit: return a.index == b.index;
    case LValue::Kind::kPart: return a.hi == b.hi && a.lo == b.lo;
  }
  return false;
}

bool EqStmt(const Stmt* a, const Stmt* b) {
  if (a == nullptr || b == nullptr) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Stmt::Kind::kBlock: {
      if (a->stmts.size() != b->stmts.size()) return false;
      for (size_t i = 0; i < a->stmts.size(); ++i) {
        if (!EqStmt(a->stmts[i].get(), b->stmts[i].get())) return false;
      }
      return true;
    }
    case Stmt::Kind::kIf:
      return EqExpr(a->cond.get(), b->cond.get()) &&
             EqStmt(a->then_stmt.get(), b->then_stmt.get()) &&
             EqStmt(a->else_stmt.get(), b->else_stmt.get());
    case Stmt::Kind::kCase: {
      if (!EqExpr(a->cond.get(), b->cond.get())) return false;
      if (a->arms.size() != b->arms.size()) return false;
      for (size_t i = 0; i < a->arms.size(); ++i) {
        if (!EqExprVec(a->arms[i].labels, b->arms[i].labels)) return false;
        if (!EqStmt(a->arms[i].body.get(), b->arms[i].body.get())) {
          return false;
        }
      }
      return EqStmt(a->default_stmt.get(), b->default_stmt.get());
    }
    case Stmt::Kind::kBlockingAssign:
    case Stmt::Kind::kNonblockingAssign:
      return EqLValue(a->lhs, b->lhs) && EqExpr(a->rhs.get(), b->rhs.get());
  }
  return false;
}

bool EqItem(const Item& a, const Item& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Item::Kind::kContinuousAssign) {
    return EqLValue(a.lhs, b.lhs) && EqExpr(a.rhs.get(), b.rhs.get());
  }
  if (a.sensitivity.star != b.sensitivity.star) return false;
  if (a.sensitivity.items.size() != b.sensitivity.items.size()) return false;
  for (size_t i = 0; i < a.sensitivity.items.size(); ++i) {
    const SensItem& x = a.sensitivity.items[i];
    const SensItem& y = b.sensitivity.items[i];
    if (x.is_edge != y.is_edge || x.signal != y.signal) return false;
    if (x.is_edge && x.posedge != y.posedge) return false;
  }
  return EqStmt(a.body.get(), b.body.get());
}

}  // namespace

std::string PrintModule(const ModuleAst& m) { return Printer().Print(m); }

bool StructurallyEqual(const ModuleAst& a, const ModuleAst& b) {
  if (a.name != b.name) return false;
  if (a.ports.size() != b.ports.size() || a.nets.size() != b.nets.size() ||
      a.items.size() != b.items.size()) {
    return false;
  }
  for (size_t i = 0; i < a.ports.size(); ++i) {
    const PortDecl& x = a.ports[i];
    const PortDecl& y = b.ports[i];
    if (x.name != y.name || x.dir != y.dir || x.width != y.width ||
        x.is_reg != y.is_reg) {
      return false;
    }
  }
  for (size_t i = 0; i < a.nets.size(); ++i) {
    const NetDecl& x = a.nets[i];
    const NetDecl& y = b.nets[i];
    if (x.name != y.name || x.is_reg != y.is_reg || x.width != y.width) {
      return false;
    }
  }
  for (size_t i = 0; i < a.items.size(); ++i) {
    if (!EqItem(a.items[i], b.items[i])) return false;
  }
  return true;
}

}  // namespace rtlsym::ast
