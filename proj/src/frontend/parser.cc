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

#include "frontend/parser.h"

#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <utility>

namespace rtlsym {
namespace {

using ast::Expr;
using ast::Item;
using ast::LValue;
using ast::ModuleAst;
using ast::NetDecl;
using ast::PortDecl;
using ast::PortDir;
using ast::SensItem;
using ast::Stmt;

std::unique_ptr<Expr> MakeExpr(Expr::Kind kind, SourceLoc loc) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->loc = loc;
  return e;
}

std::unique_ptr<Stmt> MakeStmt(Stmt::Kind kind, SourceLoc loc) {
  auto s = std::make_unique<Stmt>();
  s->kind = kind;
  s->loc = loc;
  return s;
}

// A direction declaration from the module body or an ANSI port list entry.
struct DirDecl {
  std::string name;
  PortDir dir = PortDir::kInput;
  bool is_reg = false;
  int width = 1;
  bool has_range = false;
  SourceLoc loc;
};

struct TypeDecl {
  std::string name;
  bool is_reg = false;
  int width = 1;
  bool has_range = false;
  SourceLoc loc;
};

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, const std::string& filename)
      : toks_(tokens), file_(filename) {
    eof_.kind = TokKind::kEof;
    if (!tokens.empty()) eof_.loc = tokens.back().loc;
  }

  ModuleAst Run() {
    ModuleAst m = ParseModuleDecl();
    if (Cur().kind == TokKind::kKwModule) {
      Fail(Cur().loc, "only one module per file is supported");
    }
    Expect(TokKind::kEof);
    return m;
  }

 private:
  const Token& Cur() const {
    return pos_ < toks_.size() ? toks_[pos_] : eof_;
  }
  const Token& Ahead(size_t n) const {
    size_t i = pos_ + n;
    return i < toks_.size() ? toks_[i] : eof_;
  }

  Token Take() {
    if (pos_ >= toks_.size()) return eof_;
    return toks_[pos_++];
  }

  bool Accept(TokKind kind) {
    if (Cur().kind != kind) return false;
    Take();
    return true;
  }

  Token Expect(TokKind kind) {
    if (Cur().kind != kind) {
      Fail(Cur().loc, std::string("expected ") + TokKindName(kind) +
                          ", found " + Describe(Cur()));
    }
    return Take();
  }

  [[noreturn]] void Fail(SourceLoc loc, const std::string& msg) const {
    throw Diag(StatusCode::kParseError, file_, loc, msg);
  }

  static std::string Describe(const Token& t) {
    if (t.kind == TokKind::kIdent) return "identifier '" + t.text + "'";
    if (t.kind == TokKind::kNumber) return "number '" + t.text + "'";
    return TokKindName(t.kind);
  }

  int IntFromNumber(const Token& t, int max) const {
    if (!t.value.FitsU64() || t.value.AsU64() > static_cast<uint64_t>(max)) {
      Fail(t.loc, "number '" + t.text + "' is out of range here");
    }
    return static_cast<int>(t.value.AsU64());
  }

  // range := '[' number ':' number ']', restricted to [N-1:0].
  int ParseRange() {
    SourceLoc loc = Expect(TokKind::kLBracket).loc;
    Token msb = Expect(TokKind::kNumber);
    Expect(TokKind::kColon);
    Token lsb = Expect(TokKind::kNumber);
    Expect(TokKind::kRBracket);
    if (!lsb.value.IsZero()) {
      Fail(loc, "ranges must be of the form [N-1:0]");
    }
    int msb_val = IntFromNumber(msb, kMaxWidth);
    if (msb_val + 1 > kMaxWidth) {
      Fail(loc, "declared width exceeds the 128-bit limit");
    }
    return msb_val + 1;
  }

  // ---------------------------------------------------------------------
  // Module structure

  ModuleAst ParseModuleDecl() {
    ModuleAst m;
    m.source_file = file_;
    m.loc = Expect(TokKind::kKwModule).loc;
    m.name = Expect(TokKind::kIdent).text;
    Expect(TokKind::kLParen);
    ParsePortList();
    Expect(TokKind::kRParen);
    Expect(TokKind::kSemi);

    while (Cur().kind != TokKind::kKwEndmodule) {
      switch (Cur().kind) {
        case TokKind::kKwInput:
        case TokKind::kKwOutput:
          ParseDirDecl();
          break;
        case TokKind::kKwWire:
        case TokKind::kKwReg:
          ParseTypeDecl();
          break;
        case TokKind::kKwAssign:
          m.items.push_back(ParseContinuousAssign());
          break;
        case TokKind::kKwAlways:
          m.items.push_back(ParseAlwaysBlock());
          break;
        case TokKind::kEof:
          Fail(Cur().loc, "expected 'endmodule', found end of file");
        default:
          Fail(Cur().loc,
               "expected a declaration, 'assign', 'always' or 'endmodule', "
               "found " + Describe(Cur()));
      }
    }
    Expect(TokKind::kKwEndmodule);
    ResolveNames(&m);
    return m;
  }

  void ParsePortList() {
    if (Cur().kind == TokKind::kRParen) return;
    bool ansi = Cur().kind == TokKind::kKwInput ||
                Cur().kind == TokKind::kKwOutput;
    for (;;) {
      if (ansi) {
        DirDecl d = ParseAnsiPort();
        ansi_ports_.push_back(d);
      } else {
        Token name = Expect(TokKind::kIdent);
        header_ports_.emplace_back(name.text, name.loc);
      }
      if (!Accept(TokKind::kComma)) break;
      bool next_ansi = Cur().kind == TokKind::kKwInput ||
                       Cur().kind == TokKind::kKwOutput;
      if (next_ansi != ansi) {
        Fail(Cur().loc, "port list mixes named and declared port styles");
      }
    }
  }

  DirDecl ParseAnsiPort() {
    DirDecl d;
    d.loc = Cur().loc;
    d.dir = Take().kind == TokKind::kKwInput ? PortDir::kInput
                                             : PortDir::kOutput;
    if (Accept(TokKind::kKwReg)) {
      if (d.dir == PortDir::kInput) {
        Fail(d.loc, "an input port cannot be declared reg");
      }
      d.is_reg = true;
    } else {
      Accept(TokKind::kKwWire);  // wire is the default
    }
    if (Cur().kind == TokKind::kLBracket) {
      d.width = ParseRange();
      d.has_range = true;
    }
    d.name = Expect(TokKind::kIdent).text;
    return d;
  }

  void ParseDirDecl() {
    SourceLoc loc = Cur().loc;
    PortDir dir = Take().kind == TokKind::kKwInput ? PortDir::kInput
                                                   : PortDir::kOutput;
    bool is_reg = false;
    if (Accept(TokKind::kKwReg)) {
      if (dir == PortDir::kInput) {
        Fail(loc, "an input port cannot be declared reg");
      }
      is_reg = true;
    } else {
      Accept(TokKind::kKwWire);  // wire is the default
    }
    int width = 1;
    bool has_range = false;
    if (Cur().kind == TokKind::kLBracket) {
      width = ParseRange();
      has_range = true;
    }
    for (;;) {
      Token name = Expect(TokKind::kIdent);
      DirDecl d;
      d.name = name.text;
      d.dir = dir;
      d.is_reg = is_reg;
      d.width = width;
      d.has_range = has_range;
      d.loc = name.loc;
      dir_decls_.push_back(d);
      if (!Accept(TokKind::kComma)) break;
    }
    Expect(TokKind::kSemi);
  }

  void ParseTypeDecl() {
    bool is_reg = Take().kind == TokKind::kKwReg;
    int width = 1;
    bool has_range = false;
    if (Cur().kind == TokKind::kLBracket) {
      width = ParseRange();
      has_range = true;
    }
    for (;;) {
      Token name = Expect(TokKind::kIdent);
      TypeDecl d;
      d.name = name.text;
      d.is_reg = is_reg;
      d.width = width;
      d.has_range = has_range;
      d.loc = name.loc;
      type_decls_.push_back(d);
      if (!Accept(TokKind::kComma)) break;
    }
    Expect(TokKind::kSemi);
  }

  // Reconciles the port list, direction declarations and wire/reg
  // declarations into ModuleAst::ports (in port-list order) and
  // ModuleAst::nets.
  void ResolveNames(ModuleAst* m) {
    std::map<std::string, PortDecl*> port_by_name;

    if (!ansi_ports_.empty()) {
      for (const DirDecl& d : ansi_ports_) {
        PortDecl p;
        p.name = d.name;
        p.dir = d.dir;
        p.width = d.width;
        p.is_reg = d.is_reg;
        p.loc = d.loc;
        m->ports.push_back(p);
      }
      if (!dir_decls_.empty()) {
        Fail(dir_decls_.front().loc,
             "port '" + dir_decls_.front().name +
                 "' is already declared in the port list");
      }
    } else {
      for (const auto& [name, loc] : header_ports_) {
        PortDecl p;
        p.name = name;
        p.loc = loc;
        p.width = 0;  // filled in below
        m->ports.push_back(p);
      }
    }
    for (PortDecl& p : m->ports) {
      auto [it, inserted] = port_by_name.emplace(p.name, &p);
      if (!inserted) {
        Fail(p.loc, "duplicate port '" + p.name + "'");
      }
    }

    // Header-style ports get direction and width from body declarations.
    std::map<std::string, const DirDecl*> seen_dir;
    for (const DirDecl& d : dir_decls_) {
      if (!seen_dir.emplace(d.name, &d).second) {
        Fail(d.loc, "duplicate direction declaration for '" + d.name + "'");
      }
      auto it = port_by_name.find(d.name);
      if (it == port_by_name.end()) {
        Fail(d.loc, "'" + d.name +
                        "' is declared " +
                        (d.dir == PortDir::kInput ? "input" : "output") +
                        " but is not in the port list");
      }
      PortDecl* p = it->second;
      p->dir = d.dir;
      p->width = d.width;
      p->is_reg = d.is_reg;
    }
    for (const PortDecl& p : m->ports) {
      if (p.width == 0) {
        Fail(p.loc, "port '" + p.name + "' has no direction declaration");
      }
    }

    // wire/reg declarations either refine a port or introduce a net.
    std::map<std::string, const TypeDecl*> seen_type;
    for (const TypeDecl& d : type_decls_) {
      if (!seen_type.emplace(d.name, &d).second) {
        Fail(d.loc, "duplicate declaration of '" + d.name + "'");
      }
      auto it = port_by_name.find(d.name);
      if (it != port_by_name.end()) {
        PortDecl* p = it->second;
        if (d.width != p->width) {
          Fail(d.loc, "'" + d.name + "' is redeclared with a different width");
        }
        if (d.is_reg) {
          if (p->dir == PortDir::kInput) {
            Fail(d.loc, "an input port cannot be declared reg");
          }
          p->is_reg = true;
        }
        continue;
      }
      NetDecl n;
      n.name = d.name;
      n.is_reg = d.is_reg;
      n.width = d.width;
      n.loc = d.loc;
      m->nets.push_back(n);
    }
  }

  // ---------------------------------------------------------------------
  // Items

  Item ParseContinuousAssign() {
    Item item;
    item.kind = Item::Kind::kContinuousAssign;
    item.loc = Expect(TokKind::kKwAssign).loc;
    item.lhs = ParseLValue();
    Expect(TokKind::kAssign);
    item.rhs = ParseExpr();
    Expect(TokKind::kSemi);
    return item;
  }

  Item ParseAlwaysBlock() {
    Item item;
    item.kind = Item::Kind::kAlwaysBlock;
    item.loc = Expect(TokKind::kKwAlways).loc;
    Expect(TokKind::kAt);
    if (Accept(TokKind::kStar)) {
      item.sensitivity.star = true;
    } else {
      Expect(TokKind::kLParen);
      if (Accept(TokKind::kStar)) {
        item.sensitivity.star = true;
      } else {
        for (;;) {
          SensItem s;
          s.loc = Cur().loc;
          if (Accept(TokKind::kKwPosedge)) {
            s.is_edge = true;
            s.posedge = true;
          } else if (Accept(TokKind::kKwNegedge)) {
            s.is_edge = true;
            s.posedge = false;
          }
          s.signal = Expect(TokKind::kIdent).text;
          item.sensitivity.items.push_back(std::move(s));
          if (Accept(TokKind::kKwOr) || Accept(TokKind::kComma)) continue;
          break;
        }
      }
      Expect(TokKind::kRParen);
    }
    item.body = ParseStmt();
    return item;
  }

  // ---------------------------------------------------------------------
  // Statements

  std::unique_ptr<Stmt> ParseStmt() {
    switch (Cur().kind) {
      case TokKind::kKwBegin: return ParseBlock();
      case TokKind::kKwIf: return ParseIf();
      case TokKind::kKwCase: return ParseCase();
      case TokKind::kIdent: return ParseAssignStmt();
      default:
        Fail(Cur().loc, "expected a statement, found " + Describe(Cur()));
    }
  }

  std::unique_ptr<Stmt> ParseBlock() {
    auto s = MakeStmt(Stmt::Kind::kBlock, Expect(TokKind::kKwBegin).loc);
    while (Cur().kind != TokKind::kKwEnd) {
      if (Cur().kind == TokKind::kEof) {
        Fail(Cur().loc, "expected 'end', found end of file");
      }
      s->stmts.push_back(ParseStmt());
    }
    Expect(TokKind::kKwEnd);
    return s;
  }

  std::unique_ptr<Stmt> ParseIf() {
    auto s = MakeStmt(Stmt::Kind::kIf, Expect(TokKind::kKwIf).loc);
    Expect(TokKind::kLParen);
    s->cond = ParseExpr();
    Expect(TokKind::kRParen);
    s->then_stmt = ParseStmt();
    if (Accept(TokKind::kKwElse)) {
      s->else_stmt = ParseStmt();
    }
    return s;
  }

  std::unique_ptr<Stmt> ParseCase() {
    auto s = MakeStmt(Stmt::Kind::kCase, Expect(TokKind::kKwCase).loc);
    Expect(TokKind::kLParen);
    s->cond = ParseExpr();
    Expect(TokKind::kRParen);
    if (Cur().kind == TokKind::kKwEndcase) {
      Fail(Cur().loc, "case statement has no arms");
    }
    while (Cur().kind != TokKind::kKwEndcase) {
      if (Cur().kind == TokKind::kEof) {
        Fail(Cur().loc, "expected 'endcase', found end of file");
      }
      if (Cur().kind == TokKind::kKwDefault) {
        SourceLoc loc = Take().loc;
        if (s->default_stmt) {
          Fail(loc, "case statement has multiple default arms");
        }
        Accept(TokKind::kColon);
        s->default_stmt = ParseStmt();
        continue;
      }
      Stmt::CaseArm arm;
      arm.labels.push_back(ParseCaseLabel(*s, arm));
      while (Accept(TokKind::kComma)) {
        arm.labels.push_back(ParseCaseLabel(*s, arm));
      }
      Expect(TokKind::kColon);
      arm.body = ParseStmt();
      s->arms.push_back(std::move(arm));
    }
    Expect(TokKind::kKwEndcase);
    return s;
  }

  // Case labels must be constants, pairwise distinct within one case.
  std::unique_ptr<Expr> ParseCaseLabel(const Stmt& case_stmt,
                                       const Stmt::CaseArm& current) {
    auto label = ParseExpr();
    if (label->kind != Expr::Kind::kConst) {
      Fail(label->loc, "case labels must be constant");
    }
    auto clashes = [&label](const std::vector<std::unique_ptr<Expr>>& prev) {
      for (const auto& p : prev) {
        if (p->value.lo == label->value.lo && p->value.hi == label->value.hi) {
          return true;
        }
      }
      return false;
    };
    bool dup = clashes(current.labels);
    for (const auto& arm : case_stmt.arms) {
      dup = dup || clashes(arm.labels);
    }
    if (dup) Fail(label->loc, "duplicate case label");
    return label;
  }

  std::unique_ptr<Stmt> ParseAssignStmt() {
    LValue lhs = ParseLValue();
    Stmt::Kind kind;
    if (Accept(TokKind::kAssign)) {
      kind = Stmt::Kind::kBlockingAssign;
    } else if (Accept(TokKind::kLtEq)) {
      kind = Stmt::Kind::kNonblockingAssign;
    } else {
      Fail(Cur().loc, "expected '=' or '<=', found " + Describe(Cur()));
    }
    auto s = MakeStmt(kind, lhs.loc);
    s->lhs = std::move(lhs);
    s->rhs = ParseExpr();
    Expect(TokKind::kSemi);
    return s;
  }

  LValue ParseLValue() {
    LValue lv;
    Token name = Expect(TokKind::kIdent);
    lv.loc = name.loc;
    lv.name = name.text;
    if (Accept(TokKind::kLBracket)) {
      if (Cur().kind != TokKind::kNumber) {
        Fail(Cur().loc,
             "selects on an assignment target must use constant indices");
      }
      Token first = Take();
      if (Accept(TokKind::kColon)) {
        Token second = Expect(TokKind::kNumber);
        lv.kind = LValue::Kind::kPart;
        lv.hi = IntFromNumber(first, kMaxWidth - 1);
        lv.lo = IntFromNumber(second, kMaxWidth - 1);
        if (lv.hi < lv.lo) {
          Fail(first.loc, "part-select must be [hi:lo] with hi >= lo");
        }
      } else {
        lv.kind = LValue::Kind::kBit;
        lv.index = IntFromNumber(first, kMaxWidth - 1);
      }
      Expect(TokKind::kRBracket);
    }
    return lv;
  }

  // ---------------------------------------------------------------------
  // Expressions (precedence climbing)

  std::unique_ptr<Expr> ParseExpr() { return ParseTernary(); }

  std::unique_ptr<Expr> ParseTernary() {
    auto cond = ParseLogOr();
    if (!Accept(TokKind::kQuestion)) return cond;
    auto e = MakeExpr(Expr::Kind::kTernary, cond->loc);
    e->a = std::move(cond);
    e->b = ParseExpr();
    Expect(TokKind::kColon);
    e->c = ParseExpr();
    return e;
  }

  template <typename Sub, typename Match>
  std::unique_ptr<Expr> ParseLeftAssoc(Sub sub, Match match) {
    auto lhs = sub();
    ast::BinaryOp op;
    while (match(Cur().kind, &op)) {
      SourceLoc loc = Take().loc;
      auto e = MakeExpr(Expr::Kind::kBinary, loc);
      e->bin_op = op;
      e->a = std::move(lhs);
      e->b = sub();
      lhs = std::move(e);
    }
    return lhs;
  }

  std::unique_ptr<Expr> ParseLogOr() {
    return ParseLeftAssoc([this] { return ParseLogAnd(); },
                          [](TokKind k, ast::BinaryOp* op) {
                            if (k != TokKind::kPipePipe) return false;
                            *op = ast::BinaryOp::kLogOr;
                            return true;
                          });
  }

  std::unique_ptr<Expr> ParseLogAnd() {
    return ParseLeftAssoc([this] { return ParseBitOr(); },
                          [](TokKind k, ast::BinaryOp* op) {
                            if (k != TokKind::kAmpAmp) return false;
                            *op = ast::BinaryOp::kLogAnd;
                            return true;
                          });
  }

  std::unique_ptr<Expr> ParseBitOr() {
    return ParseLeftAssoc([this] { return ParseBitXor(); },
                          [](TokKind k, ast::BinaryOp* op) {
                            if (k != TokKind::kPipe) return false;
                            *op = ast::BinaryOp::kBitOr;
                            return true;
                          });
  }

  std::unique_ptr<Expr> ParseBitXor() {
    return ParseLeftAssoc([this] { return ParseBitAnd(); },
                          [](TokKind k, ast::BinaryOp* op) {
                            if (k != TokKind::kCaret) return false;
                            *op = ast::BinaryOp::kBitXor;
                            return true;
                          });
  }

  std::unique_ptr<Expr> ParseBitAnd() {
    return ParseLeftAssoc([this] { return ParseEquality(); },
                          [](TokKind k, ast::BinaryOp* op) {
                            if (k != TokKind::kAmp) return false;
                            *op = ast::BinaryOp::kBitAnd;
                            return true;
                          });
  }

  std::unique_ptr<Expr> ParseEquality() {
    return ParseLeftAssoc([this] { return ParseRelational(); },
                          [](TokKind k, ast::BinaryOp* op) {
                            switch (k) {
                              case TokKind::kEqEq: *op = ast::BinaryOp::kEq; return true;
                              case TokKind::kNotEq: *op = ast::BinaryOp::kNe; return true;
                              default: return false;
                            }
                          });
  }

  std::unique_ptr<Expr> ParseRelational() {
    return ParseLeftAssoc([this] { return ParseShift(); },
                          [](TokKind k, ast::BinaryOp* op) {
                            switch (k) {
                              case TokKind::kLt: *op = ast::BinaryOp::kLt; return true;
                              case TokKind::kLtEq: *op = ast::BinaryOp::kLe; return true;
                              case TokKind::kGt: *op = ast::BinaryOp::kGt; return true;
                              case TokKind::kGtEq: *op = ast::BinaryOp::kGe; return true;
                              default: return false;
                            }
                          });
  }

  std::unique_ptr<Expr> ParseShift() {
    return ParseLeftAssoc([this] { return ParseAdditive(); },
                          [](TokKind k, ast::BinaryOp* op) {
                            switch (k) {
                              case TokKind::kShl: *op = ast::BinaryOp::kShl; return true;
                              case TokKind::kShr: *op = ast::BinaryOp::kShr; return true;
                              default: return false;
                            }
                          });
  }

  std::unique_ptr<Expr> ParseAdditive() {
    return ParseLeftAssoc([this] { return ParseMultiplicative(); },
                          [](TokKind k, ast::BinaryOp* op) {
                            switch (k) {
                              case TokKind::kPlus: *op = ast::BinaryOp::kAdd; return true;
                              case TokKind::kMinus: *op = ast::BinaryOp::kSub; return true;
                              default: return false;
                            }
                          });
  }

  std::unique_ptr<Expr> ParseMultiplicative() {
    return ParseLeftAssoc([this] { return ParseUnary(); },
                          [](TokKind k, ast::BinaryOp* op) {
                            switch (k) {
                              case TokKind::kStar: *op = ast::BinaryOp::kMul; return true;
                              case TokKind::kSlash: *op = ast::BinaryOp::kDiv; return true;
                              case TokKind::kPercent: *op = ast::BinaryOp::kMod; return true;
                              default: return false;
                            }
                          });
  }

  std::unique_ptr<Expr> ParseUnary() {
    ast::UnaryOp op;
    switch (Cur().kind) {
      case TokKind::kTilde: op = ast::UnaryOp::kBitNot; break;
      case TokKind::kBang: op = ast::UnaryOp::kLogNot; break;
      case TokKind::kMinus: op = ast::UnaryOp::kNegate; break;
      case TokKind::kPlus: op = ast::UnaryOp::kPlus; break;
      case TokKind::kAmp: op = ast::UnaryOp::kRedAnd; break;
      case TokKind::kPipe: op = ast::UnaryOp::kRedOr; break;
      case TokKind::kCaret: op = ast::UnaryOp::kRedXor; break;
      default: return ParsePrimary();
    }
    SourceLoc loc = Take().loc;
    auto e = MakeExpr(Expr::Kind::kUnary, loc);
    e->un_op = op;
    e->a = ParseUnary();
    return e;
  }

  std::unique_ptr<Expr> ParsePrimary() {
    const Token& t = Cur();
    switch (t.kind) {
      case TokKind::kNumber: {
        Token num = Take();
        auto e = MakeExpr(Expr::Kind::kConst, num.loc);
        e->value = num.value;
        e->width = num.width;
        e->sized = num.sized;
        return e;
      }
      case TokKind::kIdent:
        return ParseRefOrSelect();
      case TokKind::kLParen: {
        Take();
        auto e = ParseExpr();
        Expect(TokKind::kRParen);
        return e;
      }
      case TokKind::kLBrace:
        return ParseConcat();
      default:
        Fail(t.loc, "expected an expression, found " + Describe(t));
    }
  }

  std::unique_ptr<Expr> ParseRefOrSelect() {
    Token name = Expect(TokKind::kIdent);
    if (!Accept(TokKind::kLBracket)) {
      auto e = MakeExpr(Expr::Kind::kRef, name.loc);
      e->name = name.text;
      return e;
    }
    // Part-selects require constant bounds; [expr] is a bit-select.
    if (Cur().kind == TokKind::kNumber &&
        Ahead(1).kind == TokKind::kColon) {
      Token hi = Take();
      Take();  // colon
      Token lo = Expect(TokKind::kNumber);
      Expect(TokKind::kRBracket);
      auto e = MakeExpr(Expr::Kind::kPartSelect, name.loc);
      e->name = name.text;
      e->hi = IntFromNumber(hi, kMaxWidth - 1);
      e->lo = IntFromNumber(lo, kMaxWidth - 1);
      if (e->hi < e->lo) {
        Fail(hi.loc, "part-select must be [hi:lo] with hi >= lo");
      }
      return e;
    }
    auto e = MakeExpr(Expr::Kind::kBitSelect, name.loc);
    e->name = name.text;
    e->index = ParseExpr();
    Expect(TokKind::kRBracket);
    return e;
  }

  std::unique_ptr<Expr> ParseConcat() {
    SourceLoc loc = Expect(TokKind::kLBrace).loc;
    auto e = MakeExpr(Expr::Kind::kConcat, loc);
    e->elems.push_back(ParseExpr());
    if (Cur().kind == TokKind::kLBrace && e->elems.size() == 1 &&
        e->elems[0]->kind == Expr::Kind::kConst) {
      Fail(Cur().loc, "replication is not supported");
    }
    while (Accept(TokKind::kComma)) {
      e->elems.push_back(ParseExpr());
    }
    Expect(TokKind::kRBrace);
    return e;
  }

  const std::vector<Token>& toks_;
  const std::string& file_;
  size_t pos_ = 0;
  Token eof_;

  std::vector<std::pair<std::string, SourceLoc>> header_ports_;
  std::vector<DirDecl> ansi_ports_;
  std::vector<DirDecl> dir_decls_;
  std::vector<TypeDecl> type_decls_;
};

}  // namespace

ast::ModuleAst ParseModule(const std::vector<Token>& tokens,
                           const std::string& filename) {
  return Parser(tokens, filename).Run();
}

ast::ModuleAst ParseSource(const std::string& source,
                           const std::string& filename) {
  return ParseModule(Tokenize(source, filename), filename);
}

ast::ModuleAst ParseFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Diag(StatusCode::kIoError, "cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseSource(buf.str(), path);
}

}  // namespace rtlsym
