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

#ifndef RTLSYM_FRONTEND_AST_H_
#define RTLSYM_FRONTEND_AST_H_

#include <memory>
#include <string>
#include <vector>

#include "support/bitval.h"
#include "support/diag.h"

namespace rtlsym::ast {

enum class UnaryOp {
  kBitNot,   // ~
  kLogNot,   // !
  kNegate,   // -
  kPlus,     // +
  kRedAnd,   // &
  kRedOr,    // |
  kRedXor,   // ^
};

enum class BinaryOp {
  kAdd, kSub, kMul, kDiv, kMod,
  kBitAnd, kBitOr, kBitXor,
  kShl, kShr,
  kEq, kNe, kLt, kLe, kGt, kGe,
  kLogAnd, kLogOr,
};

struct Expr {
  enum class Kind {
    kConst, kRef, kBitSelect, kPartSelect, kUnary, kBinary, kConcat, kTernary,
  };

  Kind kind = Kind::kConst;
  SourceLoc loc;

  // kConst: `sized` distinguishes N'bX forms from bare decimals (which
  // get the customary 32-bit width).
  BitVal value;
  int width = 32;
  bool sized = false;

  // kRef, kBitSelect, kPartSelect
  std::string name;
  std::unique_ptr<Expr> index;  // kBitSelect
  int hi = 0, lo = 0;           // kPartSelect

  UnaryOp un_op = UnaryOp::kBitNot;
  BinaryOp bin_op = BinaryOp::kAdd;
  std::unique_ptr<Expr> a, b, c;  // operands; c is the ternary else arm

  std::vector<std::unique_ptr<Expr>> elems;  // kConcat, high part first
};

struct LValue {
  enum class Kind { kWhole, kBit, kPart };
  Kind kind = Kind::kWhole;
  SourceLoc loc;
  std::string name;
  int index = 0;      // kBit
  int hi = 0, lo = 0; // kPart
};

struct Stmt {
  enum class Kind { kBlock, kIf, kCase, kBlockingAssign, kNonblockingAssign };

  struct CaseArm {
    std::vector<std::unique_ptr<Expr>> labels;
    std::unique_ptr<Stmt> body;
  };

  Kind kind = Kind::kBlock;
  SourceLoc loc;

  std::vector<std::unique_ptr<Stmt>> stmts;  // kBlock

  std::unique_ptr<Expr> cond;                // kIf condition / kCase subject
  std::unique_ptr<Stmt> then_stmt;           // kIf
  std::unique_ptr<Stmt> else_stmt;           // kIf, may be null

  std::vector<CaseArm> arms;                 // kCase
  std::unique_ptr<Stmt> default_stmt;        // kCase, may be null

  LValue lhs;                                // assigns
  std::unique_ptr<Expr> rhs;
};

enum class PortDir { kInput, kOutput };

struct PortDecl {
  std::string name;
  PortDir dir = PortDir::kInput;
  int width = 1;
  bool is_reg = false;
  SourceLoc loc;
};

// Internal wire/reg declaration (ports live in ModuleAst::ports).
struct NetDecl {
  std::string name;
  bool is_reg = false;
  int width = 1;
  SourceLoc loc;
};

struct SensItem {
  bool is_edge = false;
  bool posedge = true;
  std::string signal;
  SourceLoc loc;
};

struct SensitivityList {
  bool star = false;  // @* or @(*)
  std::vector<SensItem> items;
};

struct Item {
  enum class Kind { kContinuousAssign, kAlwaysBlock };
  Kind kind = Kind::kContinuousAssign;
  SourceLoc loc;

  LValue lhs;                  // continuous assign
  std::unique_ptr<Expr> rhs;

  SensitivityList sensitivity; // always block
  std::unique_ptr<Stmt> body;
};

struct ModuleAst {
  std::string name;
  std::string source_file;
  SourceLoc loc;
  std::vector<PortDecl> ports;
  std::vector<NetDecl> nets;
  std::vector<Item> items;
};

// Renders the module as parseable source. Re-parsing the output yields a
// structurally identical AST.
std::string PrintModule(const ModuleAst& m);

// Structural comparison ignoring source locations.
bool StructurallyEqual(const ModuleAst& a, const ModuleAst& b);

}  // namespace rtlsym::ast

#endif  // RTLSYM_FRONTEND_AST_H_
