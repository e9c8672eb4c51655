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

#ifndef RTLSYM_FRONTEND_LEXER_H_
#define RTLSYM_FRONTEND_LEXER_H_

#include <string>
#include <vector>

#include "support/bitval.h"
#include "support/diag.h"

namespace rtlsym {

enum class TokKind {
  kIdent,
  kNumber,
  kEof,
  // Keywords.
  kKwModule, kKwEndmodule, kKwInput, kKwOutput, kKwWire, kKwReg,
  kKwAssign, kKwAlways, kKwBegin, kKwEnd, kKwIf, kKwElse,
  kKwCase, kKwEndcase, kKwDefault, kKwPosedge, kKwNegedge, kKwOr,
  // Punctuation and operators.
  kLParen, kRParen, kLBracket, kRBracket, kLBrace, kRBrace,
  kComma, kSemi, kColon, kAt, kQuestion,
  kAssign,     // =
  kPlus, kMinus, kStar, kSlash, kPercent,
  kAmp, kPipe, kCaret, kTilde, kBang,
  kLt, kGt, kShl, kShr,
  kEqEq, kNotEq, kLtEq, kGtEq,
  kAmpAmp, kPipePipe,
};

const char* TokKindName(TokKind kind);

struct Token {
  TokKind kind = TokKind::kEof;
  SourceLoc loc;
  std::string text;    // identifier spelling, or the literal as written
  BitVal value;        // kNumber
  int width = 32;      // kNumber: declared size, or 32 for bare decimals
  bool sized = false;  // kNumber: true for N'b / N'h / N'd forms
};

// Splits `source` into tokens (terminated by a kEof token). Throws
// Diag(kLexError) on malformed input; `filename` is used in diagnostics.
std::vector<Token> Tokenize(const std::string& source,
                            const std::string& filename);

}  // namespace rtlsym

#endif  // RTLSYM_FRONTEND_LEXER_H_
