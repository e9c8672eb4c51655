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

#include "frontend/lexer.h"

#include <cctype>
#include <map>
#include <string>
#include <string_view>

namespace rtlsym {
namespace {

const std::map<std::string_view, TokKind>& KeywordTable() {
  static const std::map<std::string_view, TokKind> kTable = {
      {"module", TokKind::kKwModule},   {"endmodule", TokKind::kKwEndmodule},
      {"input", TokKind::kKwInput},     {"output", TokKind::kKwOutput},
      {"wire", TokKind::kKwWire},       {"reg", TokKind::kKwReg},
      {"assign", TokKind::kKwAssign},   {"always", TokKind::kKwAlways},
      {"begin", TokKind::kKwBegin},     {"end", TokKind::kKwEnd},
      {"if", TokKind::kKwIf},           {"else", TokKind::kKwElse},
      {"case", TokKind::kKwCase},       {"endcase", TokKind::kKwEndcase},
      {"default", TokKind::kKwDefault}, {"posedge", TokKind::kKwPosedge},
      {"negedge", TokKind::kKwNegedge}, {"or", TokKind::kKwOr},
  };
  return kTable;
}

// Recognized Verilog keywords that lie outside the supported subset. Naming
// them individually gives far better diagnostics than "unexpected token".
const std::map<std::string_view, std::string_view>& UnsupportedKeywords() {
  static const std::map<std::string_view, std::string_view> kTable = {
      {"signed", "signed declarations are not supported"},
      {"casex", "casex is not supported; use case"},
      {"casez", "casez is not supported; use case"},
      {"initial", "initial blocks are not supported"},
      {"parameter", "parameters are not supported"},
      {"localparam", "parameters are not supported"},
      {"generate", "generate blocks are not supported"},
      {"endgenerate", "generate blocks are not supported"},
      {"function", "functions are not supported"},
      {"endfunction", "functions are not supported"},
      {"task", "tasks are not supported"},
      {"endtask", "tasks are not supported"},
      {"inout", "inout ports are not supported"},
      {"integer", "integer declarations are not supported; use reg [31:0]"},
      {"real", "real declarations are not supported"},
      {"tri", "tri nets are not supported"},
      {"supply0", "supply nets are not supported"},
      {"supply1", "supply nets are not supported"},
      {"for", "for loops are not supported"},
      {"while", "while loops are not supported"},
      {"repeat", "repeat loops are not supported"},
      {"forever", "forever loops are not supported"},
      {"fork", "fork/join is not supported"},
      {"join", "fork/join is not supported"},
      {"wait", "wait statements are not supported"},
      {"deassign", "deassign is not supported"},
      {"force", "force is not supported"},
      {"release", "release is not supported"},
      {"specify", "specify blocks are not supported"},
      {"primitive", "user-defined primitives are not supported"},
      {"defparam", "defparam is not supported"},
      {"genvar", "generate blocks are not supported"},
      {"event", "named events are not supported"},
  };
  return kTable;
}

class Lexer {
 public:
  Lexer(const std::string& source, const std::string& filename)
      : src_(source), file_(filename) {}

  // Returns only content tokens; end-of-input is the end of the vector.
  std::vector<Token> Run() {
    std::vector<Token> out;
    for (;;) {
      SkipWhitespaceAndComments();
      if (AtEnd()) break;
      out.push_back(Next());
    }
    return out;
  }

 private:
  [[noreturn]] void Fail(SourceLoc loc, const std::string& msg) const {
    throw Diag(StatusCode::kLexError, file_, loc, msg);
  }

  bool AtEnd() const { return pos_ >= src_.size(); }
  char Peek(size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  char Advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++loc_.line;
      loc_.col = 1;
    } else {
      ++loc_.col;
    }
    return c;
  }

  void SkipWhitespaceAndComments() {
    for (;;) {
      if (AtEnd()) return;
      char c = Peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        Advance();
      } else if (c == '/' && Peek(1) == '/') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else if (c == '/' && Peek(1) == '*') {
        SourceLoc start = loc_;
        Advance();
        Advance();
        for (;;) {
          if (AtEnd()) Fail(start, "unterminated block comment");
          if (Peek() == '*' && Peek(1) == '/') {
            Advance();
            Advance();
            break;
          }
          Advance();
        }
      } else {
        return;
      }
    }
  }

  Token Make(TokKind kind, SourceLoc loc, std::string text) const {
    Token t;
    t.kind = kind;
    t.loc = loc;
    t.text = std::move(text);
    return t;
  }

  Token Next() {
    SourceLoc start = loc_;
    char c = Peek();

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return LexIdentOrKeyword(start);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return LexNumber(start);
    }
    if (c == '\'') {
      Fail(start, "based literal requires an explicit width (e.g. 4'b0101)");
    }
    if (c == '$') {
      Fail(start, "system tasks and '$' identifiers are not supported");
    }

    Advance();
    switch (c) {
      case '(': return Make(TokKind::kLParen, start, "(");
      case ')': return Make(TokKind::kRParen, start, ")");
      case '[': return Make(TokKind::kLBracket, start, "[");
      case ']': return Make(TokKind::kRBracket, start, "]");
      case '{': return Make(TokKind::kLBrace, start, "{");
      case '}': return Make(TokKind::kRBrace, start, "}");
      case ',': return Make(TokKind::kComma, start, ",");
      case ';': return Make(TokKind::kSemi, start, ";");
      case ':': return Make(TokKind::kColon, start, ":");
      case '@': return Make(TokKind::kAt, start, "@");
      case '?': return Make(TokKind::kQuestion, start, "?");
      case '+': return Make(TokKind::kPlus, start, "+");
      case '-': return Make(TokKind::kMinus, start, "-");
      case '*': return Make(TokKind::kStar, start, "*");
      case '/': return Make(TokKind::kSlash, start, "/");
      case '%': return Make(TokKind::kPercent, start, "%");
      case '~': return Make(TokKind::kTilde, start, "~");
      case '^': return Make(TokKind::kCaret, start, "^");
      case '=':
        if (Peek() == '=') {
          Advance();
          return Make(TokKind::kEqEq, start, "==");
        }
        return Make(TokKind::kAssign, start, "=");
      case '!':
        if (Peek() == '=') {
          Advance();
          return Make(TokKind::kNotEq, start, "!=");
        }
        return Make(TokKind::kBang, start, "!");
      case '&':
        if (Peek() == '&') {
          Advance();
          return Make(TokKind::kAmpAmp, start, "&&");
        }
        return Make(TokKind::kAmp, start, "&");
      case '|':
        if (Peek() == '|') {
          Advance();
          return Make(TokKind::kPipePipe, start, "||");
        }
        return Make(TokKind::kPipe, start, "|");
      case '<':
        if (Peek() == '<') {
          Advance();
          return Make(TokKind::kShl, start, "<<");
        }
        if (Peek() == '=') {
          Advance();
          return Make(TokKind::kLtEq, start, "<=");
        }
        return Make(TokKind::kLt, start, "<");
      case '>':
        if (Peek() == '>') {
          Advance();
          return Make(TokKind::kShr, start, ">>");
        }
        if (Peek() == '=') {
          Advance();
          return Make(TokKind::kGtEq, start, ">=");
        }
        return Make(TokKind::kGt, start, ">");
      default:
        Fail(start, std::string("unexpected character '") + c + "'");
    }
  }

  Token LexIdentOrKeyword(SourceLoc start) {
    std::string text;
    while (!AtEnd()) {
      char c = Peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        text.push_back(Advance());
      } else if (c == '$') {
        Fail(loc_, "'$' is not allowed in identifiers");
      } else {
        break;
      }
    }
    const auto& keywords = KeywordTable();
    if (auto it = keywords.find(text); it != keywords.end()) {
      return Make(it->second, start, std::move(text));
    }
    const auto& unsupported = UnsupportedKeywords();
    if (auto it = unsupported.find(text); it != unsupported.end()) {
      Fail(start, std::string(it->second));
    }
    return Make(TokKind::kIdent, start, std::move(text));
  }

  // A decimal run is either a bare decimal literal or the size prefix of a
  // based literal (N'b..., N'h..., N'd...).
  Token LexNumber(SourceLoc start) {
    std::string digits;
    while (!AtEnd() && (std::isdigit(static_cast<unsigned char>(Peek())) ||
                        Peek() == '_')) {
      digits.push_back(Advance());
    }

    if (AtEnd() || Peek() != '\'') {
      Token t = Make(TokKind::kNumber, start, digits);
      t.value = ParseNumber(start, digits, 10);
      t.width = 32;
      t.sized = false;
      return t;
    }

    Advance();  // consume '
    BitVal size_val = ParseNumber(start, digits, 10);
    if (!size_val.FitsU64() || size_val.AsU64() < 1 ||
        size_val.AsU64() > static_cast<uint64_t>(kMaxWidth)) {
      Fail(start, "literal width must be between 1 and 128");
    }
    int width = static_cast<int>(size_val.AsU64());

    if (AtEnd()) Fail(loc_, "expected base character after '");
    char base_ch = Advance();
    if (base_ch == 's' || base_ch == 'S') {
      Fail(start, "signed literals are not supported");
    }
    int base;
    switch (base_ch) {
      case 'b': case 'B': base = 2; break;
      case 'd': case 'D': base = 10; break;
      case 'h': case 'H': base = 16; break;
      case 'o': case 'O':
        Fail(start, "octal literals are not supported");
      default:
        Fail(start, std::string("unknown literal base '") + base_ch + "'");
    }

    std::string body;
    while (!AtEnd()) {
      char c = Peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        body.push_back(Advance());
      } else {
        break;
      }
    }
    if (body.empty() || body.find_first_not_of('_') == std::string::npos) {
      Fail(start, "literal has no digits");
    }

    Token t = Make(TokKind::kNumber, start, digits + "'" + base_ch + body);
    t.value = ParseNumber(start, body, base);
    t.width = width;
    t.sized = true;
    return t;
  }

  BitVal ParseNumber(SourceLoc loc, const std::string& body, int base) const {
    BitVal out;
    bool ok = false;
    switch (base) {
      case 2: ok = bv::ParseBin(body, &out); break;
      case 10: ok = bv::ParseDec(body, &out); break;
      case 16: ok = bv::ParseHex(body, &out); break;
    }
    if (!ok) {
      Fail(loc, "malformed or out-of-range literal '" + body + "'" +
                    " (values must fit in 128 bits)");
    }
    return out;
  }

  const std::string& src_;
  const std::string& file_;
  size_t pos_ = 0;
  SourceLoc loc_;
};

}  // namespace

const char* TokKindName(TokKind kind) {
  switch (kind) {
    case TokKind::kIdent: return "identifier";
    case TokKind::kNumber: return "number";
    case TokKind::kEof: return "end of file";
    case TokKind::kKwModule: return "'module'";
    case TokKind::kKwEndmodule: return "'endmodule'";
    case TokKind::kKwInput: return "'input'";
    case TokKind::kKwOutput: return "'output'";
    case TokKind::kKwWire: return "'wire'";
    case TokKind::kKwReg: return "'reg'";
    case TokKind::kKwAssign: return "'assign'";
    case TokKind::kKwAlways: return "'always'";
    case TokKind::kKwBegin: return "'begin'";
    case TokKind::kKwEnd: return "'end'";
    case TokKind::kKwIf: return "'if'";
    case TokKind::kKwElse: return "'else'";
    case TokKind::kKwCase: return "'case'";
    case TokKind::kKwEndcase: return "'endcase'";
    case TokKind::kKwDefault: return "'default'";
    case TokKind::kKwPosedge: return "'posedge'";
    case TokKind::kKwNegedge: return "'negedge'";
    case TokKind::kKwOr: return "'or'";
    case TokKind::kLParen: return "'('";
    case TokKind::kRParen: return "')'";
    case TokKind::kLBracket: return "'['";
    case TokKind::kRBracket: return "']'";
    case TokKind::kLBrace: return "'{'";
    case TokKind::kRBrace: return "'}'";
    case TokKind::kComma: return "','";
    case TokKind::kSemi: return "';'";
    case TokKind::kColon: return "':'";
    case TokKind::kAt: return "'@'";
    case TokKind::kQuestion: return "'?'";
    case TokKind::kAssign: return "'='";
    case TokKind::kPlus: return "'+'";
    case TokKind::kMinus: return "'-'";
    case TokKind::kStar: return "'*'";
    case TokKind::kSlash: return "'/'";
    case TokKind::kPercent: return "'%'";
    case TokKind::kAmp: return "'&'";
    case TokKind::kPipe: return "'|'";
    case TokKind::kCaret: return "'^'";
    case TokKind::kTilde: return "'~'";
    case TokKind::kBang: return "'!'";
    case TokKind::kLt: return "'<'";
    case TokKind::kGt: return "'>'";
    case TokKind::kShl: return "'<<'";
    case TokKind::kShr: return "'>>'";
    case TokKind::kEqEq: return "'=='";
    case TokKind::kNotEq: return "'!='";
    case TokKind::kLtEq: return "'<='";
    case TokKind::kGtEq: return "'>='";
    case TokKind::kAmpAmp: return "'&&'";
    case TokKind::kPipePipe: return "'||'";
  }
  return "?";
}

std::vector<Token> Tokenize(const std::string& source,
                            const std::string& filename) {
  return Lexer(source, filename).Run();
}

}  // namespace rtlsym
