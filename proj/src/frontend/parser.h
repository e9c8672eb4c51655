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

#ifndef RTLSYM_FRONTEND_PARSER_H_
#define RTLSYM_FRONTEND_PARSER_H_

#include <string>
#include <vector>

#include "frontend/ast.h"
#include "frontend/lexer.h"

namespace rtlsym {

// Parses one module from a token stream. Throws Diag(kParseError) with an
// "expected X, found Y" message anchored at the earliest failing token.
ast::ModuleAst ParseModule(const std::vector<Token>& tokens,
                           const std::string& filename);

// Tokenizes and parses `source`.
ast::ModuleAst ParseSource(const std::string& source,
                           const std::string& filename);

// Reads, tokenizes and parses a file. Throws Diag(kIoError) if unreadable.
ast::ModuleAst ParseFile(const std::string& path);

}  // namespace rtlsym

#endif  // RTLSYM_FRONTEND_PARSER_H_
