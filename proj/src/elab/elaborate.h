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

#ifndef RTLSYM_ELAB_ELABORATE_H_
#define RTLSYM_ELAB_ELABORATE_H_

#include "elab/design.h"
#include "frontend/ast.h"

namespace rtlsym {

// Lowers a parsed module into an executable design: resolves names,
// computes widths, classifies processes, checks static legality
// (single driver, no combinational cycles, blocking/nonblocking
// discipline) and numbers statements and branches for coverage.
// Throws Diag(kElabError) on rule violations.
ir::RtlDesign Elaborate(const ast::ModuleAst& m);

// Computed width of an expression in the context of a module's
// declarations (comparisons/reductions/logical -> 1; arithmetic and
// bitwise -> widest operand; shifts, divide, modulo -> left operand;
// concat -> sum; ternary -> widest arm).
int WidthOf(const ast::Expr& e, const ast::ModuleAst& m);

}  // namespace rtlsym

#endif  // RTLSYM_ELAB_ELABORATE_H_
