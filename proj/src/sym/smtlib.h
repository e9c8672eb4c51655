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

#ifndef RTLSYM_SYM_SMTLIB_H_
#define RTLSYM_SYM_SMTLIB_H_

#include <span>
#include <string>

#include "sym/expr.h"

namespace rtlsym {

// Renders a QF_BV script asserting the conjunction of the given width-1
// constraints: one declare-const per variable (first-occurrence order),
// one define-fun per interior node, one assert per constraint, then
// (check-sat)(get-model). Cycle-0 variables keep their bare name; later
// cycles append "$<cycle>".
std::string ToSmtLib(const NodeTable& table, std::span<const NodeId> constraints);

// The symbol a variable node gets inside the script.
std::string SmtVarSymbol(const std::string& name, int cycle);

}  // namespace rtlsym

#endif  // RTLSYM_SYM_SMTLIB_H_
