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

#ifndef RTLSYM_SOLVER_BITBLAST_H_
#define RTLSYM_SOLVER_BITBLAST_H_

#include <span>

#include "solver/cnf.h"
#include "sym/expr.h"

namespace rtlsym {

// Tseitin-encodes the conjunction of the given width-1 constraints into an
// equisatisfiable CNF. Arithmetic uses ripple-carry adders, an array
// multiplier, and a restoring divider whose zero-divisor case is muxed to
// the all-zeros result; variable shifts become barrel muxes; comparisons
// become chains; Ite is a per-bit mux.
Cnf Bitblast(const NodeTable& table, std::span<const NodeId> constraints);

}  // namespace rtlsym

#endif  // RTLSYM_SOLVER_BITBLAST_H_
