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

#ifndef RTLSYM_SOLVER_CNF_H_
#define RTLSYM_SOLVER_CNF_H_

#include <map>
#include <utility>
#include <vector>

#include "sym/expr.h"

namespace rtlsym {

// Clausal form of a constraint conjunction. Variables are 1..num_vars;
// literals are signed variable indices (DIMACS convention). Variable 1 is
// reserved as the constant true (pinned by a unit clause), which lets
// constant bits flow through the gate encoders as ordinary literals.
struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  // (variable node, bit index) -> CNF variable carrying that bit.
  std::map<std::pair<NodeId, int>, int> bit_map;
};

}  // namespace rtlsym

#endif  // RTLSYM_SOLVER_CNF_H_
