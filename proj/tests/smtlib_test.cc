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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "sym/expr.h"
#include "sym/smtlib.h"

namespace rtlsym {
namespace {

size_t CountOccurrences(const std::string& haystack, const std::string& s) {
  size_t n = 0;
  for (size_t pos = haystack.find(s); pos != std::string::npos;
       pos = haystack.find(s, pos + 1)) {
    ++n;
  }
  return n;
}

TEST_CASE("single equality constraint") {
  NodeTable t;
  NodeId sel = t.Var("sel", 1, 0);
  NodeId c = t.Op2(BvOp::kEq, sel, t.ConstU64(1, 0));
  const NodeId cs[] = {c};
  CHECK(ToSmtLib(t, cs) ==
        "(set-logic QF_BV)\n"
        "(declare-const sel (_ BitVec 1))\n"
        "(define-fun t0 () (_ BitVec 1) (ite (= sel #b0) #b1 #b0))\n"
        "(assert (= t0 #b1))\n"
        "(check-sat)\n"
        "(get-model)\n");
}

TEST_CASE("no constraints yields a bare check") {
  NodeTable t;
  CHECK(ToSmtLib(t, {}) == "(set-logic QF_BV)\n(check-sat)\n(get-model)\n");
}

TEST_CASE("x != x folds to a false constant assert") {
  NodeTable t;
  NodeId x = t.Var("x", 4, 0);
  NodeId ne = t.NotOf(t.Op2(BvOp::kEq, x, x));
  const NodeId cs[] = {ne};
  // The simplifier collapses the contradiction before rendering.
  CHECK(ToSmtLib(t, cs) ==
        "(set-logic QF_BV)\n"
        "(assert (= #b0 #b1))\n"
        "(check-sat)\n"
        "(get-model)\n");
}

TEST_CASE("shared subterms are defined once") {
  NodeTable t;
  NodeId x = t.Var("x", 4, 0);
  NodeId y = t.Var("y", 4, 0);
  NodeId sum = t.Op2(BvOp::kAdd, x, y);
  NodeId c1 = t.Op2(BvOp::kEq, sum, t.ConstU64(4, 0));
  NodeId c2 = t.Op2(BvOp::kUlt, sum, t.ConstU64(4, 5));
  const NodeId cs[] = {c1, c2};
  std::string script = ToSmtLib(t, cs);
  CHECK(script ==
        "(set-logic QF_BV)\n"
        "(declare-const x (_ BitVec 4))\n"
        "(declare-const y (_ BitVec 4))\n"
        "(define-fun t0 () (_ BitVec 4) (bvadd x y))\n"
        "(define-fun t1 () (_ BitVec 1) (ite (= t0 #b0000) #b1 #b0))\n"
        "(define-fun t2 () (_ BitVec 1) (ite (bvult t0 #b0101) #b1 #b0))\n"
        "(assert (= t1 #b1))\n"
        "(assert (= t2 #b1))\n"
        "(check-sat)\n"
        "(get-model)\n");
  CHECK(CountOccurrences(script, "bvadd") == 1);
  CHECK(CountOccurrences(script, "(assert") == 2);
}

TEST_CASE("declarations follow first occurrence across constraints") {
  NodeTable t;
  NodeId a = t.Var("a", 2, 0);
  NodeId b = t.Var("b", 2, 0);
  NodeId c1 = t.Op2(BvOp::kUle, b, a);  // b occurs first
  NodeId c2 = t.Op2(BvOp::kEq, a, b);
  const NodeId cs[] = {c1, c2};
  std::string script = ToSmtLib(t, cs);
  size_t decl_b = script.find("(declare-const b");
  size_t decl_a = script.find("(declare-const a");
  REQUIRE(decl_a != std::string::npos);
  REQUIRE(decl_b != std::string::npos);
  CHECK(decl_b < decl_a);
  CHECK(CountOccurrences(script, "declare-const") == 2);
}

TEST_CASE("cycle tags become dollar suffixes") {
  CHECK(SmtVarSymbol("en", 0) == "en");
  CHECK(SmtVarSymbol("en", 3) == "en$3");
  NodeTable t;
  NodeId en2 = t.Var("en", 1, 2);
  NodeId c = t.Op2(BvOp::kEq, en2, t.ConstU64(1, 1));
  const NodeId cs[] = {c};
  std::string script = ToSmtLib(t, cs);
  CHECK(script.find("(declare-const en$2 (_ BitVec 1))") != std::string::npos);
}

TEST_CASE("guarded division and zero-extension forms") {
  NodeTable t;
  NodeId a = t.Var("a", 4, 0);
  NodeId b = t.Var("b", 4, 0);
  NodeId q = t.Op2(BvOp::kUdiv, a, b);
  NodeId wide = t.ZeroExt(q, 8);
  NodeId c = t.Op2(BvOp::kEq, wide, t.ConstU64(8, 3));
  const NodeId cs[] = {c};
  std::string script = ToSmtLib(t, cs);
  CHECK(script.find("(ite (= b #b0000) #b0000 (bvudiv a b))") !=
        std::string::npos);
  CHECK(script.find("((_ zero_extend 4) t0)") != std::string::npos);
}

TEST_CASE("reduction xor expands to per-bit extracts") {
  NodeTable t;
  NodeId x = t.Var("x", 2, 0);
  NodeId red = t.Op(BvOp::kRedXor, {x});
  const NodeId cs[] = {red};
  std::string script = ToSmtLib(t, cs);
  CHECK(script.find(
            "(bvxor ((_ extract 0 0) x) ((_ extract 1 1) x))") !=
        std::string::npos);
}

TEST_CASE("width-1 constraints can be plain variables") {
  NodeTable t;
  NodeId flag = t.Var("flag", 1, 0);
  const NodeId cs[] = {flag};
  CHECK(ToSmtLib(t, cs) ==
        "(set-logic QF_BV)\n"
        "(declare-const flag (_ BitVec 1))\n"
        "(assert (= flag #b1))\n"
        "(check-sat)\n"
        "(get-model)\n");
}

}  // namespace
}  // namespace rtlsym
