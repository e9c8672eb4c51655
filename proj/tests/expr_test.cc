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

#include <random>
#include <thread>
#include <vector>

#include "support/diag.h"
#include "sym/expr.h"

namespace rtlsym {
namespace {

TEST_CASE("constants are canonical and range-checked") {
  NodeTable t;
  NodeId zero = t.ConstU64(1, 0);
  CHECK(zero == t.ConstU64(1, 0));
  CHECK(t.node(zero).width == 1);
  CHECK(t.node(zero).value.IsZero());

  NodeId ff = t.ConstU64(8, 255);
  CHECK(t.node(ff).value == BitVal::FromU64(255));

  try {
    t.ConstU64(1, 2);
    FAIL("expected a width diagnostic");
  } catch (const Diag& d) {
    CHECK(d.code() == StatusCode::kWidthError);
  }
  CHECK_THROWS_AS(t.ConstU64(4, 16), Diag);
  CHECK_THROWS_AS(t.Const(0, BitVal{}), Diag);
  CHECK_THROWS_AS(t.Const(129, BitVal{}), Diag);
}

TEST_CASE("variables are hash-consed by name, width and cycle") {
  NodeTable t;
  NodeId a = t.Var("sel", 1, 0);
  CHECK(a == t.Var("sel", 1, 0));
  CHECK(a != t.Var("sel", 1, 1));
  CHECK(a != t.Var("sel2", 1, 0));
  NodeId wide = t.Var("opa", 64, 0);
  CHECK(t.node(wide).width == 64);
  CHECK(t.var_name(t.node(wide)) == "opa");
  CHECK(t.node(t.Var("sel", 1, 3)).cycle == 3);
}

TEST_CASE("structurally equal operator nodes share one id") {
  NodeTable t;
  NodeId x = t.Var("x", 8, 0);
  NodeId y = t.Var("y", 8, 0);
  NodeId s1 = t.Op2(BvOp::kAdd, x, y);
  NodeId s2 = t.Op2(BvOp::kAdd, x, y);
  CHECK(s1 == s2);
  CHECK(s1 != t.Op2(BvOp::kAdd, y, x));  // no commutativity rewriting
  CHECK(t.Extract(s1, 3, 0) == t.Extract(s2, 3, 0));
}

TEST_CASE("constant folding") {
  NodeTable t;
  // (9 + 9) mod 16 = 2
  NodeId sum = t.Op2(BvOp::kAdd, t.ConstU64(4, 9), t.ConstU64(4, 9));
  CHECK(t.IsConstValue(sum, 2));
  // Eq of equal constants folds to 1'b1.
  CHECK(t.IsConstValue(t.Op2(BvOp::kEq, t.ConstU64(1, 0), t.ConstU64(1, 0)),
                       1));
  // Division by a zero constant folds to zero.
  CHECK(t.IsConstValue(t.Op2(BvOp::kUdiv, t.ConstU64(8, 5), t.ConstU64(8, 0)),
                       0));
  CHECK(t.IsConstValue(t.Op2(BvOp::kUrem, t.ConstU64(8, 5), t.ConstU64(8, 0)),
                       0));
}

TEST_CASE("identity and annihilator simplifications") {
  NodeTable t;
  NodeId x = t.Var("x", 8, 0);
  NodeId zero = t.ConstU64(8, 0);
  NodeId ones = t.ConstU64(8, 255);

  CHECK(t.Op2(BvOp::kAnd, x, zero) == zero);
  CHECK(t.Op2(BvOp::kAnd, zero, x) == zero);
  CHECK(t.Op2(BvOp::kAnd, x, ones) == x);
  CHECK(t.Op2(BvOp::kAnd, x, x) == x);
  CHECK(t.Op2(BvOp::kOr, x, zero) == x);
  CHECK(t.Op2(BvOp::kOr, x, ones) == ones);
  CHECK(t.Op2(BvOp::kOr, x, x) == x);
  CHECK(t.IsConstValue(t.Op2(BvOp::kXor, x, x), 0));
  CHECK(t.Op2(BvOp::kXor, x, zero) == x);
  CHECK(t.Op2(BvOp::kAdd, x, zero) == x);
  CHECK(t.Op2(BvOp::kAdd, zero, x) == x);
  CHECK(t.Op2(BvOp::kSub, x, zero) == x);
  CHECK(t.IsConstValue(t.Op2(BvOp::kSub, x, x), 0));
  CHECK(t.Op2(BvOp::kShl, x, zero) == x);
  CHECK(t.Op2(BvOp::kLshr, x, zero) == x);
  CHECK(t.IsConstValue(t.Op2(BvOp::kShl, x, t.ConstU64(8, 9)), 0));
  CHECK(t.IsConstValue(t.Op2(BvOp::kLshr, x, t.ConstU64(8, 8)), 0));
  CHECK(t.IsConstValue(t.Op2(BvOp::kEq, x, x), 1));
  CHECK(t.NotOf(t.NotOf(x)) == x);

  NodeId y = t.Var("y", 8, 0);
  CHECK(t.Ite(t.ConstU64(1, 1), x, y) == x);
  CHECK(t.Ite(t.ConstU64(1, 0), x, y) == y);
}

TEST_CASE("extract and zero-extend simplifications") {
  NodeTable t;
  NodeId x = t.Var("x", 8, 0);
  CHECK(t.Extract(x, 7, 0) == x);           // full range
  CHECK(t.ZeroExt(x, 8) == x);              // same width
  NodeId inner = t.Extract(x, 6, 2);        // width 5
  CHECK(t.Extract(inner, 3, 1) == t.Extract(x, 5, 3));  // composition
  CHECK(t.IsConstValue(t.Extract(t.ConstU64(8, 0xA5), 7, 4), 0xA));
  CHECK(t.node(t.ZeroExt(x, 12)).width == 12);
  CHECK(t.IsConstValue(t.ZeroExt(t.ConstU64(4, 9), 8), 9));
}

TEST_CASE("width errors on malformed operations") {
  NodeTable t;
  NodeId a = t.Var("a", 4, 0);
  NodeId b = t.Var("b", 8, 0);
  CHECK_THROWS_AS(t.Op2(BvOp::kAdd, a, b), Diag);
  CHECK_THROWS_AS(t.Op2(BvOp::kEq, a, b), Diag);
  CHECK_THROWS_AS(t.Ite(a, a, a), Diag);  // condition must be 1 bit
  CHECK_THROWS_AS(t.Extract(a, 4, 0), Diag);
  CHECK_THROWS_AS(t.Extract(a, 1, 2), Diag);
  CHECK_THROWS_AS(t.ZeroExt(b, 4), Diag);  // cannot shrink
}

TEST_CASE("concrete evaluation") {
  NodeTable t;
  NodeId sel = t.Var("sel", 1, 0);
  NodeId din0 = t.Var("din_0", 1, 0);
  NodeId din1 = t.Var("din_1", 1, 0);
  NodeId mux = t.Ite(t.Op2(BvOp::kEq, sel, t.ConstU64(1, 0)), din0, din1);

  Assignment a;
  a.Set("sel", 0, BitVal::FromU64(0));
  a.Set("din_0", 0, BitVal::FromU64(1));
  a.Set("din_1", 0, BitVal::FromU64(0));
  CHECK(t.Eval(mux, a) == BitVal::FromU64(1));

  a.Set("sel", 0, BitVal::FromU64(1));
  CHECK(t.Eval(mux, a) == BitVal::FromU64(0));

  // Identity: a variable evaluates to its binding.
  NodeId v = t.Var("v", 16, 2);
  Assignment b;
  b.Set("v", 2, BitVal::FromU64(12345));
  CHECK(t.Eval(v, b) == BitVal::FromU64(12345));

  Assignment empty;
  try {
    t.Eval(mux, empty);
    FAIL("expected missing-variable diagnostic");
  } catch (const Diag& d) {
    CHECK(d.code() == StatusCode::kMissingVar);
  }
}

// Every simplification the table may apply must preserve semantics.
// Exhaustive check at width <= 4 over a pool of operand shapes.
TEST_CASE("simplifier soundness, exhaustive at small widths") {
  for (int w = 1; w <= 4; ++w) {
    NodeTable t;
    NodeId x = t.Var("x", w, 0);
    NodeId y = t.Var("y", w, 0);
    std::vector<NodeId> pool = {
        x,
        y,
        t.ConstU64(w, 0),
        t.Const(w, BitVal::Ones(w)),
        t.ConstU64(w, 1),
        t.Op2(BvOp::kXor, x, y),
        t.NotOf(x),
    };
    const BvOp binary_ops[] = {
        BvOp::kAdd, BvOp::kSub, BvOp::kMul, BvOp::kUdiv, BvOp::kUrem,
        BvOp::kAnd, BvOp::kOr,  BvOp::kXor, BvOp::kShl,  BvOp::kLshr,
        BvOp::kEq,  BvOp::kUlt, BvOp::kUle,
    };
    const uint64_t n = 1ull << w;
    for (BvOp op : binary_ops) {
      for (NodeId ea : pool) {
        for (NodeId eb : pool) {
          NodeId node = t.Op2(op, ea, eb);
          for (uint64_t vx = 0; vx < n; ++vx) {
            for (uint64_t vy = 0; vy < n; ++vy) {
              Assignment a;
              a.Set("x", 0, BitVal::FromU64(vx));
              a.Set("y", 0, BitVal::FromU64(vy));
              BitVal va = t.Eval(ea, a);
              BitVal vb = t.Eval(eb, a);
              const BitVal vals[] = {va, vb};
              const int widths[] = {w, w};
              int rw = op == BvOp::kEq || op == BvOp::kUlt || op == BvOp::kUle
                           ? 1
                           : w;
              BitVal want = EvalBvOp(op, rw, 0, 0, vals, widths);
              CHECK(t.Eval(node, a) == want);
            }
          }
        }
      }
    }
    // Unary and structural forms over the same pool.
    for (NodeId ea : pool) {
      NodeId not_n = t.NotOf(ea);
      NodeId redand = t.Op(BvOp::kRedAnd, {ea});
      NodeId redor = t.Op(BvOp::kRedOr, {ea});
      NodeId redxor = t.Op(BvOp::kRedXor, {ea});
      NodeId zext = t.ZeroExt(ea, w + 2);
      NodeId extr = t.Extract(ea, w - 1, w > 1 ? 1 : 0);
      for (uint64_t vx = 0; vx < n; ++vx) {
        for (uint64_t vy = 0; vy < n; ++vy) {
          Assignment a;
          a.Set("x", 0, BitVal::FromU64(vx));
          a.Set("y", 0, BitVal::FromU64(vy));
          BitVal va = t.Eval(ea, a);
          const BitVal vals[] = {va};
          const int widths[] = {w};
          CHECK(t.Eval(not_n, a) == EvalBvOp(BvOp::kNot, w, 0, 0, vals,
                                             widths));
          CHECK(t.Eval(redand, a) ==
                EvalBvOp(BvOp::kRedAnd, 1, 0, 0, vals, widths));
          CHECK(t.Eval(redor, a) ==
                EvalBvOp(BvOp::kRedOr, 1, 0, 0, vals, widths));
          CHECK(t.Eval(redxor, a) ==
                EvalBvOp(BvOp::kRedXor, 1, 0, 0, vals, widths));
          CHECK(t.Eval(zext, a) == va);
          CHECK(t.Eval(extr, a) ==
                bv::Extract(va, w - 1, w > 1 ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("ite against both arms over sampled assignments") {
  NodeTable t;
  NodeId c = t.Var("c", 1, 0);
  NodeId a = t.Var("a", 8, 0);
  NodeId b = t.Var("b", 8, 0);
  NodeId ite = t.Ite(c, a, b);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    Assignment asg;
    uint64_t vc = rng() & 1;
    uint64_t va = rng() & 0xFF;
    uint64_t vb = rng() & 0xFF;
    asg.Set("c", 0, BitVal::FromU64(vc));
    asg.Set("a", 0, BitVal::FromU64(va));
    asg.Set("b", 0, BitVal::FromU64(vb));
    CHECK(t.Eval(ite, asg) == BitVal::FromU64(vc ? va : vb));
  }
}

TEST_CASE("extract of concat recovers the high part") {
  // Extract(hi=wB+wA-1, lo=wB, Concat(a,b)) == a, exhaustively at 3+2 bits.
  NodeTable t;
  NodeId a = t.Var("a", 3, 0);
  NodeId b = t.Var("b", 2, 0);
  NodeId cat = t.Op2(BvOp::kConcat, a, b);
  REQUIRE(t.node(cat).width == 5);
  NodeId high = t.Extract(cat, 4, 2);
  NodeId low = t.Extract(cat, 1, 0);
  for (uint64_t va = 0; va < 8; ++va) {
    for (uint64_t vb = 0; vb < 4; ++vb) {
      Assignment asg;
      asg.Set("a", 0, BitVal::FromU64(va));
      asg.Set("b", 0, BitVal::FromU64(vb));
      CHECK(t.Eval(high, asg) == BitVal::FromU64(va));
      CHECK(t.Eval(low, asg) == BitVal::FromU64(vb));
      CHECK(t.Eval(cat, asg) == BitVal::FromU64((va << 2) | vb));
    }
  }
}

TEST_CASE("hash consing under randomized construction") {
  NodeTable t;
  std::vector<NodeId> first, second;
  for (int round = 0; round < 2; ++round) {
    std::mt19937_64 local(4242);
    std::vector<NodeId>& out = round == 0 ? first : second;
    std::vector<NodeId> stock = {t.Var("p", 6, 0), t.Var("q", 6, 0),
                                 t.ConstU64(6, 17)};
    for (int i = 0; i < 500; ++i) {
      const BvOp ops[] = {BvOp::kAdd, BvOp::kMul, BvOp::kXor, BvOp::kAnd,
                          BvOp::kOr, BvOp::kSub};
      NodeId a = stock[local() % stock.size()];
      NodeId b = stock[local() % stock.size()];
      NodeId n = t.Op2(ops[local() % 6], a, b);
      stock.push_back(n);
      out.push_back(n);
    }
  }
  CHECK(first == second);
}

TEST_CASE("variable collection follows first occurrence order") {
  NodeTable t;
  NodeId a = t.Var("a", 4, 0);
  NodeId b = t.Var("b", 4, 0);
  NodeId c = t.Var("c", 4, 0);
  NodeId e1 = t.Op2(BvOp::kAdd, b, a);
  NodeId e2 = t.Op2(BvOp::kXor, a, c);
  const NodeId roots[] = {e1, e2};
  std::vector<NodeId> vars = t.CollectVars(roots);
  REQUIRE(vars.size() == 3);
  CHECK(vars[0] == b);
  CHECK(vars[1] == a);
  CHECK(vars[2] == c);
}

TEST_CASE("concurrent node creation yields consistent handles") {
  NodeTable t;
  constexpr int kThreads = 4;
  std::vector<std::vector<NodeId>> results(kThreads);
  std::vector<std::thread> workers;
  for (int w = 0; w < kThreads; ++w) {
    workers.emplace_back([&t, &results, w] {
      std::vector<NodeId>& out = results[w];
      for (int i = 0; i < 200; ++i) {
        NodeId x = t.Var("x", 16, i % 5);
        NodeId k = t.ConstU64(16, static_cast<uint64_t>(i % 7));
        out.push_back(t.Op2(BvOp::kAdd, x, k));
      }
    });
  }
  for (auto& th : workers) th.join();
  for (int w = 1; w < kThreads; ++w) {
    CHECK(results[w] == results[0]);
  }
}

}  // namespace
}  // namespace rtlsym
