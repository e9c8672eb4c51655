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

#include "solver/bitblast.h"

#include <unordered_map>
#include <vector>

#include "support/diag.h"

namespace rtlsym {
namespace {

// Bit vectors are lists of CNF literals, LSB first. Constant bits are
// (+/-)kTrueLit, so every encoder below works uniformly on constants.
constexpr int kTrueLit = 1;

class Blaster {
 public:
  explicit Blaster(const NodeTable& table) : t_(table) {
    cnf_.num_vars = 1;                // variable 1 is the constant true
    cnf_.clauses.push_back({kTrueLit});
  }

  Cnf Run(std::span<const NodeId> constraints) {
    for (NodeId c : constraints) {
      const std::vector<int>& bits = BitsOf(c);
      cnf_.clauses.push_back({bits[0]});
    }
    return std::move(cnf_);
  }

 private:
  int NewVar() { return ++cnf_.num_vars; }
  void Clause(std::initializer_list<int> lits) { cnf_.clauses.push_back(lits); }

  // o <-> a & b
  int And(int a, int b) {
    if (a == -kTrueLit || b == -kTrueLit) return -kTrueLit;
    if (a == kTrueLit) return b;
    if (b == kTrueLit) return a;
    if (a == b) return a;
    if (a == -b) return -kTrueLit;
    int o = NewVar();
    Clause({-o, a});
    Clause({-o, b});
    Clause({o, -a, -b});
    return o;
  }

  // o <-> a | b
  int Or(int a, int b) { return -And(-a, -b); }

  // o <-> a ^ b
  int Xor(int a, int b) {
    if (a == kTrueLit) return -b;
    if (a == -kTrueLit) return b;
    if (b == kTrueLit) return -a;
    if (b == -kTrueLit) return a;
    if (a == b) return -kTrueLit;
    if (a == -b) return kTrueLit;
    int o = NewVar();
    Clause({-o, a, b});
    Clause({-o, -a, -b});
    Clause({o, -a, b});
    Clause({o, a, -b});
    return o;
  }

  // o <-> c ? t : e
  int Mux(int c, int t, int e) {
    if (c == kTrueLit) return t;
    if (c == -kTrueLit) return e;
    if (t == e) return t;
    if (t == kTrueLit && e == -kTrueLit) return c;
    if (t == -kTrueLit && e == kTrueLit) return -c;
    int o = NewVar();
    Clause({-o, -c, t});
    Clause({-o, c, e});
    Clause({o, -c, -t});
    Clause({o, c, -e});
    return o;
  }

  // o <-> at least two of {a, b, c} (the ripple-carry majority).
  int Majority(int a, int b, int c) {
    return Or(And(a, b), Or(And(a, c), And(b, c)));
  }

  // o <-> all bits equal
  int EqBits(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> eqs;
    for (size_t i = 0; i < a.size(); ++i) eqs.push_back(-Xor(a[i], b[i]));
    return AndReduce(eqs);
  }

  int AndReduce(const std::vector<int>& xs) {
    int acc = kTrueLit;
    for (int x : xs) acc = And(acc, x);
    return acc;
  }

  int OrReduce(const std::vector<int>& xs) {
    int acc = -kTrueLit;
    for (int x : xs) acc = Or(acc, x);
    return acc;
  }

  // o <-> a < b, unsigned, LSB-to-MSB chain.
  int UltBits(const std::vector<int>& a, const std::vector<int>& b) {
    int lt = -kTrueLit;
    for (size_t i = 0; i < a.size(); ++i) {
      lt = Mux(Xor(a[i], b[i]), And(-a[i], b[i]), lt);
    }
    return lt;
  }

  std::vector<int> AddBits(const std::vector<int>& a, const std::vector<int>& b,
                           int carry_in) {
    std::vector<int> out(a.size());
    int carry = carry_in;
    for (size_t i = 0; i < a.size(); ++i) {
      int axb = Xor(a[i], b[i]);
      out[i] = Xor(axb, carry);
      carry = Majority(a[i], b[i], carry);
    }
    return out;
  }

  std::vector<int> SubBits(const std::vector<int>& a,
                           const std::vector<int>& b) {
    std::vector<int> nb(b.size());
    for (size_t i = 0; i < b.size(); ++i) nb[i] = -b[i];
    return AddBits(a, nb, kTrueLit);
  }

  std::vector<int> MuxBits(int c, const std::vector<int>& t,
                           const std::vector<int>& e) {
    std::vector<int> out(t.size());
    for (size_t i = 0; i < t.size(); ++i) out[i] = Mux(c, t[i], e[i]);
    return out;
  }

  // Shift by a constant amount with zero fill; left = true shifts toward
  // the MSB. Amounts >= width produce all zeros by construction.
  std::vector<int> WireShift(const std::vector<int>& a, uint64_t amount,
                             bool left) {
    size_t w = a.size();
    std::vector<int> out(w, -kTrueLit);
    if (amount >= w) return out;
    for (size_t i = 0; i < w; ++i) {
      if (left) {
        if (i >= amount) out[i] = a[i - amount];
      } else {
        if (i + amount < w) out[i] = a[i + amount];
      }
    }
    return out;
  }

  // Barrel shifter: one mux stage per bit of the amount. Stages whose
  // stride is already >= width reduce to "zero the result if that amount
  // bit is set", because WireShift saturates to all zeros.
  std::vector<int> BarrelShift(const std::vector<int>& a,
                               const std::vector<int>& amount, bool left) {
    std::vector<int> acc = a;
    for (size_t k = 0; k < amount.size(); ++k) {
      uint64_t stride = k >= 63 ? uint64_t{1} << 63 : uint64_t{1} << k;
      acc = MuxBits(amount[k], WireShift(acc, stride, left), acc);
    }
    return acc;
  }

  std::vector<int> MulBits(const std::vector<int>& a,
                           const std::vector<int>& b) {
    size_t w = a.size();
    std::vector<int> acc(w, -kTrueLit);
    for (size_t j = 0; j < w; ++j) {
      std::vector<int> partial = WireShift(a, j, /*left=*/true);
      for (size_t i = 0; i < w; ++i) partial[i] = And(partial[i], b[j]);
      acc = AddBits(acc, partial, -kTrueLit);
    }
    return acc;
  }

  // Restoring long division, MSB first, on a one-bit-wider remainder so
  // the trial subtraction cannot wrap. Returns quotient and remainder;
  // the caller muxes in the zero-divisor case.
  void DivRemBits(const std::vector<int>& a, const std::vector<int>& b,
                  std::vector<int>* quotient, std::vector<int>* remainder) {
    size_t w = a.size();
    std::vector<int> wide_b(b);
    wide_b.push_back(-kTrueLit);
    std::vector<int> r(w + 1, -kTrueLit);
    std::vector<int> q(w, -kTrueLit);
    for (size_t step = w; step-- > 0;) {
      // r = (r << 1) | a[step]
      for (size_t i = w; i > 0; --i) r[i] = r[i - 1];
      r[0] = a[step];
      int ge = -UltBits(r, wide_b);  // r >= b
      std::vector<int> diff = SubBits(r, wide_b);
      r = MuxBits(ge, diff, r);
      q[step] = ge;
    }
    r.pop_back();
    *quotient = std::move(q);
    *remainder = std::move(r);
  }

  const std::vector<int>& BitsOf(NodeId id) {
    auto it = bits_.find(id);
    if (it != bits_.end()) return it->second;
    const BvNode& n = t_.node(id);
    std::vector<int> out;
    switch (n.kind) {
      case BvKind::kConst:
        out.resize(n.width);
        for (int i = 0; i < n.width; ++i) {
          out[i] = n.value.Bit(i) ? kTrueLit : -kTrueLit;
        }
        break;
      case BvKind::kVar:
        out.resize(n.width);
        for (int i = 0; i < n.width; ++i) {
          out[i] = NewVar();
          cnf_.bit_map[{id, i}] = out[i];
        }
        break;
      case BvKind::kOp:
        out = OpBits(n);
        break;
    }
    return bits_.emplace(id, std::move(out)).first->second;
  }

  std::vector<int> OpBits(const BvNode& n) {
    std::vector<std::vector<int>> ops;
    for (NodeId o : n.operands) ops.push_back(BitsOf(o));

    switch (n.op) {
      case BvOp::kAdd:
        return AddBits(ops[0], ops[1], -kTrueLit);
      case BvOp::kSub:
        return SubBits(ops[0], ops[1]);
      case BvOp::kMul:
        return MulBits(ops[0], ops[1]);
      case BvOp::kUdiv:
      case BvOp::kUrem: {
        std::vector<int> q, r;
        DivRemBits(ops[0], ops[1], &q, &r);
        int div_zero = -OrReduce(ops[1]);
        std::vector<int> zeros(ops[0].size(), -kTrueLit);
        return MuxBits(div_zero, zeros, n.op == BvOp::kUdiv ? q : r);
      }
      case BvOp::kAnd: {
        std::vector<int> out(n.width);
        for (int i = 0; i < n.width; ++i) out[i] = And(ops[0][i], ops[1][i]);
        return out;
      }
      case BvOp::kOr: {
        std::vector<int> out(n.width);
        for (int i = 0; i < n.width; ++i) out[i] = Or(ops[0][i], ops[1][i]);
        return out;
      }
      case BvOp::kXor: {
        std::vector<int> out(n.width);
        for (int i = 0; i < n.width; ++i) out[i] = Xor(ops[0][i], ops[1][i]);
        return out;
      }
      case BvOp::kNot: {
        std::vector<int> out(n.width);
        for (int i = 0; i < n.width; ++i) out[i] = -ops[0][i];
        return out;
      }
      case BvOp::kShl:
        return BarrelShift(ops[0], ops[1], /*left=*/true);
      case BvOp::kLshr:
        return BarrelShift(ops[0], ops[1], /*left=*/false);
      case BvOp::kEq:
        return {EqBits(ops[0], ops[1])};
      case BvOp::kUlt:
        return {UltBits(ops[0], ops[1])};
      case BvOp::kUle:
        return {-UltBits(ops[1], ops[0])};
      case BvOp::kRedAnd:
        return {AndReduce(ops[0])};
      case BvOp::kRedOr:
        return {OrReduce(ops[0])};
      case BvOp::kRedXor: {
        int acc = -kTrueLit;
        for (int b : ops[0]) acc = Xor(acc, b);
        return {acc};
      }
      case BvOp::kIte:
        return MuxBits(ops[0][0], ops[1], ops[2]);
      case BvOp::kExtract:
        return std::vector<int>(ops[0].begin() + n.lo,
                                ops[0].begin() + n.hi + 1);
      case BvOp::kZeroExt: {
        std::vector<int> out = ops[0];
        out.resize(n.width, -kTrueLit);
        return out;
      }
      case BvOp::kConcat: {
        // Operands are high part first; the result is assembled LSB up.
        std::vector<int> out;
        for (size_t i = ops.size(); i-- > 0;) {
          out.insert(out.end(), ops[i].begin(), ops[i].end());
        }
        return out;
      }
    }
    throw Diag(StatusCode::kInternalError, "unhandled operator in bitblast");
  }

  const NodeTable& t_;
  Cnf cnf_;
  std::unordered_map<NodeId, std::vector<int>> bits_;
};

}  // namespace

Cnf Bitblast(const NodeTable& table, std::span<const NodeId> constraints) {
  return Blaster(table).Run(constraints);
}

}  // namespace rtlsym
