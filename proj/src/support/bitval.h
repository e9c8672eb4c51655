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

#ifndef RTLSYM_SUPPORT_BITVAL_H_
#define RTLSYM_SUPPORT_BITVAL_H_

#include <cstdint>
#include <string>

namespace rtlsym {

inline constexpr int kMaxWidth = 128;

// Unsigned bitvector value of up to 128 bits, stored as two 64-bit words.
// All arithmetic is modular on an explicit width; callers pass the width so
// semantics do not depend on the host integer size. Bits above the active
// width are kept zero by every operation.
struct BitVal {
  uint64_t lo = 0;
  uint64_t hi = 0;

  constexpr BitVal() = default;
  constexpr BitVal(uint64_t low, uint64_t high) : lo(low), hi(high) {}

  static constexpr BitVal FromU64(uint64_t v) { return BitVal(v, 0); }
  static BitVal Ones(int width);

  bool operator==(const BitVal&) const = default;
  bool IsZero() const { return lo == 0 && hi == 0; }
  // Value as a host integer; only meaningful when it fits 64 bits.
  uint64_t AsU64() const { return lo; }
  bool FitsU64() const { return hi == 0; }

  bool Bit(int i) const {
    return i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1;
  }
};

namespace bv {

// Keeps the low `width` bits, clearing the rest.
BitVal Mask(BitVal v, int width);
bool Fits(BitVal v, int width);

BitVal Add(BitVal a, BitVal b, int width);
BitVal Sub(BitVal a, BitVal b, int width);
BitVal Mul(BitVal a, BitVal b, int width);
// Division and remainder are total: a zero divisor yields an all-zeros
// result for both.
BitVal Udiv(BitVal a, BitVal b, int width);
BitVal Urem(BitVal a, BitVal b, int width);

BitVal And(BitVal a, BitVal b);
BitVal Or(BitVal a, BitVal b);
BitVal Xor(BitVal a, BitVal b);
BitVal Not(BitVal a, int width);

// Logical shifts; amounts >= width produce zero.
BitVal Shl(BitVal a, BitVal amount, int width);
BitVal Lshr(BitVal a, BitVal amount, int width);

bool Eq(BitVal a, BitVal b);
bool Ult(BitVal a, BitVal b);
bool Ule(BitVal a, BitVal b);

bool RedAnd(BitVal v, int width);
bool RedOr(BitVal v);
bool RedXor(BitVal v);

// Bits hi..lo inclusive, right-aligned.
BitVal Extract(BitVal v, int hi, int lo);
// {high_part, low_part}; combined width must stay within kMaxWidth.
BitVal Concat(BitVal high_part, BitVal low_part, int low_width);

// Total order on the raw 128-bit value, for use as a map key.
int CompareU(BitVal a, BitVal b);

// Lowercase hex, zero-padded to ceil(width/4) digits, no prefix.
std::string ToHex(BitVal v, int width);
std::string ToDec(BitVal v);

// Parsers return false on bad characters or overflow past 128 bits.
// Underscores are accepted as digit separators.
bool ParseDec(const std::string& text, BitVal* out);
bool ParseHex(const std::string& text, BitVal* out);
bool ParseBin(const std::string& text, BitVal* out);

}  // namespace bv
}  // namespace rtlsym

#endif  // RTLSYM_SUPPORT_BITVAL_H_
