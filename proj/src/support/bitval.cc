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

#include "support/bitval.h"

#include <algorithm>
#include <cassert>

namespace rtlsym {

BitVal BitVal::Ones(int width) {
  return bv::Mask(BitVal(~0ull, ~0ull), width);
}

namespace bv {

namespace {

// 64x64 -> 128 multiply via 32-bit limbs.
void Mul64Wide(uint64_t a, uint64_t b, uint64_t* out_lo, uint64_t* out_hi) {
  const uint64_t a_lo = a & 0xffffffffull, a_hi = a >> 32;
  const uint64_t b_lo = b & 0xffffffffull, b_hi = b >> 32;
  const uint64_t p0 = a_lo * b_lo;
  const uint64_t p1 = a_lo * b_hi;
  const uint64_t p2 = a_hi * b_lo;
  const uint64_t p3 = a_hi * b_hi;
  const uint64_t mid = (p0 >> 32) + (p1 & 0xffffffffull) + (p2 & 0xffffffffull);
  *out_lo = (p0 & 0xffffffffull) | (mid << 32);
  *out_hi = p3 + (p1 >> 32) + (p2 >> 32) + (mid >> 32);
}

BitVal Shl1(BitVal v) {
  return BitVal(v.lo << 1, (v.hi << 1) | (v.lo >> 63));
}

BitVal SetBit(BitVal v, int i) {
  if (i < 64) {
    v.lo |= 1ull << i;
  } else {
    v.hi |= 1ull << (i - 64);
  }
  return v;
}

}  // namespace

BitVal Mask(BitVal v, int width) {
  assert(width >= 1 && width <= kMaxWidth);
  if (width >= 128) return v;
  if (width >= 64) {
    if (width == 64) {
      v.hi = 0;
    } else {
      v.hi &= (1ull << (width - 64)) - 1;
    }
  } else {
    v.lo &= (1ull << width) - 1;
    v.hi = 0;
  }
  return v;
}

bool Fits(BitVal v, int width) { return Mask(v, width) == v; }

BitVal Add(BitVal a, BitVal b, int width) {
  BitVal r;
  r.lo = a.lo + b.lo;
  r.hi = a.hi + b.hi + (r.lo < a.lo ? 1 : 0);
  return Mask(r, width);
}

BitVal Sub(BitVal a, BitVal b, int width) {
  BitVal r;
  r.lo = a.lo - b.lo;
  r.hi = a.hi - b.hi - (a.lo < b.lo ? 1 : 0);
  return Mask(r, width);
}

BitVal Mul(BitVal a, BitVal b, int width) {
  // Low 128 bits of the product: a.lo*b.lo (wide) plus the cross terms
  // shifted into the high word.
  BitVal r;
  Mul64Wide(a.lo, b.lo, &r.lo, &r.hi);
  r.hi += a.lo * b.hi + a.hi * b.lo;
  return Mask(r, width);
}

BitVal Udiv(BitVal a, BitVal b, int width) {
  if (b.IsZero()) return BitVal();
  BitVal quot, rem;
  for (int i = 127; i >= 0; --i) {
    rem = Shl1(rem);
    if (a.Bit(i)) rem.lo |= 1;
    if (Ule(b, rem)) {
      rem = Sub(rem, b, 128);
      quot = SetBit(quot, i);
    }
  }
  return Mask(quot, width);
}

BitVal Urem(BitVal a, BitVal b, int width) {
  if (b.IsZero()) return BitVal();
  BitVal rem;
  for (int i = 127; i >= 0; --i) {
    rem = Shl1(rem);
    if (a.Bit(i)) rem.lo |= 1;
    if (Ule(b, rem)) rem = Sub(rem, b, 128);
  }
  return Mask(rem, width);
}

BitVal And(BitVal a, BitVal b) { return BitVal(a.lo & b.lo, a.hi & b.hi); }
BitVal Or(BitVal a, BitVal b) { return BitVal(a.lo | b.lo, a.hi | b.hi); }
BitVal Xor(BitVal a, BitVal b) { return BitVal(a.lo ^ b.lo, a.hi ^ b.hi); }

BitVal Not(BitVal a, int width) {
  return Mask(BitVal(~a.lo, ~a.hi), width);
}

BitVal Shl(BitVal a, BitVal amount, int width) {
  if (amount.hi != 0 || amount.lo >= static_cast<uint64_t>(width)) {
    return BitVal();
  }
  const int n = static_cast<int>(amount.lo);
  BitVal r;
  if (n == 0) {
    r = a;
  } else if (n < 64) {
    r.lo = a.lo << n;
    r.hi = (a.hi << n) | (a.lo >> (64 - n));
  } else {
    r.lo = 0;
    r.hi = a.lo << (n - 64);
  }
  return Mask(r, width);
}

BitVal Lshr(BitVal a, BitVal amount, int width) {
  if (amount.hi != 0 || amount.lo >= static_cast<uint64_t>(width)) {
    return BitVal();
  }
  const int n = static_cast<int>(amount.lo);
  BitVal r;
  if (n == 0) {
    r = a;
  } else if (n < 64) {
    r.lo = (a.lo >> n) | (a.hi << (64 - n));
    r.hi = a.hi >> n;
  } else {
    r.lo = a.hi >> (n - 64);
    r.hi = 0;
  }
  return r;
}

bool Eq(BitVal a, BitVal b) { return a == b; }

bool Ult(BitVal a, BitVal b) {
  if (a.hi != b.hi) return a.hi < b.hi;
  return a.lo < b.lo;
}

bool Ule(BitVal a, BitVal b) { return !Ult(b, a); }

bool RedAnd(BitVal v, int width) { return v == BitVal::Ones(width); }
bool RedOr(BitVal v) { return !v.IsZero(); }

bool RedXor(BitVal v) {
  uint64_t x = v.lo ^ v.hi;
  x ^= x >> 32;
  x ^= x >> 16;
  x ^= x >> 8;
  x ^= x >> 4;
  x ^= x >> 2;
  x ^= x >> 1;
  return x & 1;
}

BitVal Extract(BitVal v, int hi, int lo) {
  assert(hi >= lo && hi < kMaxWidth);
  return Mask(Lshr(v, BitVal::FromU64(static_cast<uint64_t>(lo)), 128),
              hi - lo + 1);
}

BitVal Concat(BitVal high_part, BitVal low_part, int low_width) {
  BitVal shifted =
      Shl(high_part, BitVal::FromU64(static_cast<uint64_t>(low_width)), 128);
  return Or(shifted, low_part);
}

int CompareU(BitVal a, BitVal b) {
  if (Ult(a, b)) return -1;
  if (Ult(b, a)) return 1;
  return 0;
}

std::string ToHex(BitVal v, int width) {
  static const char* kDigits = "0123456789abcdef";
  const int digits = (width + 3) / 4;
  std::string s(digits, '0');
  for (int i = 0; i < digits; ++i) {
    const int nibble_index = digits - 1 - i;
    const uint64_t word = nibble_index < 16 ? v.lo : v.hi;
    const int shift = (nibble_index % 16) * 4;
    s[i] = kDigits[(word >> shift) & 0xf];
  }
  return s;
}

std::string ToDec(BitVal v) {
  if (v.IsZero()) return "0";
  std::string s;
  const BitVal ten = BitVal::FromU64(10);
  while (!v.IsZero()) {
    BitVal digit = Urem(v, ten, 128);
    s.push_back(static_cast<char>('0' + digit.lo));
    v = Udiv(v, ten, 128);
  }
  std::reverse(s.begin(), s.end());
  return s;
}

namespace {

bool AccumulateDigit(BitVal* acc, int base, int digit) {
  // Overflow check: acc*base + digit must stay within 128 bits.
  BitVal base_v = BitVal::FromU64(static_cast<uint64_t>(base));
  BitVal next = Mul(*acc, base_v, 128);
  if (!Eq(Udiv(next, base_v, 128), *acc)) return false;
  BitVal with_digit = Add(next, BitVal::FromU64(static_cast<uint64_t>(digit)), 128);
  if (Ult(with_digit, next)) return false;
  *acc = with_digit;
  return true;
}

int HexDigit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

bool ParseBase(const std::string& text, int base, BitVal* out) {
  if (text.empty()) return false;
  BitVal acc;
  bool any = false;
  for (char c : text) {
    if (c == '_') continue;
    const int d = HexDigit(c);
    if (d < 0 || d >= base) return false;
    if (!AccumulateDigit(&acc, base, d)) return false;
    any = true;
  }
  if (!any) return false;
  *out = acc;
  return true;
}

}  // namespace

bool ParseDec(const std::string& text, BitVal* out) {
  return ParseBase(text, 10, out);
}
bool ParseHex(const std::string& text, BitVal* out) {
  return ParseBase(text, 16, out);
}
bool ParseBin(const std::string& text, BitVal* out) {
  return ParseBase(text, 2, out);
}

}  // namespace bv
}  // namespace rtlsym
