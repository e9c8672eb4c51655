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

#ifndef RTLSYM_SYM_OPS_H_
#define RTLSYM_SYM_OPS_H_

namespace rtlsym {

// Bitvector operator set shared by the expression DAG and the lowered
// statement IR. Binary operators require equal operand widths; the
// elaborator inserts explicit kZeroExt/kExtract nodes to meet that.
enum class BvOp {
  kAdd,
  kSub,
  kMul,
  kUdiv,  // division by zero yields all-zeros
  kUrem,  // remainder by zero yields all-zeros
  kAnd,
  kOr,
  kXor,
  kNot,
  kShl,   // logical; amount >= width yields zero
  kLshr,
  kEq,    // width-1 result
  kUlt,   // width-1 result
  kUle,   // width-1 result
  kRedAnd,
  kRedOr,
  kRedXor,
  kIte,      // operands: cond (width 1), then, else
  kExtract,  // params hi, lo
  kConcat,   // high part first; result width = sum of operand widths
  kZeroExt,  // result width carried by the node
};

const char* BvOpName(BvOp op);

}  // namespace rtlsym

#endif  // RTLSYM_SYM_OPS_H_
