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

#ifndef RTLSYM_SIM_COVERAGE_H_
#define RTLSYM_SIM_COVERAGE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "elab/design.h"

namespace rtlsym {

// Execution counters over one design's statement and branch tables.
// stmt_hits is indexed by statement id; branch_hits[b][k] counts how often
// branch b took arm k.
struct CoverageData {
  std::string design;
  std::vector<int64_t> stmt_hits;
  std::vector<std::vector<int64_t>> branch_hits;
};

// Zeroed counters shaped after the design's tables.
CoverageData EmptyCoverage(const ir::RtlDesign& design);

// Pointwise sum. Throws Diag(kFormatError) when the two operands do not
// share one design's table shape.
CoverageData Merge(const CoverageData& a, const CoverageData& b);

struct CoverageReport {
  int64_t stmt_covered = 0;
  int64_t stmt_total = 0;
  int64_t stmt_pct_tenths = 0;  // percentage scaled by 10, half-up
  int64_t branch_covered = 0;
  int64_t branch_total = 0;
  int64_t branch_pct_tenths = 0;
  // `file:line:col kind=stmt|branch-arm hits=0`, sorted by (line, col).
  std::vector<std::string> uncovered;
};

CoverageReport Report(const ir::RtlDesign& design, const CoverageData& cov);

// "98.4" for 984 tenths.
std::string FormatPct(int64_t tenths);

// Human-readable summary table.
std::string RenderReport(const CoverageReport& report,
                         const std::string& design_name);
// Machine-readable form: `key=value` lines plus the uncovered rows.
std::string FormatReport(const CoverageReport& report,
                         const std::string& design_name);

// Counter file format:
//   coverage <design> stmts=<n> branches=<m>
//   stmt <id> hits=<n>
//   branch <id> arm <k> hits=<n>
std::string FormatCoverage(const CoverageData& cov);
// Throws Diag(kFormatError) on malformed text.
CoverageData ParseCoverage(const std::string& text,
                           const std::string& filename);
CoverageData LoadCoverage(const std::string& path);

}  // namespace rtlsym

#endif  // RTLSYM_SIM_COVERAGE_H_
