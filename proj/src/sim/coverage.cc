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

#include "sim/coverage.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "support/diag.h"

namespace rtlsym {
namespace {

[[noreturn]] void Fail(const std::string& file, int line,
                       const std::string& msg) {
  throw Diag(StatusCode::kFormatError, file, SourceLoc{line, 1}, msg);
}

// Half-up percentage with one decimal, as integer tenths. A total of
// zero counts as fully covered: there is nothing left uncovered.
int64_t PctTenths(int64_t covered, int64_t total) {
  if (total == 0) return 1000;
  return (1000 * covered + total / 2) / total;
}

int64_t ParseInt(const std::string& file, int line, const std::string& text) {
  BitVal v;
  if (!bv::ParseDec(text, &v) || !v.FitsU64() || v.lo > uint64_t{1} << 62) {
    Fail(file, line, "expected an integer, found '" + text + "'");
  }
  return static_cast<int64_t>(v.lo);
}

int64_t KeyedInt(const std::string& file, int line, const std::string& field,
                 const std::string& key) {
  std::string prefix = key + "=";
  if (field.rfind(prefix, 0) != 0) {
    Fail(file, line, "expected '" + key + "=<n>', found '" + field + "'");
  }
  return ParseInt(file, line, field.substr(prefix.size()));
}

}  // namespace

CoverageData EmptyCoverage(const ir::RtlDesign& design) {
  CoverageData cov;
  cov.design = design.name;
  cov.stmt_hits.assign(design.stmt_table.size(), 0);
  cov.branch_hits.resize(design.branch_table.size());
  for (size_t b = 0; b < design.branch_table.size(); ++b) {
    cov.branch_hits[b].assign(design.branch_table[b].arm_count, 0);
  }
  return cov;
}

CoverageData Merge(const CoverageData& a, const CoverageData& b) {
  bool same_shape = a.design == b.design &&
                    a.stmt_hits.size() == b.stmt_hits.size() &&
                    a.branch_hits.size() == b.branch_hits.size();
  if (same_shape) {
    for (size_t i = 0; i < a.branch_hits.size(); ++i) {
      same_shape = same_shape &&
                   a.branch_hits[i].size() == b.branch_hits[i].size();
    }
  }
  if (!same_shape) {
    throw Diag(StatusCode::kFormatError,
               "cannot merge coverage from different designs ('" + a.design +
                   "' vs '" + b.design + "')");
  }
  CoverageData out = a;
  for (size_t i = 0; i < out.stmt_hits.size(); ++i) {
    out.stmt_hits[i] += b.stmt_hits[i];
  }
  for (size_t i = 0; i < out.branch_hits.size(); ++i) {
    for (size_t k = 0; k < out.branch_hits[i].size(); ++k) {
      out.branch_hits[i][k] += b.branch_hits[i][k];
    }
  }
  return out;
}

CoverageReport Report(const ir::RtlDesign& design, const CoverageData& cov) {
  CoverageReport rep;
  rep.stmt_total = static_cast<int64_t>(design.stmt_table.size());
  rep.branch_total = 0;

  // (line, col, row text) so rows sort by source position.
  std::vector<std::tuple<int, int, std::string>> rows;
  auto row = [&](SourceLoc loc, const std::string& kind) {
    rows.emplace_back(loc.line, loc.col,
                      design.source_file + ":" + std::to_string(loc.line) +
                          ":" + std::to_string(loc.col) + " kind=" + kind +
                          " hits=0");
  };

  for (size_t i = 0; i < design.stmt_table.size(); ++i) {
    if (i < cov.stmt_hits.size() && cov.stmt_hits[i] > 0) {
      ++rep.stmt_covered;
    } else {
      row(design.stmt_table[i].loc, "stmt");
    }
  }
  for (size_t b = 0; b < design.branch_table.size(); ++b) {
    for (int k = 0; k < design.branch_table[b].arm_count; ++k) {
      ++rep.branch_total;
      bool hit = b < cov.branch_hits.size() &&
                 k < static_cast<int>(cov.branch_hits[b].size()) &&
                 cov.branch_hits[b][k] > 0;
      if (hit) {
        ++rep.branch_covered;
      } else {
        row(design.branch_table[b].loc, "branch-" + std::to_string(k));
      }
    }
  }

  rep.stmt_pct_tenths = PctTenths(rep.stmt_covered, rep.stmt_total);
  rep.branch_pct_tenths = PctTenths(rep.branch_covered, rep.branch_total);

  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) {
                     return std::tie(std::get<0>(a), std::get<1>(a)) <
                            std::tie(std::get<0>(b), std::get<1>(b));
                   });
  for (auto& r : rows) rep.uncovered.push_back(std::move(std::get<2>(r)));
  return rep;
}

std::string FormatPct(int64_t tenths) {
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

std::string RenderReport(const CoverageReport& report,
                         const std::string& design_name) {
  std::string out;
  out += "coverage report for " + design_name + "\n";
  out += "  statements: " + std::to_string(report.stmt_covered) + "/" +
         std::to_string(report.stmt_total) + " (" +
         FormatPct(report.stmt_pct_tenths) + "%)\n";
  out += "  branches:   " + std::to_string(report.branch_covered) + "/" +
         std::to_string(report.branch_total) + " (" +
         FormatPct(report.branch_pct_tenths) + "%)\n";
  if (!report.uncovered.empty()) {
    out += "uncovered:\n";
    for (const std::string& r : report.uncovered) out += "  " + r + "\n";
  }
  return out;
}

std::string FormatReport(const CoverageReport& report,
                         const std::string& design_name) {
  std::string out;
  out += "design=" + design_name + "\n";
  out += "stmt_covered=" + std::to_string(report.stmt_covered) + "\n";
  out += "stmt_total=" + std::to_string(report.stmt_total) + "\n";
  out += "stmt_pct=" + FormatPct(report.stmt_pct_tenths) + "\n";
  out += "branch_covered=" + std::to_string(report.branch_covered) + "\n";
  out += "branch_total=" + std::to_string(report.branch_total) + "\n";
  out += "branch_pct=" + FormatPct(report.branch_pct_tenths) + "\n";
  for (const std::string& r : report.uncovered) out += r + "\n";
  return out;
}

std::string FormatCoverage(const CoverageData& cov) {
  std::string out = "coverage " + cov.design +
                    " stmts=" + std::to_string(cov.stmt_hits.size()) +
                    " branches=" + std::to_string(cov.branch_hits.size()) +
                    "\n";
  for (size_t i = 0; i < cov.stmt_hits.size(); ++i) {
    out += "stmt " + std::to_string(i) +
           " hits=" + std::to_string(cov.stmt_hits[i]) + "\n";
  }
  for (size_t b = 0; b < cov.branch_hits.size(); ++b) {
    for (size_t k = 0; k < cov.branch_hits[b].size(); ++k) {
      out += "branch " + std::to_string(b) + " arm " + std::to_string(k) +
             " hits=" + std::to_string(cov.branch_hits[b][k]) + "\n";
    }
  }
  return out;
}

CoverageData ParseCoverage(const std::string& text,
                           const std::string& filename) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  CoverageData cov;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::vector<std::string> f;
    std::string field;
    while (fields >> field) f.push_back(field);
    if (f.empty()) continue;

    if (!saw_header) {
      if (f.size() != 4 || f[0] != "coverage") {
        Fail(filename, lineno,
             "expected 'coverage <design> stmts=<n> branches=<m>' header");
      }
      cov.design = f[1];
      cov.stmt_hits.assign(KeyedInt(filename, lineno, f[2], "stmts"), 0);
      cov.branch_hits.resize(KeyedInt(filename, lineno, f[3], "branches"));
      saw_header = true;
    } else if (f[0] == "stmt" && f.size() == 3) {
      int64_t id = ParseInt(filename, lineno, f[1]);
      if (id < 0 || id >= static_cast<int64_t>(cov.stmt_hits.size())) {
        Fail(filename, lineno, "statement id out of range");
      }
      cov.stmt_hits[id] = KeyedInt(filename, lineno, f[2], "hits");
    } else if (f[0] == "branch" && f.size() == 5 && f[2] == "arm") {
      int64_t id = ParseInt(filename, lineno, f[1]);
      if (id < 0 || id >= static_cast<int64_t>(cov.branch_hits.size())) {
        Fail(filename, lineno, "branch id out of range");
      }
      int64_t arm = ParseInt(filename, lineno, f[3]);
      auto& arms = cov.branch_hits[id];
      if (arm >= static_cast<int64_t>(arms.size())) {
        arms.resize(arm + 1, 0);
      }
      arms[arm] = KeyedInt(filename, lineno, f[4], "hits");
    } else {
      Fail(filename, lineno, "unrecognized coverage line '" + line + "'");
    }
  }
  if (!saw_header) Fail(filename, lineno, "empty coverage file");
  return cov;
}

CoverageData LoadCoverage(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Diag(StatusCode::kIoError, "cannot open '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseCoverage(buffer.str(), path);
}

}  // namespace rtlsym
