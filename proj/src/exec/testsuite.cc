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

#include "exec/testsuite.h"

#include <sys/resource.h>

#include <fstream>
#include <sstream>

#include "support/diag.h"

namespace rtlsym {
namespace {

[[noreturn]] void Fail(const std::string& file, int line,
                       const std::string& msg) {
  throw Diag(StatusCode::kFormatError, file, SourceLoc{line, 1}, msg);
}

std::vector<std::string> SplitFields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string field;
  while (in >> field) out.push_back(field);
  return out;
}

int64_t ParseInt(const std::string& file, int line, const std::string& text) {
  BitVal v;
  if (!bv::ParseDec(text, &v) || !v.FitsU64() || v.lo > uint64_t{1} << 62) {
    Fail(file, line, "expected an integer, found '" + text + "'");
  }
  return static_cast<int64_t>(v.lo);
}

}  // namespace

std::string FormatTestSuite(const TestSuite& suite,
                            const ir::RtlDesign& design) {
  std::string out = "testsuite " + suite.design +
                    " tests=" + std::to_string(suite.tests.size()) + "\n";
  for (const TestCase& test : suite.tests) {
    out += "test " + std::to_string(test.id) + "\n";
    for (size_t k = 0; k < test.vectors.size(); ++k) {
      out += "cycle " + std::to_string(k) + ":";
      for (const auto& [name, value] : test.vectors[k]) {
        int idx = design.FindSignal(name);
        int width = idx >= 0 ? design.signals[idx].width : kMaxWidth;
        out += " " + name + "=0x" + bv::ToHex(value, width);
      }
      out += "\n";
    }
    out += "end\n";
  }
  return out;
}

TestSuite ParseTestSuite(const std::string& text,
                         const std::string& filename) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_fields = [&](std::vector<std::string>* out) {
    while (std::getline(in, line)) {
      ++lineno;
      *out = SplitFields(line);
      if (!out->empty()) return true;
    }
    return false;
  };

  TestSuite suite;
  std::vector<std::string> f;
  if (!next_fields(&f) || f.size() != 3 || f[0] != "testsuite" ||
      f[2].rfind("tests=", 0) != 0) {
    Fail(filename, lineno, "expected 'testsuite <design> tests=<n>' header");
  }
  suite.design = f[1];
  int64_t declared = ParseInt(filename, lineno, f[2].substr(6));

  while (next_fields(&f)) {
    if (f.size() != 2 || f[0] != "test") {
      Fail(filename, lineno, "expected 'test <id>', found '" + line + "'");
    }
    TestCase test;
    test.id = static_cast<int>(ParseInt(filename, lineno, f[1]));

    for (;;) {
      if (!next_fields(&f)) {
        Fail(filename, lineno, "unterminated test (missing 'end')");
      }
      if (f[0] == "end") {
        if (f.size() != 1) Fail(filename, lineno, "'end' takes no arguments");
        break;
      }
      if (f.size() < 2 || f[0] != "cycle" || f[1].back() != ':') {
        Fail(filename, lineno, "expected 'cycle <k>: <sig>=0x<hex> ...'");
      }
      int64_t k = ParseInt(filename, lineno,
                           f[1].substr(0, f[1].size() - 1));
      if (k != static_cast<int64_t>(test.vectors.size())) {
        Fail(filename, lineno,
             "cycle " + std::to_string(test.vectors.size()) +
                 " expected, found cycle " + std::to_string(k));
      }
      std::vector<std::pair<std::string, BitVal>> vec;
      for (size_t i = 2; i < f.size(); ++i) {
        size_t eq = f[i].find('=');
        if (eq == std::string::npos || eq == 0 ||
            f[i].compare(eq + 1, 2, "0x") != 0) {
          Fail(filename, lineno,
               "expected '<sig>=0x<hex>', found '" + f[i] + "'");
        }
        BitVal value;
        if (!bv::ParseHex(f[i].substr(eq + 3), &value)) {
          Fail(filename, lineno, "bad hex value in '" + f[i] + "'");
        }
        vec.emplace_back(f[i].substr(0, eq), value);
      }
      test.vectors.push_back(std::move(vec));
    }
    suite.tests.push_back(std::move(test));
  }

  if (declared != static_cast<int64_t>(suite.tests.size())) {
    Fail(filename, lineno,
         "header declares " + std::to_string(declared) + " tests, found " +
             std::to_string(suite.tests.size()));
  }
  return suite;
}

TestSuite LoadTestSuite(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Diag(StatusCode::kIoError, "cannot open '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseTestSuite(buffer.str(), path);
}

std::string FormatStats(const ExplorationStats& stats) {
  std::string out;
  out += "tests=" + std::to_string(stats.tests) + "\n";
  out += "vectors=" + std::to_string(stats.vectors) + "\n";
  out += "paths_completed=" + std::to_string(stats.paths_completed) + "\n";
  out += "paths_killed=" + std::to_string(stats.paths_killed) + "\n";
  out += "solver_calls=" + std::to_string(stats.solver_calls) + "\n";
  out += "budget_exhausted=" +
         (stats.budget_exhausted.empty() ? "none" : stats.budget_exhausted) +
         "\n";
  out += "wall_clock_ms=" + std::to_string(stats.wall_clock_ms) + "\n";
  out += "peak_memory_kb=" + std::to_string(stats.peak_memory_kb) + "\n";
  return out;
}

int64_t PeakMemoryKb() {
  struct rusage usage;
  if (getrusage(RUSAGE_SELF, &usage) != 0) return -1;
  return static_cast<int64_t>(usage.ru_maxrss);  // kilobytes on Linux
}

}  // namespace rtlsym
