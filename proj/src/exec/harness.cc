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

#include "exec/harness.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "support/diag.h"

namespace rtlsym {
namespace {

[[noreturn]] void Fail(const std::string& file, int line,
                       const std::string& msg) {
  throw Diag(StatusCode::kHarnessError, file, SourceLoc{line, 1}, msg);
}

std::vector<std::string> SplitFields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string field;
  while (in >> field) {
    if (field[0] == '#') break;
    out.push_back(field);
  }
  return out;
}

// Parses `key=value` into value, or fails.
std::string KeyedValue(const std::string& file, int line,
                       const std::string& field, const std::string& key) {
  std::string prefix = key + "=";
  if (field.rfind(prefix, 0) != 0 || field.size() == prefix.size()) {
    Fail(file, line, "expected '" + key + "=<value>', found '" + field + "'");
  }
  return field.substr(prefix.size());
}

int64_t ParseCount(const std::string& file, int line,
                   const std::string& text) {
  BitVal v;
  if (!bv::ParseDec(text, &v) || !v.FitsU64() ||
      v.lo > uint64_t{1} << 62) {
    Fail(file, line, "expected a non-negative integer, found '" + text + "'");
  }
  return static_cast<int64_t>(v.lo);
}

BitVal ParseValue(const std::string& file, int line, const std::string& text) {
  BitVal v;
  bool ok = text.rfind("0x", 0) == 0 ? bv::ParseHex(text.substr(2), &v)
                                     : bv::ParseDec(text, &v);
  if (!ok) Fail(file, line, "expected a value, found '" + text + "'");
  return v;
}

}  // namespace

Harness ParseHarness(const std::string& text, const std::string& filename) {
  Harness h;
  h.max_cycles = 0;  // sentinel: required entry not yet seen
  std::set<std::string> seen;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> f = SplitFields(line);
    if (f.empty()) continue;
    const std::string& key = f[0];

    auto require_args = [&](size_t n) {
      if (f.size() != n + 1) {
        Fail(filename, lineno,
             "'" + key + "' takes " + std::to_string(n) + " argument" +
                 (n == 1 ? "" : "s"));
      }
    };
    auto require_once = [&] {
      if (!seen.insert(key).second) {
        Fail(filename, lineno, "duplicate '" + key + "' entry");
      }
    };

    if (key == "top") {
      require_args(1);
      require_once();
      h.top = f[1];
    } else if (key == "max_cycles") {
      require_args(1);
      require_once();
      int64_t n = ParseCount(filename, lineno, f[1]);
      if (n < 1) Fail(filename, lineno, "max_cycles must be at least 1");
      h.max_cycles = static_cast<int>(n);
    } else if (key == "clock") {
      require_args(1);
      require_once();
      h.clock = f[1];
    } else if (key == "reset") {
      require_args(3);
      require_once();
      ResetSpec r;
      r.signal = f[1];
      int64_t active =
          ParseCount(filename, lineno, KeyedValue(filename, lineno, f[2],
                                                  "active"));
      if (active > 1) Fail(filename, lineno, "reset active level must be 0 or 1");
      r.active_level = static_cast<int>(active);
      int64_t hold = ParseCount(filename, lineno,
                                KeyedValue(filename, lineno, f[3], "hold"));
      if (hold < 1) Fail(filename, lineno, "reset hold must be at least 1");
      r.hold_cycles = static_cast<int>(hold);
      h.reset = r;
    } else if (key == "symbolic") {
      if (f.size() != 3 && f.size() != 4) {
        Fail(filename, lineno,
             "expected 'symbolic <signal> bits=<n> [mode=...]'");
      }
      SymbolicInput s;
      s.signal = f[1];
      int64_t bits = ParseCount(filename, lineno,
                                KeyedValue(filename, lineno, f[2], "bits"));
      if (bits < 1 || bits > kMaxWidth) {
        Fail(filename, lineno, "bits must be between 1 and 128");
      }
      s.bits = static_cast<int>(bits);
      if (f.size() == 4) {
        std::string mode = KeyedValue(filename, lineno, f[3], "mode");
        if (mode == "hold") {
          s.mode = InputMode::kHold;
        } else if (mode == "fresh_per_cycle") {
          s.mode = InputMode::kFreshPerCycle;
        } else {
          Fail(filename, lineno,
               "mode must be 'hold' or 'fresh_per_cycle', found '" + mode +
                   "'");
        }
      }
      h.symbolic_inputs.push_back(std::move(s));
    } else if (key == "fixed") {
      require_args(2);
      h.fixed_inputs.push_back(
          FixedInput{f[1], ParseValue(filename, lineno, f[2])});
    } else if (key == "max_paths" || key == "max_solver_calls" ||
               key == "wall_clock_ms") {
      require_args(1);
      require_once();
      int64_t n = ParseCount(filename, lineno, f[1]);
      if (key == "max_paths") h.budgets.max_paths = n;
      if (key == "max_solver_calls") h.budgets.max_solver_calls = n;
      if (key == "wall_clock_ms") h.budgets.wall_clock_ms = n;
    } else {
      Fail(filename, lineno, "unknown harness entry '" + key + "'");
    }
  }

  if (h.top.empty()) Fail(filename, lineno, "missing required 'top' entry");
  if (h.max_cycles == 0) {
    Fail(filename, lineno, "missing required 'max_cycles' entry");
  }
  return h;
}

Harness LoadHarness(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Diag(StatusCode::kIoError, "cannot open '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseHarness(buffer.str(), path);
}

void ValidateHarness(const Harness& harness, const ir::RtlDesign& design) {
  auto fail = [](const std::string& msg) {
    throw Diag(StatusCode::kHarnessError, msg);
  };

  if (harness.top != design.name) {
    fail("harness targets module '" + harness.top + "' but the design is '" +
         design.name + "'");
  }

  // Resolves a harness-named signal, requiring an input port.
  auto input_index = [&](const std::string& name, const char* role) {
    int idx = design.FindSignal(name);
    if (idx < 0) fail(std::string("unknown signal '") + name + "'");
    const ir::Signal& sig = design.signals[idx];
    if (sig.kind != ir::Signal::Kind::kInput) {
      fail("signal '" + name + "' named as " + role + " is not an input");
    }
    return idx;
  };

  // Every input must be driven by exactly one harness role.
  std::map<int, std::string> driven;
  auto claim = [&](int idx, const std::string& role) {
    auto [it, fresh] = driven.emplace(idx, role);
    if (!fresh) {
      fail("input '" + design.signals[idx].name + "' is covered twice (as " +
           it->second + " and as " + role + ")");
    }
  };

  if (!harness.clock.empty()) {
    int idx = input_index(harness.clock, "the clock");
    if (design.signals[idx].width != 1) {
      fail("clock '" + harness.clock + "' must be 1 bit wide");
    }
    claim(idx, "clock");
  }
  if (harness.reset.has_value()) {
    int idx = input_index(harness.reset->signal, "the reset");
    if (design.signals[idx].width != 1) {
      fail("reset '" + harness.reset->signal + "' must be 1 bit wide");
    }
    claim(idx, "reset");
  }
  for (const SymbolicInput& s : harness.symbolic_inputs) {
    int idx = input_index(s.signal, "a symbolic input");
    if (s.bits != design.signals[idx].width) {
      fail("width mismatch: '" + s.signal + "' declared " +
           std::to_string(design.signals[idx].width) + ", harness says " +
           std::to_string(s.bits));
    }
    claim(idx, "symbolic");
  }
  for (const FixedInput& fi : harness.fixed_inputs) {
    int idx = input_index(fi.signal, "a fixed input");
    if (!bv::Fits(fi.value, design.signals[idx].width)) {
      fail("value " + bv::ToDec(fi.value) + " does not fit the " +
           std::to_string(design.signals[idx].width) + "-bit signal '" +
           fi.signal + "'");
    }
    claim(idx, "fixed");
  }

  for (size_t i = 0; i < design.signals.size(); ++i) {
    if (design.signals[i].kind != ir::Signal::Kind::kInput) continue;
    if (driven.find(static_cast<int>(i)) == driven.end()) {
      fail("input '" + design.signals[i].name +
           "' is not covered by the harness");
    }
  }
}

}  // namespace rtlsym
