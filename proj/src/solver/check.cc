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

#include "solver/check.h"

#include <sys/wait.h>

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "solver/bitblast.h"
#include "solver/sat.h"
#include "support/diag.h"
#include "sym/smtlib.h"

namespace rtlsym {
namespace {

void VerifyModel(const NodeTable& t, std::span<const NodeId> constraints,
                 const Assignment& model, const char* backend) {
  for (NodeId c : constraints) {
    if (t.Eval(c, model) == BitVal::FromU64(1)) continue;
    throw Diag(StatusCode::kSolverError,
               std::string(backend) +
                   " solver produced a model that does not satisfy the "
                   "constraints");
  }
}

CheckResult CheckBuiltin(const NodeTable& t, std::span<const NodeId> constraints,
                         const SolverConfig& config) {
  Cnf cnf = Bitblast(t, constraints);
  SatBudget budget;
  budget.max_conflicts = config.max_conflicts;
  budget.timeout_ms = config.timeout_ms;
  SatResult sat = SatSolve(cnf, budget);

  CheckResult out;
  switch (sat.verdict) {
    case SatVerdict::kUnsat:
      out.verdict = CheckVerdict::kUnsat;
      return out;
    case SatVerdict::kUnknown:
      out.verdict = CheckVerdict::kUnknown;
      out.unknown_reason = sat.unknown_reason;
      return out;
    case SatVerdict::kSat:
      break;
  }

  out.verdict = CheckVerdict::kSat;
  for (NodeId var : t.CollectVars(constraints)) {
    const BvNode& n = t.node(var);
    BitVal value;
    for (int bit = 0; bit < n.width; ++bit) {
      auto it = cnf.bit_map.find({var, bit});
      if (it == cnf.bit_map.end() || !sat.model[it->second]) continue;
      if (bit < 64) {
        value.lo |= uint64_t{1} << bit;
      } else {
        value.hi |= uint64_t{1} << (bit - 64);
      }
    }
    out.model.Set(t.var_name(n), n.cycle, value);
  }
  if (config.verify_models) {
    VerifyModel(t, constraints, out.model, "built-in");
  }
  return out;
}

// ---------------------------------------------------------------------------
// External backend

[[noreturn]] void FailExternal(const std::string& msg) {
  throw Diag(StatusCode::kSolverError, "external solver: " + msg);
}

// Collects the complete stdout of `cmd` with `input` on stdin. Returns
// the exit status through `status`.
std::string RunCommand(const std::string& cmd, const std::string& input,
                       int* status) {
  std::string tmp_template = "/tmp/rtlsym-smt-XXXXXX";
  std::vector<char> path(tmp_template.begin(), tmp_template.end());
  path.push_back('\0');
  int fd = mkstemp(path.data());
  if (fd < 0) FailExternal("cannot create temporary script file");
  std::string tmp_path(path.data());
  FILE* f = fdopen(fd, "w");
  if (f == nullptr) {
    FailExternal("cannot open temporary script file");
  }
  fwrite(input.data(), 1, input.size(), f);
  fclose(f);

  std::string full = cmd + " < " + tmp_path;
  FILE* pipe = popen(full.c_str(), "r");
  if (pipe == nullptr) {
    std::remove(tmp_path.c_str());
    FailExternal("cannot run command '" + cmd + "'");
  }
  std::string output;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    output.append(buf, n);
  }
  *status = pclose(pipe);
  std::remove(tmp_path.c_str());
  return output;
}

// Splits solver output into whitespace-free tokens, treating parentheses
// as their own tokens.
std::vector<std::string> SmtTokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == ')') {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
      out.push_back(std::string(1, c));
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool ParseSmtValue(const std::vector<std::string>& toks, size_t i,
                   BitVal* value) {
  if (i >= toks.size()) return false;
  const std::string& t = toks[i];
  if (t.rfind("#b", 0) == 0) return bv::ParseBin(t.substr(2), value);
  if (t.rfind("#x", 0) == 0) return bv::ParseHex(t.substr(2), value);
  // (_ bvN w)
  if (t == "(" && i + 2 < toks.size() && toks[i + 1] == "_" &&
      toks[i + 2].rfind("bv", 0) == 0) {
    return bv::ParseDec(toks[i + 2].substr(2), value);
  }
  return false;
}

// Extracts `name -> value` pairs from a get-model response. Accepts the
// conventional shape `(define-fun <name> () (_ BitVec w) <value>)` with
// binary, hex, or (_ bvN w) value forms.
void ParseModel(const std::vector<std::string>& toks, Assignment* model) {
  for (size_t i = 0; i < toks.size(); ++i) {
    if (toks[i] != "define-fun" || i + 1 >= toks.size()) continue;
    std::string symbol = toks[i + 1];
    // Skip to the closing paren of the result sort `(_ BitVec w)`.
    size_t j = i + 2;
    int depth = 0;
    bool saw_sort = false;
    for (; j < toks.size(); ++j) {
      if (toks[j] == "(") ++depth;
      if (toks[j] == ")") {
        --depth;
        if (saw_sort && depth <= 0) {
          ++j;
          break;
        }
      }
      if (toks[j] == "BitVec") saw_sort = true;
    }
    BitVal value;
    if (!ParseSmtValue(toks, j, &value)) {
      FailExternal("cannot parse model value for '" + symbol + "'");
    }
    std::string name = symbol;
    int cycle = 0;
    size_t dollar = symbol.rfind('$');
    if (dollar != std::string::npos) {
      name = symbol.substr(0, dollar);
      cycle = std::atoi(symbol.c_str() + dollar + 1);
    }
    model->Set(name, cycle, value);
  }
}

CheckResult CheckExternal(const NodeTable& t, std::span<const NodeId> constraints,
                          const SolverConfig& config) {
  if (config.external_cmd.empty()) {
    FailExternal("no command configured (use --solver-cmd)");
  }
  std::string script = ToSmtLib(t, constraints);
  std::string cmd = config.external_cmd;
  if (config.timeout_ms > 0) {
    // Enforce the wall-clock budget from outside the solver process.
    cmd = "timeout " + std::to_string((config.timeout_ms + 999) / 1000) + "s " +
          cmd;
  }
  int status = 0;
  std::string output = RunCommand(cmd, script, &status);
  if (WIFEXITED(status) && WEXITSTATUS(status) == 124) {
    CheckResult out;
    out.verdict = CheckVerdict::kUnknown;
    out.unknown_reason = "timeout";
    return out;
  }

  std::vector<std::string> toks = SmtTokens(output);
  if (toks.empty()) {
    FailExternal("no output from '" + config.external_cmd + "'");
  }

  CheckResult out;
  if (toks[0] == "unsat") {
    out.verdict = CheckVerdict::kUnsat;
    return out;
  }
  if (toks[0] == "unknown" || toks[0] == "timeout") {
    out.verdict = CheckVerdict::kUnknown;
    out.unknown_reason = "timeout";
    return out;
  }
  if (toks[0] != "sat") {
    FailExternal("unrecognized verdict '" + toks[0] + "'");
  }

  out.verdict = CheckVerdict::kSat;
  ParseModel(toks, &out.model);
  // Variables the solver left out (or models it truncated) default to 0;
  // totality over the constraint variables is part of the contract.
  for (NodeId var : t.CollectVars(constraints)) {
    const BvNode& n = t.node(var);
    if (out.model.Find(t.var_name(n), n.cycle) == nullptr) {
      out.model.Set(t.var_name(n), n.cycle, BitVal{});
    }
  }
  if (config.verify_models) {
    VerifyModel(t, constraints, out.model, "external");
  }
  return out;
}

}  // namespace

CheckResult Check(const NodeTable& table, std::span<const NodeId> constraints,
                  const SolverConfig& config) {
  if (config.backend == SolverConfig::Backend::kExternal) {
    return CheckExternal(table, constraints, config);
  }
  return CheckBuiltin(table, constraints, config);
}

}  // namespace rtlsym
