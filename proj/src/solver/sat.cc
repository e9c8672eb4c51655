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

#include "solver/sat.h"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace rtlsym {
namespace {

// Internal literal encoding: variable v (1-based) becomes 2v (positive)
// or 2v+1 (negative), so negation is lit ^ 1.
inline int ToLit(int dimacs) {
  int v = dimacs > 0 ? dimacs : -dimacs;
  return 2 * v + (dimacs < 0 ? 1 : 0);
}
inline int LitVar(int lit) { return lit >> 1; }
inline bool LitSign(int lit) { return lit & 1; }  // true = negated

// Luby restart sequence: 1 1 2 1 1 2 4 1 1 2 1 1 2 4 8 ...
int64_t Luby(int64_t i) {
  int64_t k = 1;
  while ((int64_t{1} << k) - 1 < i + 1) ++k;
  while ((int64_t{1} << k) - 1 != i + 1) {
    --k;
    i -= (int64_t{1} << k) - 1;
  }
  return int64_t{1} << (k - 1);
}

// Priority queue over variables: highest activity first, ties broken
// toward the lowest index so the search is reproducible.
class VarOrder {
 public:
  VarOrder(int num_vars, const std::vector<double>& activity)
      : pos_(num_vars + 1, -1), act_(activity) {
    for (int v = 1; v <= num_vars; ++v) Insert(v);
  }

  bool Empty() const { return heap_.empty(); }
  bool Contains(int v) const { return pos_[v] >= 0; }

  void Insert(int v) {
    if (Contains(v)) return;
    pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    SiftUp(pos_[v]);
  }

  int PopMax() {
    int top = heap_[0];
    Swap(0, static_cast<int>(heap_.size()) - 1);
    pos_[top] = -1;
    heap_.pop_back();
    if (!heap_.empty()) SiftDown(0);
    return top;
  }

  void Bumped(int v) {
    if (Contains(v)) SiftUp(pos_[v]);
  }

 private:
  bool Before(int a, int b) const {
    return act_[a] > act_[b] || (act_[a] == act_[b] && a < b);
  }
  void Swap(int i, int j) {
    std::swap(heap_[i], heap_[j]);
    pos_[heap_[i]] = i;
    pos_[heap_[j]] = j;
  }
  void SiftUp(int i) {
    while (i > 0) {
      int parent = (i - 1) / 2;
      if (!Before(heap_[i], heap_[parent])) break;
      Swap(i, parent);
      i = parent;
    }
  }
  void SiftDown(int i) {
    int n = static_cast<int>(heap_.size());
    for (;;) {
      int best = i;
      int l = 2 * i + 1, r = 2 * i + 2;
      if (l < n && Before(heap_[l], heap_[best])) best = l;
      if (r < n && Before(heap_[r], heap_[best])) best = r;
      if (best == i) return;
      Swap(i, best);
      i = best;
    }
  }

  std::vector<int> heap_;
  std::vector<int> pos_;
  const std::vector<double>& act_;
};

constexpr int kNoReason = -1;

class Solver {
 public:
  Solver(const Cnf& cnf, const SatBudget& budget)
      : num_vars_(cnf.num_vars),
        budget_(budget),
        assign_(cnf.num_vars + 1, -1),
        level_(cnf.num_vars + 1, 0),
        reason_(cnf.num_vars + 1, kNoReason),
        seen_(cnf.num_vars + 1, 0),
        activity_(cnf.num_vars + 1, 0.0),
        watches_(2 * (cnf.num_vars + 1)),
        order_(cnf.num_vars, activity_) {
    start_ = std::chrono::steady_clock::now();
    ok_ = true;
    for (const auto& clause : cnf.clauses) {
      if (!AddClause(clause)) {
        ok_ = false;
        break;
      }
    }
  }

  SatResult Solve() {
    SatResult res;
    if (!ok_ || Propagate() != kNoConflict) {
      res.verdict = SatVerdict::kUnsat;
      FillStats(&res);
      return res;
    }

    int64_t restart_count = 0;
    int64_t conflicts_until_restart = Luby(restart_count) * kRestartBase;

    for (;;) {
      int confl = Propagate();
      if (confl != kNoConflict) {
        ++conflicts_;
        if (DecisionLevel() == 0) {
          res.verdict = SatVerdict::kUnsat;
          FillStats(&res);
          return res;
        }
        if (budget_.max_conflicts >= 0 && conflicts_ > budget_.max_conflicts) {
          res.verdict = SatVerdict::kUnknown;
          res.unknown_reason = "conflict-budget";
          FillStats(&res);
          return res;
        }
        if (TimedOut()) {
          res.verdict = SatVerdict::kUnknown;
          res.unknown_reason = "timeout";
          FillStats(&res);
          return res;
        }
        std::vector<int> learned;
        int bt_level = 0;
        Analyze(confl, &learned, &bt_level);
        Backtrack(bt_level);
        if (learned.size() == 1) {
          Enqueue(learned[0], kNoReason);
        } else {
          int ci = static_cast<int>(clauses_.size());
          clauses_.push_back(learned);
          Watch(ci);
          Enqueue(learned[0], ci);
        }
        DecayActivity();
        if (--conflicts_until_restart <= 0) {
          ++restart_count;
          conflicts_until_restart = Luby(restart_count) * kRestartBase;
          Backtrack(0);
        }
        continue;
      }

      int next = PickBranchVar();
      if (next == 0) {
        res.verdict = SatVerdict::kSat;
        res.model.assign(num_vars_ + 1, false);
        for (int v = 1; v <= num_vars_; ++v) res.model[v] = assign_[v] == 1;
        FillStats(&res);
        return res;
      }
      ++decisions_;
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      Enqueue(ToLit(-next), kNoReason);  // polarity false first
    }
  }

 private:
  static constexpr int kNoConflict = -1;
  static constexpr int64_t kRestartBase = 100;

  int DecisionLevel() const { return static_cast<int>(trail_lim_.size()); }

  bool TimedOut() {
    if (budget_.timeout_ms < 0) return false;
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start_)
                       .count();
    return elapsed > budget_.timeout_ms;
  }

  // -1 unassigned; otherwise the value of the literal under the current
  // assignment.
  int LitValue(int lit) const {
    int a = assign_[LitVar(lit)];
    if (a < 0) return -1;
    return LitSign(lit) ? 1 - a : a;
  }

  bool AddClause(const std::vector<int>& dimacs) {
    std::vector<int> lits;
    for (int dl : dimacs) lits.push_back(ToLit(dl));
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (size_t i = 1; i < lits.size(); ++i) {
      if (lits[i] == (lits[i - 1] ^ 1)) return true;  // tautology
    }
    if (lits.empty()) return false;
    if (lits.size() == 1) {
      int val = LitValue(lits[0]);
      if (val == 0) return false;
      if (val == -1) Enqueue(lits[0], kNoReason);
      return true;
    }
    int ci = static_cast<int>(clauses_.size());
    clauses_.push_back(std::move(lits));
    Watch(ci);
    return true;
  }

  void Watch(int ci) {
    const std::vector<int>& c = clauses_[ci];
    watches_[c[0] ^ 1].push_back(ci);
    watches_[c[1] ^ 1].push_back(ci);
  }

  void Enqueue(int lit, int reason) {
    int v = LitVar(lit);
    assign_[v] = LitSign(lit) ? 0 : 1;
    level_[v] = DecisionLevel();
    reason_[v] = reason;
    trail_.push_back(lit);
  }

  // Two-watched-literal unit propagation. Returns a conflicting clause
  // index or kNoConflict.
  int Propagate() {
    while (qhead_ < trail_.size()) {
      int lit = trail_[qhead_++];
      ++propagations_;
      std::vector<int>& watch_list = watches_[lit];
      size_t keep = 0;
      for (size_t wi = 0; wi < watch_list.size(); ++wi) {
        int ci = watch_list[wi];
        std::vector<int>& c = clauses_[ci];
        int falsified = lit ^ 1;
        if (c[0] == falsified) std::swap(c[0], c[1]);
        // c[1] is the falsified watch.
        if (LitValue(c[0]) == 1) {
          watch_list[keep++] = ci;  // satisfied by the other watch
          continue;
        }
        bool moved = false;
        for (size_t k = 2; k < c.size(); ++k) {
          if (LitValue(c[k]) != 0) {
            std::swap(c[1], c[k]);
            watches_[c[1] ^ 1].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        // Unit or conflicting.
        watch_list[keep++] = ci;
        if (LitValue(c[0]) == 0) {
          for (++wi; wi < watch_list.size(); ++wi) {
            watch_list[keep++] = watch_list[wi];
          }
          watch_list.resize(keep);
          qhead_ = trail_.size();
          return ci;
        }
        Enqueue(c[0], ci);
      }
      watch_list.resize(keep);
    }
    return kNoConflict;
  }

  void BumpVar(int v) {
    activity_[v] += var_inc_;
    if (activity_[v] > 1e100) {
      for (int u = 1; u <= num_vars_; ++u) activity_[u] *= 1e-100;
      var_inc_ *= 1e-100;
    }
    order_.Bumped(v);
  }

  void DecayActivity() { var_inc_ /= 0.95; }

  // First-UIP conflict analysis. learned[0] is the asserting literal.
  void Analyze(int confl, std::vector<int>* learned, int* bt_level) {
    learned->clear();
    learned->push_back(0);  // placeholder for the asserting literal
    int path_count = 0;
    int lit = -1;
    size_t index = trail_.size();

    for (;;) {
      const std::vector<int>& c = clauses_[confl];
      for (size_t i = (lit == -1 ? 0 : 1); i < c.size(); ++i) {
        int q = c[i];
        int v = LitVar(q);
        if (seen_[v] || level_[v] == 0) continue;
        seen_[v] = 1;
        BumpVar(v);
        if (level_[v] == DecisionLevel()) {
          ++path_count;
        } else {
          learned->push_back(q);
        }
      }
      // Walk the trail back to the next marked literal.
      do {
        --index;
      } while (!seen_[LitVar(trail_[index])]);
      lit = trail_[index];
      int v = LitVar(lit);
      seen_[v] = 0;
      confl = reason_[v];
      if (--path_count == 0) break;
    }
    (*learned)[0] = lit ^ 1;

    // Backtrack to the second-highest decision level in the clause and
    // put a literal of that level in the first watch position.
    if (learned->size() == 1) {
      *bt_level = 0;
    } else {
      size_t max_i = 1;
      for (size_t i = 2; i < learned->size(); ++i) {
        if (level_[LitVar((*learned)[i])] > level_[LitVar((*learned)[max_i])]) {
          max_i = i;
        }
      }
      std::swap((*learned)[1], (*learned)[max_i]);
      *bt_level = level_[LitVar((*learned)[1])];
    }
    for (int q : *learned) seen_[LitVar(q)] = 0;
  }

  void Backtrack(int target_level) {
    if (DecisionLevel() <= target_level) return;
    int keep = trail_lim_[target_level];
    for (size_t i = trail_.size(); i-- > static_cast<size_t>(keep);) {
      int v = LitVar(trail_[i]);
      assign_[v] = -1;
      reason_[v] = kNoReason;
      order_.Insert(v);
    }
    trail_.resize(keep);
    trail_lim_.resize(target_level);
    qhead_ = trail_.size();
  }

  int PickBranchVar() {
    while (!order_.Empty()) {
      int v = order_.PopMax();
      if (assign_[v] < 0) return v;
    }
    return 0;
  }

  void FillStats(SatResult* res) const {
    res->conflicts = conflicts_;
    res->decisions = decisions_;
    res->propagations = propagations_;
  }

  int num_vars_;
  SatBudget budget_;
  bool ok_ = true;

  std::vector<std::vector<int>> clauses_;
  std::vector<int8_t> assign_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<int8_t> seen_;
  std::vector<double> activity_;
  double var_inc_ = 1.0;
  std::vector<std::vector<int>> watches_;
  VarOrder order_;

  std::vector<int> trail_;
  std::vector<int> trail_lim_;
  size_t qhead_ = 0;

  int64_t conflicts_ = 0;
  int64_t decisions_ = 0;
  int64_t propagations_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SatResult SatSolve(const Cnf& cnf, const SatBudget& budget) {
  return Solver(cnf, budget).Solve();
}

}  // namespace rtlsym
