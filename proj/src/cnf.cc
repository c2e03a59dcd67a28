/// @file cnf.cc
/// DPLL over a private assignment vector; reentrant.
#include "mbd/cnf.h"

#include <cstdint>
#include <cstdlib>
#include <string>

#include "mbd/error.h"

namespace mbd {

namespace {

enum Value : std::int8_t { kFalse = -1, kUnassigned = 0, kTrue = 1 };

class Dpll {
 public:
  Dpll(std::span<const Clause* const> clauses, std::size_t num_variables)
      : clauses_(clauses), assignment_(num_variables, kUnassigned) {}

  bool Solve() {
    if (!Propagate()) return false;
    std::size_t var = NextUnassigned();
    if (var == assignment_.size()) return true;
    for (Value v : {kTrue, kFalse}) {
      std::vector<Value> saved = assignment_;
      assignment_[var] = v;
      if (Solve()) return true;
      assignment_ = std::move(saved);
    }
    return false;
  }

 private:
  Value LiteralValue(Literal lit) const {
    Value v = assignment_[std::abs(lit) - 1];
    return lit > 0 ? v : static_cast<Value>(-v);
  }

  // Unit propagation to fixpoint. False on an empty (falsified) clause.
  bool Propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Clause* clause : clauses_) {
        Literal unit = 0;
        int open = 0;
        bool satisfied = false;
        for (Literal lit : *clause) {
          Value v = LiteralValue(lit);
          if (v == kTrue) {
            satisfied = true;
            break;
          }
          if (v == kUnassigned) {
            ++open;
            unit = lit;
          }
        }
        if (satisfied) continue;
        if (open == 0) return false;
        if (open == 1) {
          std::size_t var = std::abs(unit) - 1;
          assignment_[var] = unit > 0 ? kTrue : kFalse;
          changed = true;
        }
      }
    }
    return true;
  }

  std::size_t NextUnassigned() const {
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
      if (assignment_[i] == kUnassigned) return i;
    }
    return assignment_.size();
  }

  std::span<const Clause* const> clauses_;
  std::vector<Value> assignment_;
};

}  // namespace

bool CheckConsistent(std::span<const Clause* const> clauses,
                     std::size_t num_variables) {
  for (const Clause* clause : clauses) {
    for (Literal lit : *clause) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > num_variables) {
        throw DomainError("literal " + std::to_string(lit) +
                          " references an unknown variable");
      }
    }
  }
  return Dpll(clauses, num_variables).Solve();
}

bool CheckConsistent(const std::vector<Clause>& clauses,
                     std::size_t num_variables) {
  std::vector<const Clause*> ptrs;
  ptrs.reserve(clauses.size());
  for (const Clause& c : clauses) ptrs.push_back(&c);
  return CheckConsistent(std::span<const Clause* const>(ptrs), num_variables);
}

}  // namespace mbd
