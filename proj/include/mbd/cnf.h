/// @file cnf.h
/// Propositional clauses and a small DPLL satisfiability checker.
#ifndef MBD_CNF_H_
#define MBD_CNF_H_

#include <cstddef>
#include <span>
#include <vector>

namespace mbd {

/// A literal is a signed 1-based variable index: +v is variable v-1,
/// -v its negation.
using Literal = int;
using Clause = std::vector<Literal>;

/// A sentence in conjunctive normal form. An empty clause list is the
/// trivially true sentence.
struct CnfSentence {
  std::vector<Clause> clauses;

  friend bool operator==(const CnfSentence&, const CnfSentence&) = default;
};

/// Satisfiability of a clause set over `num_variables` variables.
///
/// DPLL with unit propagation and first-unassigned-variable branching; no
/// learning. Every clause pointer must stay valid for the call. Throws
/// DomainError when a literal references a variable outside the table or is 0.
bool CheckConsistent(std::span<const Clause* const> clauses,
                     std::size_t num_variables);

/// Convenience overload over a clause vector.
bool CheckConsistent(const std::vector<Clause>& clauses,
                     std::size_t num_variables);

}  // namespace mbd

#endif  // MBD_CNF_H_
