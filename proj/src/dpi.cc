/// @file dpi.cc
#include "mbd/dpi.h"

#include <cstdlib>
#include <set>
#include <sstream>

#include "mbd/error.h"

namespace mbd {

namespace {

void CheckClause(const Clause& clause, std::size_t num_variables) {
  for (Literal lit : clause) {
    if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > num_variables) {
      throw DomainError("literal " + std::to_string(lit) +
                        " references an unknown variable");
    }
  }
}

void CheckTheory(const CnfTheory& theory, std::size_t num_components) {
  if (theory.component_sentences.size() != num_components) {
    throw DomainError("CNF backend needs one sentence per component");
  }
  const std::size_t n = theory.variables.size();
  for (const auto& s : theory.component_sentences)
    for (const auto& c : s.clauses) CheckClause(c, n);
  for (const auto& c : theory.background) CheckClause(c, n);
  for (const auto& c : theory.positive) CheckClause(c, n);
  for (const auto& s : theory.negative)
    for (const auto& c : s.clauses) CheckClause(c, n);
}

}  // namespace

Dpi::Dpi(std::vector<std::string> names, Backend backend,
         std::optional<std::vector<double>> probabilities)
    : names_(std::move(names)),
      backend_(std::move(backend)),
      probabilities_(std::move(probabilities)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw DomainError("duplicate component name '" + n + "'");
  }
  if (auto* theory = std::get_if<CnfTheory>(&backend_)) {
    CheckTheory(*theory, names_.size());
  } else {
    auto& ec = std::get<ExplicitConflicts>(backend_);
    for (const auto& c : ec.conflicts) {
      if (!c.empty() && c.ids().back() >= names_.size()) {
        throw DomainError("explicit conflict references a component outside K");
      }
    }
    ec.conflicts = MinimizeSets(ec.conflicts);
  }
  if (probabilities_ && probabilities_->size() != names_.size()) {
    throw DomainError("probabilities must cover every component");
  }
}

std::optional<ComponentId> Dpi::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<ComponentId>(i);
  }
  return std::nullopt;
}

ComponentSet Dpi::ids_of(const std::vector<std::string>& names) const {
  std::vector<ComponentId> ids;
  for (const auto& n : names) {
    auto id = find(n);
    if (!id) throw DomainError("unknown component '" + n + "'");
    ids.push_back(*id);
  }
  return ComponentSet(std::move(ids));
}

std::vector<std::string> Dpi::names_of(const ComponentSet& set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (ComponentId id : set) out.push_back(name(id));
  return out;
}

bool Dpi::violates(const ComponentSet& s) const {
  if (const auto* theory = std::get_if<CnfTheory>(&backend_)) {
    return cnf_violates(*theory, s);
  }
  for (const auto& c : std::get<ExplicitConflicts>(backend_).conflicts) {
    if (c.is_subset_of(s)) return true;
  }
  return false;
}

bool Dpi::cnf_violates(const CnfTheory& theory, const ComponentSet& s) const {
  std::vector<const Clause*> clauses;
  for (ComponentId id : s) {
    for (const auto& c : theory.component_sentences.at(id).clauses)
      clauses.push_back(&c);
  }
  for (const auto& c : theory.background) clauses.push_back(&c);
  for (const auto& c : theory.positive) clauses.push_back(&c);
  const std::size_t n = theory.variables.size();
  if (!CheckConsistent(clauses, n)) return true;

  // S u B u P |= sentence iff it entails every clause; it entails a clause
  // iff adding the negation of each of its literals is unsatisfiable.
  const std::size_t base = clauses.size();
  std::vector<Clause> negated;
  for (const auto& sentence : theory.negative) {
    bool entailed = true;
    for (const auto& clause : sentence.clauses) {
      negated.clear();
      for (Literal lit : clause) negated.push_back(Clause{-lit});
      clauses.resize(base);
      for (const auto& u : negated) clauses.push_back(&u);
      if (CheckConsistent(clauses, n)) {
        entailed = false;
        break;
      }
    }
    if (entailed) return true;
  }
  return false;
}

bool Dpi::is_diagnosis(const ComponentSet& d) const {
  return !violates(all().difference(d));
}

}  // namespace mbd
