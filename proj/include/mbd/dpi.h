/// @file dpi.h
/// Diagnosis problem instances <K, B, P, N> and the consistency oracle
/// over which conflicts and diagnoses are defined.
#ifndef MBD_DPI_H_
#define MBD_DPI_H_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mbd/cnf.h"
#include "mbd/component_set.h"

namespace mbd {

/// Propositional backend: each component carries a CNF sentence; B and P are
/// clause sets, N a list of CNF sentences that must not be entailed.
struct CnfTheory {
  std::vector<std::string> variables;
  std::vector<CnfSentence> component_sentences;  ///< indexed by ComponentId
  std::vector<Clause> background;
  std::vector<Clause> positive;
  std::vector<CnfSentence> negative;

  friend bool operator==(const CnfTheory&, const CnfTheory&) = default;
};

/// Oracle backend given directly by the complete list of minimal conflicts.
struct ExplicitConflicts {
  std::vector<ComponentSet> conflicts;

  friend bool operator==(const ExplicitConflicts&,
                         const ExplicitConflicts&) = default;
};

using Backend = std::variant<CnfTheory, ExplicitConflicts>;

/// A diagnosis problem instance with a bound consistency backend.
///
/// Components are identified by dense ids 0..|K|-1 with unique display
/// names. Instances are immutable values; concurrent queries are safe.
class Dpi {
 public:
  /// Throws DomainError on duplicate names, sentence/conflict ids outside K,
  /// unknown variables, or probabilities that do not cover K.
  /// Explicit conflicts are subset-minimized and deduplicated.
  Dpi(std::vector<std::string> names, Backend backend,
      std::optional<std::vector<double>> probabilities = std::nullopt);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(ComponentId id) const { return names_.at(id); }
  std::optional<ComponentId> find(const std::string& name) const;
  /// Resolves names; throws DomainError for unknown ones.
  ComponentSet ids_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const ComponentSet& set) const;

  ComponentSet all() const { return ComponentSet::Range(size()); }

  const Backend& backend() const { return backend_; }
  bool is_explicit() const {
    return std::holds_alternative<ExplicitConflicts>(backend_);
  }
  const std::optional<std::vector<double>>& probabilities() const {
    return probabilities_;
  }

  /// True iff S u B u P is inconsistent or entails some n in N
  /// (CNF backend), or S contains a stored minimal conflict (explicit
  /// backend). Monotone in S.
  bool violates(const ComponentSet& s) const;

  /// True iff not violates(K \ d).
  bool is_diagnosis(const ComponentSet& d) const;

  friend bool operator==(const Dpi&, const Dpi&) = default;

 private:
  bool cnf_violates(const CnfTheory& theory, const ComponentSet& s) const;

  std::vector<std::string> names_;
  Backend backend_;
  std::optional<std::vector<double>> probabilities_;
};

}  // namespace mbd

#endif  // MBD_DPI_H_
