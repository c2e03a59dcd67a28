// Independent reference computations for the tests. Nothing here calls the
// library's reasoner, conflict search or cost model; everything is
// recomputed by exhaustive enumeration or direct products.
#ifndef MBD_TESTS_ORACLES_H_
#define MBD_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "mbd/component_set.h"
#include "mbd/dpi.h"

namespace oracle {

using mbd::ComponentId;
using mbd::ComponentSet;

inline ComponentSet FromMask(std::uint32_t mask) {
  std::vector<ComponentId> ids;
  for (ComponentId i = 0; i < 32; ++i) {
    if (mask >> i & 1u) ids.push_back(i);
  }
  return ComponentSet(ids);
}

inline std::uint32_t ToMask(const ComponentSet& s) {
  std::uint32_t m = 0;
  for (ComponentId id : s) m |= 1u << id;
  return m;
}

// Plain product over all components, no logs.
inline double NaiveProbability(const ComponentSet& x,
                               const std::vector<double>& pr) {
  double p = 1;
  for (std::size_t i = 0; i < pr.size(); ++i) {
    p *= x.contains(static_cast<ComponentId>(i)) ? pr[i] : 1 - pr[i];
  }
  return p;
}

inline bool ClauseTrue(const mbd::Clause& clause, std::uint32_t assignment) {
  for (int lit : clause) {
    const bool value = assignment >> (std::abs(lit) - 1) & 1u;
    if ((lit > 0) == value) return true;
  }
  return false;
}

// Truth table: S u B u P unsatisfiable, or every model of it satisfies some
// negative sentence.
inline bool TruthTableViolates(const mbd::CnfTheory& t, const ComponentSet& s) {
  std::vector<const mbd::Clause*> clauses;
  for (ComponentId id : s) {
    for (const auto& c : t.component_sentences[id].clauses) clauses.push_back(&c);
  }
  for (const auto& c : t.background) clauses.push_back(&c);
  for (const auto& c : t.positive) clauses.push_back(&c);
  const std::uint32_t n_assign = 1u << t.variables.size();
  bool any_model = false;
  std::vector<bool> entailed(t.negative.size(), true);
  for (std::uint32_t a = 0; a < n_assign; ++a) {
    bool model = std::all_of(clauses.begin(), clauses.end(),
                             [a](const mbd::Clause* c) { return ClauseTrue(*c, a); });
    if (!model) continue;
    any_model = true;
    for (std::size_t i = 0; i < t.negative.size(); ++i) {
      const auto& sent = t.negative[i].clauses;
      if (!std::all_of(sent.begin(), sent.end(),
                       [a](const mbd::Clause& c) { return ClauseTrue(c, a); })) {
        entailed[i] = false;
      }
    }
  }
  if (!any_model) return true;
  return std::find(entailed.begin(), entailed.end(), true) != entailed.end();
}

inline bool Violates(const mbd::Dpi& dpi, const ComponentSet& s) {
  if (const auto* ec = std::get_if<mbd::ExplicitConflicts>(&dpi.backend())) {
    for (const auto& c : ec->conflicts) {
      if (std::includes(s.begin(), s.end(), c.begin(), c.end())) return true;
    }
    return false;
  }
  return TruthTableViolates(std::get<mbd::CnfTheory>(dpi.backend()), s);
}

// Minimal sets X with pred(X), relying on pred being upward closed.
template <typename Pred>
std::set<ComponentSet> MinimalSets(std::size_t n, Pred pred) {
  std::vector<char> holds(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < holds.size(); ++m) holds[m] = pred(FromMask(m));
  std::set<ComponentSet> out;
  for (std::uint32_t m = 0; m < holds.size(); ++m) {
    if (!holds[m]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i) {
      if (m >> i & 1u && holds[m & ~(1u << i)]) minimal = false;
    }
    if (minimal) out.insert(FromMask(m));
  }
  return out;
}

inline std::set<ComponentSet> MinimalConflicts(const mbd::Dpi& dpi) {
  return MinimalSets(dpi.size(), [&](const ComponentSet& x) { return Violates(dpi, x); });
}

// Via duality: X is a diagnosis iff K \ X is not a conflict.
inline std::set<ComponentSet> MinimalDiagnoses(const mbd::Dpi& dpi) {
  const std::uint32_t all = (1u << dpi.size()) - 1;
  return MinimalSets(dpi.size(), [&](const ComponentSet& x) {
    return !Violates(dpi, FromMask(all & ~ToMask(x)));
  });
}

inline std::set<ComponentSet> MinimalHittingSets(
    const std::vector<ComponentSet>& sets, std::size_t n) {
  return MinimalSets(n, [&](const ComponentSet& x) {
    return std::all_of(sets.begin(), sets.end(),
                       [&](const ComponentSet& c) { return x.intersects(c); });
  });
}

template <typename Range>
std::set<ComponentSet> AsSet(const Range& r) {
  return std::set<ComponentSet>(r.begin(), r.end());
}

// Components in some but not all diagnoses.
inline std::vector<ComponentId> Discriminating(const std::vector<ComponentSet>& d) {
  std::set<ComponentId> all;
  for (const auto& x : d) all.insert(x.begin(), x.end());
  std::vector<ComponentId> out;
  for (ComponentId c : all) {
    std::size_t in = 0;
    for (const auto& x : d) in += x.contains(c);
    if (in < d.size()) out.push_back(c);
  }
  return out;
}

inline std::size_t WorstCase(const std::vector<ComponentSet>& d, ComponentId c) {
  std::size_t in = 0;
  for (const auto& x : d) in += x.contains(c);
  return std::max(in, d.size() - in);
}

// Every component attaining the minimal worst case.
inline std::set<ComponentId> SplArgmins(const std::vector<ComponentSet>& d) {
  std::set<ComponentId> best;
  std::size_t best_value = SIZE_MAX;
  for (ComponentId c : Discriminating(d)) {
    const std::size_t v = WorstCase(d, c);
    if (v < best_value) {
      best_value = v;
      best.clear();
    }
    if (v == best_value) best.insert(c);
  }
  return best;
}

inline double Entropy(const std::vector<double>& p) {
  double total = 0, h = 0;
  for (double x : p) total += x;
  for (double x : p) {
    if (x > 0) h -= x / total * std::log2(x / total);
  }
  return h;
}

// Expected Shannon entropy of the diagnosis distribution after asking
// whether c is faulty.
inline double ExpectedEntropy(const std::vector<ComponentSet>& d,
                              const std::vector<double>& pr, ComponentId c) {
  std::vector<double> yes, no;
  double total = 0;
  for (const auto& x : d) {
    const double p = NaiveProbability(x, pr);
    total += p;
    (x.contains(c) ? yes : no).push_back(p);
  }
  double p_yes = 0, p_no = 0;
  for (double p : yes) p_yes += p;
  for (double p : no) p_no += p;
  return p_yes / total * Entropy(yes) + p_no / total * Entropy(no);
}

inline double MinExpectedEntropy(const std::vector<ComponentSet>& d,
                                 const std::vector<double>& pr) {
  double best = INFINITY;
  for (ComponentId c : Discriminating(d)) best = std::min(best, ExpectedEntropy(d, pr, c));
  return best;
}

}  // namespace oracle

#endif  // MBD_TESTS_ORACLES_H_
