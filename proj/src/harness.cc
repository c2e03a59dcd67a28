/// @file harness.cc
#include "mbd/harness.h"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "mbd/error.h"

namespace mbd {

namespace {

using Mask = std::uint32_t;

ComponentSet FromMask(Mask m) {
  std::vector<ComponentId> ids;
  for (ComponentId i = 0; m; ++i, m >>= 1) {
    if (m & 1) ids.push_back(i);
  }
  return ComponentSet(std::move(ids));
}

void CheckSize(std::size_t n) {
  if (n > kBruteForceLimit) {
    throw ConfigError("brute-force oracle refuses |K| = " + std::to_string(n) +
                      " (limit " + std::to_string(kBruteForceLimit) + ")");
  }
}

// Visits all k-subsets of {0..n-1} in increasing mask order, for k = 0..n.
// The visitor receives masks; a kept mask prunes its supersets.
template <typename Keep>
std::vector<Mask> EnumerateMinimal(std::size_t n, Keep keep) {
  std::vector<Mask> kept;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == 0) {
      if (keep(Mask{0})) return {Mask{0}};
      continue;
    }
    const Mask limit = Mask{1} << n;
    for (Mask m = (Mask{1} << k) - 1; m < limit;) {
      bool pruned = std::any_of(kept.begin(), kept.end(),
                                [m](Mask s) { return (s & m) == s; });
      if (!pruned && keep(m)) kept.push_back(m);
      // Gosper's hack: next mask with the same popcount.
      Mask c = m & -m;
      Mask r = m + c;
      if (r == 0 || r >= limit) break;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  return kept;
}

}  // namespace

std::vector<ComponentSet> BruteForceMinDiagnoses(const Dpi& dpi,
                                                 const CostModel& model) {
  CheckSize(dpi.size());
  std::vector<ComponentSet> out;
  for (Mask m : EnumerateMinimal(dpi.size(), [&](Mask m) {
         return dpi.is_diagnosis(FromMask(m));
       })) {
    out.push_back(FromMask(m));
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](const ComponentSet& a, const ComponentSet& b) {
                     Cost ca = model.f(a), cb = model.f(b);
                     if (ca != cb) return ca > cb;
                     return a.ids() < b.ids();
                   });
  return out;
}

std::vector<ComponentSet> BruteForceMinConflicts(const Dpi& dpi) {
  CheckSize(dpi.size());
  std::vector<ComponentSet> out;
  for (Mask m : EnumerateMinimal(
           dpi.size(), [&](Mask m) { return dpi.violates(FromMask(m)); })) {
    out.push_back(FromMask(m));
  }
  return out;
}

bool IsHittingSet(const ComponentSet& x,
                  const std::vector<ComponentSet>& sets) {
  return std::all_of(sets.begin(), sets.end(),
                     [&](const ComponentSet& s) { return s.intersects(x); });
}

std::size_t LinearSpaceBound(const std::vector<ComponentSet>& min_conflicts) {
  std::size_t largest = 0;
  for (const auto& c : min_conflicts) largest = std::max(largest, c.size());
  return largest * min_conflicts.size();
}

ComponentSet RandomMinimalDiagnosis(const Dpi& dpi, std::mt19937_64& rng) {
  if (dpi.violates(ComponentSet{})) {
    throw DomainError("DPI has no diagnosis");
  }
  std::vector<ComponentId> order(dpi.size());
  std::iota(order.begin(), order.end(), ComponentId{0});
  std::shuffle(order.begin(), order.end(), rng);
  ComponentSet d = dpi.all();
  for (ComponentId id : order) {
    ComponentSet smaller = d.without(id);
    if (dpi.is_diagnosis(smaller)) d = std::move(smaller);
  }
  return d;
}

namespace {

void ValidateParams(const GeneratorParams& p) {
  if (p.num_components == 0) throw ConfigError("need at least one component");
  if (p.conflict_size_min == 0 || p.conflict_size_min > p.conflict_size_max) {
    throw ConfigError("conflict size range must satisfy 1 <= min <= max");
  }
  if (p.conflict_size_max > p.num_components) {
    throw ConfigError("conflict size exceeds the number of components");
  }
  if (!(p.pr_min > 0.0 && p.pr_min <= p.pr_max && p.pr_max < 1.0)) {
    throw ConfigError("probability range must satisfy 0 < min <= max < 1");
  }
  if (p.mode == GeneratorMode::kCnf) {
    if (p.num_variables < 2) throw ConfigError("CNF mode needs two variables");
    if (p.max_minimal_conflicts > 0 && p.num_components > kBruteForceLimit) {
      throw ConfigError("conflict filter needs |K| within the oracle limit");
    }
  }
}

std::vector<std::string> ComponentNames(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  return names;
}

std::size_t Uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<double> DrawProbabilities(const GeneratorParams& p,
                                      std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(p.pr_min, p.pr_max);
  std::vector<double> pr(p.num_components);
  for (double& v : pr) v = p.pr_min == p.pr_max ? p.pr_min : dist(rng);
  return pr;
}

Dpi GenerateExplicit(const GeneratorParams& p, std::mt19937_64& rng) {
  std::vector<ComponentId> all(p.num_components);
  std::iota(all.begin(), all.end(), ComponentId{0});
  std::vector<ComponentSet> conflicts;
  for (std::size_t i = 0; i < p.conflict_count; ++i) {
    std::size_t size = Uniform(rng, p.conflict_size_min, p.conflict_size_max);
    std::shuffle(all.begin(), all.end(), rng);
    conflicts.emplace_back(std::vector<ComponentId>(all.begin(), all.begin() + size));
  }
  auto pr = DrawProbabilities(p, rng);
  return Dpi(ComponentNames(p.num_components),
             ExplicitConflicts{MinimizeSets(conflicts)}, std::move(pr));
}

Literal Lit(std::size_t var, bool positive) {
  Literal v = static_cast<Literal>(var + 1);
  return positive ? v : -v;
}

Dpi GenerateCnfOnce(const GeneratorParams& p, std::mt19937_64& rng) {
  const std::size_t m = p.num_variables;
  CnfTheory theory;
  for (std::size_t i = 0; i < m; ++i) theory.variables.push_back("v" + std::to_string(i));
  theory.positive.push_back(Clause{Lit(0, true)});

  // Each chain v0 -> x1 -> ... -> target with target forbidden by N.
  std::vector<CnfSentence> sentences;
  std::vector<std::size_t> inner(m - 1);
  std::iota(inner.begin(), inner.end(), std::size_t{1});
  for (std::size_t chain = 0; chain < std::max<std::size_t>(1, p.conflict_count); ++chain) {
    std::size_t length = Uniform(rng, p.conflict_size_min, p.conflict_size_max);
    length = std::min(length, m - 1);
    if (sentences.size() + length > p.num_components) break;
    std::shuffle(inner.begin(), inner.end(), rng);
    std::size_t prev = 0;
    for (std::size_t step = 0; step < length; ++step) {
      std::size_t next = inner[step];
      sentences.push_back({{Clause{Lit(prev, false), Lit(next, true)}}});
      prev = next;
    }
    theory.negative.push_back({{Clause{Lit(prev, true)}}});
  }
  while (sentences.size() < p.num_components) {
    std::size_t a = Uniform(rng, 0, m - 1);
    std::size_t b = Uniform(rng, 0, m - 1);
    Clause clause{Lit(a, rng() % 2 == 0), Lit(b, rng() % 2 == 0)};
    if (rng() % 3 == 0) clause.push_back(Lit(Uniform(rng, 0, m - 1), rng() % 2 == 0));
    sentences.push_back({{std::move(clause)}});
  }
  std::shuffle(sentences.begin(), sentences.end(), rng);
  theory.component_sentences = std::move(sentences);
  auto pr = DrawProbabilities(p, rng);
  return Dpi(ComponentNames(p.num_components), std::move(theory), std::move(pr));
}

}  // namespace

Dpi GenerateRandomDpi(const GeneratorParams& params) {
  ValidateParams(params);
  std::mt19937_64 rng(params.seed);
  if (params.mode == GeneratorMode::kExplicitConflicts) {
    return GenerateExplicit(params, rng);
  }
  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Dpi dpi = GenerateCnfOnce(params, rng);
    if (params.max_minimal_conflicts == 0 ||
        BruteForceMinConflicts(dpi).size() <= params.max_minimal_conflicts) {
      return dpi;
    }
  }
  throw ConfigError("no CNF instance within the minimal-conflict limit after " +
                    std::to_string(kAttempts) + " attempts");
}

void WriteBenchHeader(std::ostream& os) {
  os << "scenario,algorithm,ld,mode,selector,time_ms,peak_nodes,"
        "conflicts_computed\n";
}

void WriteBenchRow(std::ostream& os, const BenchRow& row) {
  std::ostringstream time;
  time << std::fixed << std::setprecision(3) << row.time_ms;
  os << row.scenario << ',' << row.algorithm << ','
     << (row.ld == static_cast<std::size_t>(-1) ? std::string("all")
                                                 : std::to_string(row.ld))
     << ',' << row.mode << ',' << row.selector << ',' << time.str() << ','
     << row.peak_nodes << ',' << row.conflicts_computed << '\n';
}

}  // namespace mbd
