/// @file sequential.cc
#include "mbd/sequential.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>

#include "mbd/error.h"
#include "mbd/hstree.h"
#include "mbd/rbfhs.h"

namespace mbd {

const char* ToString(Algorithm a) {
  switch (a) {
    case Algorithm::kHsTree: return "hstree";
    case Algorithm::kRbfHs: return "rbfhs";
    case Algorithm::kHbfHs: return "hbfhs";
  }
  return "?";
}

const char* ToString(Selector s) {
  return s == Selector::kSpl ? "spl" : "ent";
}

const char* ToString(CostMode m) {
  return m == CostMode::kMinCard ? "mincard" : "maxprob";
}

SearchResult RunSearch(Algorithm algorithm, const Dpi& dpi,
                       const CostModel& model, std::size_t ld,
                       const SwitchCriterion& criterion,
                       const SearchOptions& options) {
  switch (algorithm) {
    case Algorithm::kHsTree: return RunHsTree(dpi, model, ld, options);
    case Algorithm::kRbfHs: return RunRbfHs(dpi, model, ld, options);
    case Algorithm::kHbfHs:
      return RunHbfHs(dpi, model, ld, criterion, options);
  }
  throw ConfigError("unknown algorithm");
}

namespace {

// Occurrence count of each component over the diagnoses, ordered by id.
std::map<ComponentId, std::size_t> Occurrences(
    const std::vector<ComponentSet>& diagnoses) {
  std::map<ComponentId, std::size_t> counts;
  for (const auto& d : diagnoses)
    for (ComponentId id : d) ++counts[id];
  return counts;
}

[[noreturn]] void NoProbe() {
  throw NoProbeError("no component discriminates between the diagnoses");
}

}  // namespace

Probe SelectProbeSpl(const std::vector<ComponentSet>& diagnoses) {
  const std::size_t total = diagnoses.size();
  std::size_t best_worst = std::numeric_limits<std::size_t>::max();
  std::optional<ComponentId> best;
  for (const auto& [id, in] : Occurrences(diagnoses)) {
    if (in == total) continue;
    const std::size_t worst = std::max(in, total - in);
    if (worst < best_worst) {
      best_worst = worst;
      best = id;
    }
  }
  if (!best) NoProbe();
  return Probe{*best};
}

std::vector<double> NormalizedDiagnosisProbabilities(
    const std::vector<ComponentSet>& diagnoses, const std::vector<double>& pr) {
  std::vector<double> logs;
  logs.reserve(diagnoses.size());
  for (const auto& d : diagnoses) logs.push_back(LogDiagnosisProbability(d, pr));
  if (logs.empty()) return {};
  const double top = *std::max_element(logs.begin(), logs.end());
  std::vector<double> scaled;
  for (double l : logs) scaled.push_back(std::exp(l - top));
  return Normalize(scaled);
}

Probe SelectProbeEnt(const std::vector<ComponentSet>& diagnoses,
                     const std::vector<double>& pr) {
  const std::vector<double> p = NormalizedDiagnosisProbabilities(diagnoses, pr);
  std::map<ComponentId, std::pair<std::size_t, double>> mass;
  for (std::size_t i = 0; i < diagnoses.size(); ++i) {
    for (ComponentId id : diagnoses[i]) {
      ++mass[id].first;
      mass[id].second += p[i];
    }
  }
  double best_gap = std::numeric_limits<double>::infinity();
  std::optional<ComponentId> best;
  for (const auto& [id, entry] : mass) {
    if (entry.first == diagnoses.size()) continue;
    const double gap = std::abs(entry.second - 0.5);
    if (gap < best_gap) {
      best_gap = gap;
      best = id;
    }
  }
  if (!best) NoProbe();
  return Probe{*best};
}

Dpi ApplyAnswer(const Dpi& dpi, Probe probe, bool faulty) {
  const ComponentId t = probe.target;
  if (t >= dpi.size()) throw DomainError("probe target outside K");

  auto renumber = [t](ComponentId id) { return id > t ? id - 1 : id; };
  std::vector<std::string> names;
  std::optional<std::vector<double>> pr;
  if (dpi.probabilities()) pr.emplace();
  for (ComponentId id = 0; id < dpi.size(); ++id) {
    if (id == t) continue;
    names.push_back(dpi.name(id));
    if (pr) pr->push_back((*dpi.probabilities())[id]);
  }

  if (const auto* theory = std::get_if<CnfTheory>(&dpi.backend())) {
    CnfTheory next = *theory;
    next.component_sentences.erase(next.component_sentences.begin() + t);
    if (!faulty) {
      for (const auto& c : theory->component_sentences[t].clauses)
        next.background.push_back(c);
    }
    return Dpi(std::move(names), std::move(next), std::move(pr));
  }

  std::vector<ComponentSet> conflicts;
  for (const auto& c : std::get<ExplicitConflicts>(dpi.backend()).conflicts) {
    if (faulty && c.contains(t)) continue;
    std::vector<ComponentId> ids;
    for (ComponentId id : c) {
      if (id != t) ids.push_back(renumber(id));
    }
    conflicts.emplace_back(std::move(ids));
  }
  return Dpi(std::move(names), ExplicitConflicts{std::move(conflicts)},
             std::move(pr));
}

void ValidateMinimalDiagnosis(const Dpi& dpi, const ComponentSet& d) {
  if (!d.empty() && d.ids().back() >= dpi.size()) {
    throw DomainError("diagnosis references a component outside K");
  }
  if (!dpi.is_diagnosis(d)) throw DomainError("actual set is not a diagnosis");
  for (ComponentId id : d) {
    if (dpi.is_diagnosis(d.without(id))) {
      throw DomainError("actual diagnosis is not minimal: '" + dpi.name(id) +
                        "' can be removed");
    }
  }
}

SessionResult RunSession(const Dpi& dpi, const ProbeOracle& oracle,
                         const SessionConfig& config) {
  SessionResult result;
  Dpi current = dpi;
  std::vector<std::string> confirmed;
  const std::size_t search_ld = std::max<std::size_t>(config.ld, 1);
  auto account = [&result](const SearchMetrics& m) {
    result.search_time_ms += m.wall_time_ms;
    result.peak_stored_nodes =
        std::max(result.peak_stored_nodes, m.peak_stored_nodes);
    result.conflicts_computed += m.conflicts_computed;
  };
  bool finished = false;

  // Every probe removes one component, so |K| + 1 searches always suffice.
  for (std::size_t round = 0; round <= dpi.size(); ++round) {
    const CostModel model = MakeCostModel(current, config.mode);
    SearchResult search = RunSearch(config.algorithm, current, model, search_ld,
                                    config.criterion, config.search_options);
    account(search.metrics);
    std::vector<ComponentSet> diagnoses = search.diagnoses;
    bool unique = diagnoses.size() <= 1;
    if (!unique && search_ld < 2) {
      SearchResult stop = RunSearch(config.algorithm, current, model, 2,
                                    config.criterion, config.search_options);
      account(stop.metrics);
      unique = stop.diagnoses.size() <= 1;
    }
    if (diagnoses.empty()) {
      result.failed = true;
      result.failure = "no diagnosis consistent with the answers";
      finished = true;
      break;
    }
    if (unique) {
      std::vector<std::string> names = confirmed;
      for (auto& n : current.names_of(diagnoses.front())) names.push_back(n);
      result.final_diagnosis = dpi.names_of(dpi.ids_of(names));
      finished = true;
      break;
    }

    std::vector<double> pr = model.mode() == CostMode::kMaxProb
                                 ? model.probabilities()
                                 : std::vector<double>(current.size(),
                                                       kDefaultAdjustment);
    Probe probe{};
    try {
      probe = config.selector == Selector::kSpl
                  ? SelectProbeSpl(diagnoses)
                  : SelectProbeEnt(diagnoses, pr);
    } catch (const NoProbeError& e) {
      result.failed = true;
      result.failure = e.what();
      finished = true;
      break;
    }
    if (config.on_probe) config.on_probe(diagnoses, pr, probe);

    IterationRecord record;
    record.iteration = ++result.iterations;
    record.probe = current.name(probe.target);
    record.faulty = oracle(record.probe);
    record.num_diagnoses = diagnoses.size();
    record.metrics = search.metrics;
    if (record.faulty) confirmed.push_back(record.probe);
    current = ApplyAnswer(current, probe, record.faulty);
    result.log.push_back(std::move(record));
  }
  if (!finished) {
    result.failed = true;
    result.failure = "probe limit reached";
  }
  return result;
}

SessionResult RunSession(const Dpi& dpi, const ComponentSet& actual,
                         const SessionConfig& config) {
  ValidateMinimalDiagnosis(dpi, actual);
  std::vector<std::string> faulty = dpi.names_of(actual);
  return RunSession(
      dpi,
      [faulty](const std::string& name) {
        return std::find(faulty.begin(), faulty.end(), name) != faulty.end();
      },
      config);
}

void WriteTranscriptLine(std::ostream& os, const IterationRecord& record) {
  os << "iteration=" << record.iteration << " probe=" << record.probe
     << " answer=" << (record.faulty ? "faulty" : "healthy")
     << " diagnoses=" << record.num_diagnoses << " time_ms=" << std::fixed
     << std::setprecision(3) << record.metrics.wall_time_ms
     << std::defaultfloat << " peak_nodes=" << record.metrics.peak_stored_nodes
     << " conflicts=" << record.metrics.conflicts_computed << '\n';
}

}  // namespace mbd
