/// @file sequential.h
/// Sequential diagnosis: alternate diagnosis search and component probes
/// until a single minimal diagnosis remains.
#ifndef MBD_SEQUENTIAL_H_
#define MBD_SEQUENTIAL_H_

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "mbd/dpi.h"
#include "mbd/hbfhs.h"
#include "mbd/model.h"
#include "mbd/search.h"

namespace mbd {

enum class Algorithm { kHsTree, kRbfHs, kHbfHs };
enum class Selector { kSpl, kEnt };

const char* ToString(Algorithm a);
const char* ToString(Selector s);
const char* ToString(CostMode m);

/// Runs the chosen search. `criterion` is only used by the hybrid search.
SearchResult RunSearch(Algorithm algorithm, const Dpi& dpi,
                       const CostModel& model, std::size_t ld,
                       const SwitchCriterion& criterion = NodeCount{100},
                       const SearchOptions& options = {});

/// A component-health measurement: is `target` faulty?
struct Probe {
  ComponentId target;

  friend bool operator==(const Probe&, const Probe&) = default;
};

/// Split-in-half: the discriminating component (in some but not all
/// diagnoses) minimizing the worst-case number of surviving diagnoses,
/// max(#containing, #not containing). Ties go to the lowest id.
/// Throws NoProbeError when no component discriminates.
Probe SelectProbeSpl(const std::vector<ComponentSet>& diagnoses);

/// Entropy: with p(d) the normalized probabilities of the diagnoses under
/// `pr`, the discriminating component minimizing |sum_{d contains it} p(d)
/// - 0.5|, i.e. maximizing the one-step information gain. Ties go to the
/// lowest id. Throws NoProbeError when no component discriminates.
Probe SelectProbeEnt(const std::vector<ComponentSet>& diagnoses,
                     const std::vector<double>& pr);

/// Normalized probabilities of `diagnoses` under `pr`, computed in log
/// space.
std::vector<double> NormalizedDiagnosisProbabilities(
    const std::vector<ComponentSet>& diagnoses, const std::vector<double>& pr);

/// Incorporates the probe outcome. The target leaves K in both cases and
/// the remaining components are renumbered densely in their old order.
/// Healthy: its sentence joins the background (explicit conflicts lose the
/// target, then are re-minimized). Faulty: its sentence is retracted
/// (explicit conflicts containing it are dropped).
Dpi ApplyAnswer(const Dpi& dpi, Probe probe, bool faulty);

struct SessionConfig {
  std::size_t ld = 6;
  Selector selector = Selector::kSpl;
  Algorithm algorithm = Algorithm::kRbfHs;
  CostMode mode = CostMode::kMinCard;
  SwitchCriterion criterion = NodeCount{100};
  SearchOptions search_options;
  /// Called before each probe with the current diagnoses, the component
  /// fault probabilities used for ENT, and the chosen probe.
  std::function<void(const std::vector<ComponentSet>& diagnoses,
                     const std::vector<double>& pr, Probe chosen)>
      on_probe;
};

struct IterationRecord {
  std::size_t iteration = 0;
  std::string probe;  ///< component name
  bool faulty = false;
  std::size_t num_diagnoses = 0;
  SearchMetrics metrics;
};

struct SessionResult {
  /// Confirmed faults plus the final remaining minimal diagnosis, as names
  /// in the original component order.
  std::vector<std::string> final_diagnosis;
  std::size_t iterations = 0;  ///< probes asked
  std::vector<IterationRecord> log;
  // Totals over every search of the session, stop tests included.
  double search_time_ms = 0;
  std::size_t peak_stored_nodes = 0;  ///< maximum over the searches
  std::size_t conflicts_computed = 0;
  bool failed = false;
  std::string failure;
};

/// Answers "is this component faulty?".
using ProbeOracle = std::function<bool(const std::string& component)>;

/// Runs a session with answers from `oracle`.
SessionResult RunSession(const Dpi& dpi, const ProbeOracle& oracle,
                         const SessionConfig& config);

/// Runs a session against a hidden actual diagnosis. Throws DomainError if
/// `actual` is not a minimal diagnosis of `dpi`.
SessionResult RunSession(const Dpi& dpi, const ComponentSet& actual,
                         const SessionConfig& config);

/// Throws DomainError unless `d` is a minimal diagnosis of `dpi`.
void ValidateMinimalDiagnosis(const Dpi& dpi, const ComponentSet& d);

/// "iteration=<i> probe=<name> answer=<faulty|healthy> diagnoses=<n>
/// time_ms=<t> peak_nodes=<p> conflicts=<c>"
void WriteTranscriptLine(std::ostream& os, const IterationRecord& record);

}  // namespace mbd

#endif  // MBD_SEQUENTIAL_H_
