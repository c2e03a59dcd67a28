/// @file search.h
/// State and node labeling shared by the hitting-set searches.
#ifndef MBD_SEARCH_H_
#define MBD_SEARCH_H_

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "mbd/component_set.h"
#include "mbd/dpi.h"
#include "mbd/metrics.h"
#include "mbd/model.h"

namespace mbd {

/// ld value requesting every minimal diagnosis.
inline constexpr std::size_t kAllDiagnoses =
    std::numeric_limits<std::size_t>::max();

/// Solutions, stored conflicts and counters of one search.
struct SessionState {
  std::vector<ComponentSet> diagnoses;  ///< D, in discovery order
  std::vector<ComponentSet> conflicts;  ///< C, in computation order
  SearchMetrics metrics;
};

/// Outcome of labeling a node.
struct LabelResult {
  enum class Kind { kClosed, kValid, kConflict };

  Kind kind;
  ComponentSet conflict;  ///< set only for kConflict
  bool reused = false;    ///< conflict came from C rather than a fresh call
};

/// Observation points for tests and tracing. All callbacks are optional.
struct SearchHooks {
  /// A node is about to be labeled; `f_cost` and `backed_up` are f(n) and
  /// the F(n) it was entered with, `bound` the alternative best (RBF-HS) or
  /// NegInfinity (HS-Tree).
  std::function<void(const ComponentSet& node, Cost f_cost, Cost backed_up,
                     Cost bound)>
      on_process;
  /// An RBF-HS frame for `node` returned `value` (not called on exit).
  std::function<void(const ComponentSet& node, Cost value)> on_return;
  /// Hybrid search handed over to RBF-HS: D and C as copied, and the
  /// deduplicated virtual-root children in queue order.
  std::function<void(const SessionState& state,
                     const std::vector<ComponentSet>& children)>
      on_switch;
};

struct SearchOptions {
  /// Check the runtime invariants (only diagnoses enter D, returned values
  /// drop strictly below the entry F, F <= f for every live node, computed
  /// conflicts are minimal). Throws InvariantViolation on failure.
  bool verify = false;
  /// HS-Tree only: close nodes that are set-equal to a queued node.
  bool duplicate_check = false;
  SearchHooks hooks;
};

struct SearchResult {
  std::vector<ComponentSet> diagnoses;
  std::vector<ComponentSet> conflicts;
  SearchMetrics metrics;
};

/// Node labeling common to HS-Tree and RBF-HS: non-minimality check against
/// D, then reuse of the first stored conflict disjoint from `node`, then a
/// fresh minimal conflict for <K \ node, B, P, N>. Fresh conflicts are
/// appended to state.conflicts.
LabelResult Label(const ComponentSet& node, const Dpi& dpi,
                  SessionState& state, bool verify = false);

/// Settles the trivial cases before any tree is built: an empty conflict
/// (no diagnosis exists) or no conflict at all (the empty set is the only
/// minimal diagnosis). Otherwise stores the root conflict in state.conflicts.
/// Returns true when the search is already complete.
bool ResolveTrivialCases(const Dpi& dpi, SessionState& state, bool verify);

/// Throws ConfigError if `model` does not cover exactly the components of
/// `dpi`, or ld is zero.
void CheckSearchInputs(const Dpi& dpi, const CostModel& model, std::size_t ld);

/// Cost model for a DPI. MinCard needs nothing; MaxProb uses the DPI's
/// probabilities, cost-adjusted with kDefaultAdjustment unless already
/// below 0.5. Throws ConfigError for MaxProb without probabilities.
CostModel MakeCostModel(const Dpi& dpi, CostMode mode);

/// Verifies that `conflict` violates the DPI and that no one-element-smaller
/// subset does. Uses uncounted oracle calls.
bool IsMinimalConflict(const Dpi& dpi, const ComponentSet& conflict);

}  // namespace mbd

#endif  // MBD_SEARCH_H_
