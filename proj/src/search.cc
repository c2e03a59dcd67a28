/// @file search.cc
#include "mbd/search.h"

#include <sstream>
#include <string>

#include "mbd/conflict.h"
#include "mbd/error.h"

namespace mbd {

bool IsMinimalConflict(const Dpi& dpi, const ComponentSet& conflict) {
  if (!dpi.violates(conflict)) return false;
  for (ComponentId id : conflict) {
    if (dpi.violates(conflict.without(id))) return false;
  }
  return true;
}

bool ResolveTrivialCases(const Dpi& dpi, SessionState& state, bool verify) {
  ++state.metrics.conflicts_computed;
  MinConflictResult r =
      FindMinConflict(dpi, dpi.all(), &state.metrics.consistency_checks);
  switch (r.kind) {
    case MinConflictResult::Kind::kEmptyConflict:
      return true;
    case MinConflictResult::Kind::kNoConflict:
      state.diagnoses.push_back(ComponentSet{});
      return true;
    case MinConflictResult::Kind::kConflict:
      break;
  }
  if (verify && !IsMinimalConflict(dpi, r.conflict)) {
    throw InvariantViolation("root conflict is not minimal");
  }
  state.conflicts.push_back(std::move(r.conflict));
  return false;
}

void CheckSearchInputs(const Dpi& dpi, const CostModel& model, std::size_t ld) {
  if (model.num_components() != dpi.size()) {
    throw ConfigError("cost model covers " +
                      std::to_string(model.num_components()) +
                      " components but the DPI has " +
                      std::to_string(dpi.size()));
  }
  if (ld == 0) throw ConfigError("ld must be at least 1");
}

CostModel MakeCostModel(const Dpi& dpi, CostMode mode) {
  if (mode == CostMode::kMinCard) return CostModel::MinCard(dpi.size());
  if (!dpi.probabilities()) {
    throw ConfigError("MaxProb mode needs component fault probabilities");
  }
  const auto& pr = *dpi.probabilities();
  return CostModel::MaxProb(IsCostAdjusted(pr) ? pr : CostAdjust(pr));
}

LabelResult Label(const ComponentSet& node, const Dpi& dpi,
                  SessionState& state, bool verify) {
  ++state.metrics.nodes_explored;
  for (const auto& d : state.diagnoses) {
    if (d.is_subset_of(node)) return {LabelResult::Kind::kClosed, {}};
  }
  for (const auto& c : state.conflicts) {
    if (!c.intersects(node)) {
      ++state.metrics.conflicts_reused;
      return {LabelResult::Kind::kConflict, c, true};
    }
  }
  ++state.metrics.conflicts_computed;
  MinConflictResult r = FindMinConflict(dpi, dpi.all().difference(node),
                                        &state.metrics.consistency_checks);
  if (r.kind == MinConflictResult::Kind::kNoConflict) {
    return {LabelResult::Kind::kValid, {}};
  }
  // Unreachable once the root has been checked: an empty conflict leaves
  // no diagnosis at all.
  if (r.kind == MinConflictResult::Kind::kEmptyConflict) {
    return {LabelResult::Kind::kClosed, {}};
  }
  if (verify && !IsMinimalConflict(dpi, r.conflict)) {
    std::ostringstream msg;
    msg << "computed conflict " << r.conflict << " is not minimal";
    throw InvariantViolation(msg.str());
  }
  state.conflicts.push_back(r.conflict);
  return {LabelResult::Kind::kConflict, r.conflict, false};
}

}  // namespace mbd
