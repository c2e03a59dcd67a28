/// @file hbfhs.cc
#include "mbd/hbfhs.h"

#include <chrono>
#include <cmath>
#include <unordered_set>
#include <vector>

#include "mbd/error.h"
#include "mbd/hstree.h"
#include "mbd/rbfhs.h"

namespace mbd {

namespace {

bool Fires(const SwitchCriterion& criterion, const HsTreeSearch& search) {
  const SessionState& s = search.state();
  if (const auto* nc = std::get_if<NodeCount>(&criterion)) {
    return s.metrics.nodes_generated >= nc->nodes;
  }
  const auto& mf = std::get<MemoryFraction>(criterion);
  const double stored = static_cast<double>(
      search.queue_size() + s.diagnoses.size() + s.conflicts.size());
  return stored >= mf.fraction * static_cast<double>(mf.budget);
}

}  // namespace

void ValidateCriterion(const SwitchCriterion& criterion) {
  if (const auto* nc = std::get_if<NodeCount>(&criterion)) {
    if (nc->nodes == 0) throw ConfigError("node-count switch must be positive");
    return;
  }
  const auto& mf = std::get<MemoryFraction>(criterion);
  if (!(mf.fraction > 0.0 && mf.fraction <= 1.0)) {
    throw ConfigError("memory fraction must lie in (0, 1]");
  }
  if (mf.budget == 0) throw ConfigError("memory budget must be positive");
}

SearchResult RunHbfHs(const Dpi& dpi, const CostModel& model, std::size_t ld,
                      const SwitchCriterion& criterion,
                      const SearchOptions& options) {
  auto start = std::chrono::steady_clock::now();
  ValidateCriterion(criterion);
  HsTreeSearch phase1(dpi, model, ld, options);
  bool fired = false;
  while (!phase1.done() && !fired) {
    phase1.Step();
    fired = Fires(criterion, phase1);
  }

  SessionState& state = phase1.state();
  if (!phase1.done()) {
    std::vector<ChildEntry> children;
    std::vector<ComponentSet> child_sets;
    std::unordered_set<ComponentSet> seen;
    for (QueuedNode& node : phase1.open_nodes()) {
      if (!seen.insert(node.members).second) continue;
      child_sets.push_back(node.members);
      children.push_back({std::move(node.members), node.f, node.f, false});
    }
    state.metrics.switched = true;
    state.metrics.switch_point = state.metrics.nodes_generated;
    state.metrics.switch_tree_nodes = children.size();
    if (options.hooks.on_switch) options.hooks.on_switch(state, child_sets);

    RbfHsSearch phase2(dpi, model, ld, options, state);
    phase2.ExploreVirtualRoot(std::move(children));
    state.metrics.post_switch_peak =
        phase2.peak_live() - state.metrics.switch_tree_nodes;
  }
  state.metrics.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return {std::move(state.diagnoses), std::move(state.conflicts),
          state.metrics};
}

}  // namespace mbd
