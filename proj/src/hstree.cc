/// @file hstree.cc
#include "mbd/hstree.h"

#include <chrono>
#include <sstream>

#include "mbd/error.h"

namespace mbd {

HsTreeSearch::HsTreeSearch(const Dpi& dpi, const CostModel& model,
                           std::size_t ld, const SearchOptions& options)
    : dpi_(dpi), model_(model), ld_(ld), options_(options) {
  CheckSearchInputs(dpi, model, ld);
  if (ResolveTrivialCases(dpi_, state_, options_.verify)) return;
  Enqueue(ComponentSet{});
}

bool HsTreeSearch::done() const {
  return queue_.empty() || state_.diagnoses.size() >= ld_;
}

void HsTreeSearch::Enqueue(ComponentSet members) {
  Cost f = model_.f(members);
  if (options_.duplicate_check) ++queued_count_[members];
  queue_.insert(QueuedNode{std::move(members), f, next_seq_++});
  ++state_.metrics.nodes_generated;
}

void HsTreeSearch::ObserveStorage() {
  state_.metrics.observe_storage(queue_.size(), state_.diagnoses.size(),
                                 state_.conflicts.size());
}

void HsTreeSearch::Step() {
  ObserveStorage();
  auto it = queue_.begin();
  QueuedNode node = *it;
  queue_.erase(it);

  if (options_.duplicate_check) {
    auto count = --queued_count_[node.members];
    if (count > 0) return;  // an equal node is still queued
    queued_count_.erase(node.members);
  }
  if (options_.hooks.on_process) {
    options_.hooks.on_process(node.members, node.f, node.f,
                              Cost::NegInfinity());
  }

  LabelResult label = Label(node.members, dpi_, state_, options_.verify);
  switch (label.kind) {
    case LabelResult::Kind::kClosed:
      break;
    case LabelResult::Kind::kValid:
      if (options_.verify && !dpi_.is_diagnosis(node.members)) {
        std::ostringstream msg;
        msg << "non-diagnosis " << node.members << " labeled valid";
        throw InvariantViolation(msg.str());
      }
      state_.diagnoses.push_back(node.members);
      break;
    case LabelResult::Kind::kConflict:
      for (ComponentId e : label.conflict) Enqueue(node.members.with(e));
      break;
  }
  ObserveStorage();
}

std::vector<QueuedNode> HsTreeSearch::open_nodes() const {
  return {queue_.begin(), queue_.end()};
}

SearchResult RunHsTree(const Dpi& dpi, const CostModel& model, std::size_t ld,
                       const SearchOptions& options) {
  auto start = std::chrono::steady_clock::now();
  HsTreeSearch search(dpi, model, ld, options);
  while (!search.done()) search.Step();
  SessionState& state = search.state();
  state.metrics.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return {std::move(state.diagnoses), std::move(state.conflicts),
          state.metrics};
}

}  // namespace mbd
