/// @file rbfhs.cc
#include "mbd/rbfhs.h"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "mbd/error.h"

namespace mbd {

namespace {

bool ByDecreasingF(const ChildEntry& a, const ChildEntry& b) {
  return a.F > b.F;
}

}  // namespace

std::vector<ChildEntry> Expand(const ComponentSet& node,
                               const ComponentSet& conflict,
                               const CostModel& model) {
  std::vector<ChildEntry> children;
  children.reserve(conflict.size() + 1);
  for (ComponentId e : conflict) {
    ComponentSet members = node.with(e);
    Cost f = model.f(members);
    children.push_back({std::move(members), f, Cost::NegInfinity(), false});
  }
  return children;
}

void SortDecreasingByF(std::vector<ChildEntry>& children) {
  std::stable_sort(children.begin(), children.end(), ByDecreasingF);
}

void InsertSortedByF(ChildEntry entry, std::vector<ChildEntry>& children) {
  auto pos = std::upper_bound(children.begin(), children.end(), entry,
                              ByDecreasingF);
  children.insert(pos, std::move(entry));
}

RbfHsSearch::RbfHsSearch(const Dpi& dpi, const CostModel& model,
                         std::size_t ld, SearchOptions options,
                         SessionState& state)
    : dpi_(dpi), model_(model), ld_(ld), options_(std::move(options)),
      state_(state) {}

void RbfHsSearch::AddLive(std::size_t n) {
  live_ += n;
  peak_live_ = std::max(peak_live_, live_);
  state_.metrics.observe_storage(live_, state_.diagnoses.size(),
                                 state_.conflicts.size());
}

void RbfHsSearch::CheckF(const ComponentSet& node, Cost backed_up,
                         Cost f) const {
  if (options_.verify && backed_up > f) {
    std::ostringstream msg;
    msg << "F(" << node << ") = " << backed_up << " exceeds f = " << f;
    throw InvariantViolation(msg.str());
  }
}

std::optional<Cost> RbfHsSearch::Process(const ComponentSet& node,
                                         Cost backed_up, Cost bound) {
  const Cost f = model_.f(node);
  if (options_.hooks.on_process) {
    options_.hooks.on_process(node, f, backed_up, bound);
  }
  CheckF(node, backed_up, f);

  LabelResult label = Label(node, dpi_, state_, options_.verify);
  if (label.kind == LabelResult::Kind::kClosed) return Cost::NegInfinity();
  if (label.kind == LabelResult::Kind::kValid) {
    if (options_.verify && !dpi_.is_diagnosis(node)) {
      std::ostringstream msg;
      msg << "non-diagnosis " << node << " labeled valid";
      throw InvariantViolation(msg.str());
    }
    state_.diagnoses.push_back(node);
    state_.metrics.observe_storage(live_, state_.diagnoses.size(),
                                   state_.conflicts.size());
    if (state_.diagnoses.size() >= ld_) return std::nullopt;
    return Cost::NegInfinity();
  }

  std::vector<ChildEntry> children = Expand(node, label.conflict, model_);
  // f(n) > F(n) means n was expanded before: its learned value caps the
  // children, whose subtrees were already searched down to it.
  const bool reexpanded = f > backed_up;
  for (ChildEntry& child : children) {
    child.F = reexpanded ? std::min(backed_up, child.f) : child.f;
    CheckF(child.members, child.F, child.f);
  }
  const std::size_t count = children.size();
  state_.metrics.nodes_generated += count;
  AddLive(count);

  std::optional<Cost> result = ExploreChildren(std::move(children), bound);
  live_ -= count;
  if (!result) return std::nullopt;

  if (options_.verify && !(*result < backed_up)) {
    std::ostringstream msg;
    msg << "processing " << node << " returned " << *result
        << ", not below its entry value " << backed_up;
    throw InvariantViolation(msg.str());
  }
  if (options_.hooks.on_return) options_.hooks.on_return(node, *result);
  return result;
}

std::optional<Cost> RbfHsSearch::ExploreChildren(
    std::vector<ChildEntry> children, Cost bound) {
  if (children.empty()) return Cost::NegInfinity();
  if (children.size() == 1) children.push_back(ChildEntry::Dummy());
  SortDecreasingByF(children);

  ChildEntry best = std::move(children.front());
  children.erase(children.begin());
  while (best.F >= bound && best.F > Cost::NegInfinity()) {
    const Cost alternative = std::max(bound, children.front().F);
    std::optional<Cost> value = Process(best.members, best.F, alternative);
    if (!value) return std::nullopt;
    best.F = *value;
    CheckF(best.members, best.F, best.f);
    InsertSortedByF(std::move(best), children);
    best = std::move(children.front());
    children.erase(children.begin());
  }
  return best.F;
}

std::optional<Cost> RbfHsSearch::ExploreVirtualRoot(
    std::vector<ChildEntry> children) {
  const std::size_t count = children.size();
  AddLive(count);
  std::optional<Cost> result =
      ExploreChildren(std::move(children), Cost::NegInfinity());
  live_ -= count;
  return result;
}

SearchResult RunRbfHs(const Dpi& dpi, const CostModel& model, std::size_t ld,
                      const SearchOptions& options) {
  auto start = std::chrono::steady_clock::now();
  CheckSearchInputs(dpi, model, ld);
  SessionState state;
  state.metrics.nodes_generated = 1;  // root
  if (!ResolveTrivialCases(dpi, state, options.verify)) {
    RbfHsSearch search(dpi, model, ld, options, state);
    const ComponentSet root;
    search.Process(root, model.f(root), Cost::NegInfinity());
  }
  state.metrics.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return {std::move(state.diagnoses), std::move(state.conflicts),
          state.metrics};
}

}  // namespace mbd
