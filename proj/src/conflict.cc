/// @file conflict.cc
#include "mbd/conflict.h"

#include <cmath>
#include <span>
#include <vector>

namespace mbd {

namespace {

class QuickXplain {
 public:
  QuickXplain(const Dpi& dpi, std::size_t* checks) : dpi_(dpi), checks_(checks) {}

  bool Violates(const ComponentSet& s) {
    if (checks_) ++*checks_;
    return dpi_.violates(s);
  }

  // Returns a minimal subset X of `candidates` such that fixed u X violates,
  // given that fixed u candidates violates. `delta` is the part most
  // recently added to `fixed`; when non-empty, fixed alone is tested first.
  ComponentSet Run(const ComponentSet& fixed, bool delta_nonempty,
                   std::span<const ComponentId> candidates) {
    if (delta_nonempty && Violates(fixed)) return {};
    if (candidates.size() == 1) return ComponentSet{candidates[0]};
    const std::size_t mid = candidates.size() / 2;
    auto lower = candidates.first(mid);
    auto upper = candidates.subspan(mid);
    ComponentSet lower_set(std::vector<ComponentId>(lower.begin(), lower.end()));
    ComponentSet from_upper = Run(fixed.set_union(lower_set), true, upper);
    ComponentSet from_lower =
        Run(fixed.set_union(from_upper), !from_upper.empty(), lower);
    return from_lower.set_union(from_upper);
  }

 private:
  const Dpi& dpi_;
  std::size_t* checks_;
};

}  // namespace

MinConflictResult FindMinConflict(const Dpi& dpi, const ComponentSet& candidates,
                                  std::size_t* checks) {
  if (const auto* ec = std::get_if<ExplicitConflicts>(&dpi.backend())) {
    // The stored list is already minimal; answer with its first member inside
    // the candidates, in one lookup.
    if (checks) ++*checks;
    for (const auto& c : ec->conflicts) {
      if (c.is_subset_of(candidates)) {
        return c.empty() ? MinConflictResult::EmptyConflict()
                         : MinConflictResult::Conflict(c);
      }
    }
    return MinConflictResult::NoConflict();
  }
  QuickXplain qx(dpi, checks);
  if (!qx.Violates(candidates)) return MinConflictResult::NoConflict();
  if (candidates.empty() || qx.Violates(ComponentSet{})) {
    return MinConflictResult::EmptyConflict();
  }
  return MinConflictResult::Conflict(
      qx.Run(ComponentSet{}, false, candidates.ids()));
}

double QuickXplainCheckBound(std::size_t conflict_size,
                             std::size_t num_candidates) {
  if (conflict_size == 0) return 2;
  const double k = static_cast<double>(conflict_size);
  const double n = static_cast<double>(num_candidates);
  return 2 * k * (1 + std::log2(n / k)) + 2;
}

}  // namespace mbd
