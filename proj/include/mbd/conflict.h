/// @file conflict.h
/// Minimal conflict computation by divide and conquer (QuickXplain).
#ifndef MBD_CONFLICT_H_
#define MBD_CONFLICT_H_

#include <cstddef>

#include "mbd/component_set.h"
#include "mbd/dpi.h"

namespace mbd {

struct MinConflictResult {
  enum class Kind { kConflict, kNoConflict, kEmptyConflict };

  Kind kind = Kind::kNoConflict;
  ComponentSet conflict;  ///< set only for kConflict

  static MinConflictResult Conflict(ComponentSet c) {
    return {Kind::kConflict, std::move(c)};
  }
  static MinConflictResult NoConflict() { return {Kind::kNoConflict, {}}; }
  static MinConflictResult EmptyConflict() {
    return {Kind::kEmptyConflict, {}};
  }

  bool is_conflict() const { return kind == Kind::kConflict; }
};

/// Computes one subset-minimal conflict within `candidates` (the K' of the
/// sub-problem <K', B, P, N>).
///
/// The background B u P is never shrunk; only `candidates` is minimized.
/// CNF backend: splits at the midpoint of the id-ordered candidate list, so
/// the returned conflict is reproducible. Costs one check when no conflict
/// exists. Explicit backend: the first stored conflict contained in
/// `candidates`, at the cost of one check. `checks`, when given, is incremented once per oracle call.
MinConflictResult FindMinConflict(const Dpi& dpi, const ComponentSet& candidates,
                                  std::size_t* checks = nullptr);

/// Upper bound on oracle calls for a call returning a conflict of size
/// `conflict_size` out of `num_candidates`: 2k(1 + log2(n/k)) + 2.
double QuickXplainCheckBound(std::size_t conflict_size,
                             std::size_t num_candidates);

}  // namespace mbd

#endif  // MBD_CONFLICT_H_
