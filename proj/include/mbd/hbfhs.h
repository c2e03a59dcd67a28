/// @file hbfhs.h
/// Hybrid search: HS-Tree until a switch criterion fires, then RBF-HS over
/// the remaining open nodes.
#ifndef MBD_HBFHS_H_
#define MBD_HBFHS_H_

#include <cstddef>
#include <variant>

#include "mbd/dpi.h"
#include "mbd/model.h"
#include "mbd/search.h"

namespace mbd {

/// Switch once this many nodes have been generated.
struct NodeCount {
  std::size_t nodes;
};

/// Switch once stored nodes (open queue + D + C) reach fraction * budget.
/// The budget is a node count, the same unit the metrics use.
struct MemoryFraction {
  double fraction;
  std::size_t budget;
};

using SwitchCriterion = std::variant<NodeCount, MemoryFraction>;

/// Throws ConfigError for a zero node count, a fraction outside (0,1] or a
/// zero budget.
void ValidateCriterion(const SwitchCriterion& criterion);

/// Runs HS-Tree and hands over to RBF-HS when `criterion` fires. The
/// criterion is evaluated after each processed node, so an expansion is
/// never split. On switch, the open nodes (set-equal duplicates removed)
/// become children of a virtual root with bound NegInfinity; D and C carry
/// over. metrics.switched, switch_point, switch_tree_nodes and
/// post_switch_peak describe the handover.
SearchResult RunHbfHs(const Dpi& dpi, const CostModel& model, std::size_t ld,
                      const SwitchCriterion& criterion,
                      const SearchOptions& options = {});

}  // namespace mbd

#endif  // MBD_HBFHS_H_
