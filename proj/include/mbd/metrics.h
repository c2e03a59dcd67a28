/// @file metrics.h
/// Per-search counters. One instance per search; never shared.
#ifndef MBD_METRICS_H_
#define MBD_METRICS_H_

#include <algorithm>
#include <cstddef>

namespace mbd {

struct SearchMetrics {
  std::size_t nodes_generated = 0;
  std::size_t nodes_explored = 0;     ///< label calls
  /// Peak simultaneously stored tree nodes: the open queue (HS-Tree) or the
  /// live child-list entries of all recursion frames (RBF-HS), without D, C
  /// and dummy sentinels.
  std::size_t peak_tree_nodes = 0;
  /// Peak of tree nodes + |D| + |C|.
  std::size_t peak_stored_nodes = 0;
  std::size_t conflicts_computed = 0;  ///< FindMinConflict calls from labeling
  std::size_t conflicts_reused = 0;
  std::size_t consistency_checks = 0;
  double wall_time_ms = 0;

  // Hybrid search only.
  bool switched = false;
  std::size_t switch_point = 0;        ///< nodes generated when switching
  std::size_t switch_tree_nodes = 0;   ///< virtual root children after dedup
  std::size_t post_switch_peak = 0;    ///< additional tree nodes after switch

  void observe_storage(std::size_t tree_nodes, std::size_t diagnoses,
                       std::size_t conflicts) {
    peak_tree_nodes = std::max(peak_tree_nodes, tree_nodes);
    peak_stored_nodes =
        std::max(peak_stored_nodes, tree_nodes + diagnoses + conflicts);
  }
};

}  // namespace mbd

#endif  // MBD_METRICS_H_
