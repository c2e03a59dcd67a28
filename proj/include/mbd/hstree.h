/// @file hstree.h
/// HS-Tree: best-first hitting-set search with an explicit open
/// queue (exponential space).
#ifndef MBD_HSTREE_H_
#define MBD_HSTREE_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "mbd/dpi.h"
#include "mbd/model.h"
#include "mbd/search.h"

namespace mbd {

/// Open-queue entry; ordered by descending f with FIFO tie-break.
struct QueuedNode {
  ComponentSet members;
  Cost f;
  std::uint64_t seq;
};

/// Incremental HS-Tree. Each Step() polls and processes one node, so the
/// hybrid search can stop it at any node boundary and take over the queue.
class HsTreeSearch {
 public:
  /// Handles the trivial cases immediately; done() may already be true.
  HsTreeSearch(const Dpi& dpi, const CostModel& model, std::size_t ld,
               const SearchOptions& options);

  bool done() const;
  /// Polls the best open node, labels it and assigns it.
  void Step();

  /// Open nodes in queue (exploration) order.
  std::vector<QueuedNode> open_nodes() const;
  std::size_t queue_size() const { return queue_.size(); }

  SessionState& state() { return state_; }
  const SessionState& state() const { return state_; }

 private:
  struct Order {
    bool operator()(const QueuedNode& a, const QueuedNode& b) const {
      if (a.f != b.f) return a.f > b.f;
      return a.seq < b.seq;
    }
  };

  void Enqueue(ComponentSet members);
  void ObserveStorage();

  const Dpi& dpi_;
  const CostModel& model_;
  std::size_t ld_;
  SearchOptions options_;
  SessionState state_;
  std::set<QueuedNode, Order> queue_;
  std::unordered_map<ComponentSet, std::size_t> queued_count_;
  std::uint64_t next_seq_ = 0;
};

/// Returns the ld best minimal diagnoses in non-increasing cost order
/// (equal costs in generation order).
SearchResult RunHsTree(const Dpi& dpi, const CostModel& model,
                       std::size_t ld = kAllDiagnoses,
                       const SearchOptions& options = {});

}  // namespace mbd

#endif  // MBD_HSTREE_H_
