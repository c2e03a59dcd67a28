/// @file rbfhs.h
/// Recursive Best-First Hitting Set Search: sound, complete, best-first
/// enumeration of minimal diagnoses in space linear in the tree depth.
///
/// Every node on the current path keeps its list of children with a
/// backed-up F-value. The best child is explored as long as its F-value is
/// not worse than `bound`, the best alternative anywhere else in the tree.
/// When a subtree is abandoned its best remaining F-value is stored at its
/// root and the subtree is forgotten; on regeneration children inherit the
/// learned value so that no work is redone blindly. Closed and valid nodes
/// back up negative infinity so that search proceeds past them.
#ifndef MBD_RBFHS_H_
#define MBD_RBFHS_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "mbd/dpi.h"
#include "mbd/model.h"
#include "mbd/search.h"

namespace mbd {

/// Child list entry. A dummy carries no members and F = NegInfinity; it pads
/// single-child lists so a second-best F always exists.
struct ChildEntry {
  ComponentSet members;
  Cost f = Cost::NegInfinity();
  Cost F = Cost::NegInfinity();
  bool dummy = false;

  static ChildEntry Dummy() { return {{}, Cost::NegInfinity(), Cost::NegInfinity(), true}; }
};

/// Children n u {e} for each e in `conflict`, in conflict order. F-values
/// are left unset (NegInfinity); callers assign them.
std::vector<ChildEntry> Expand(const ComponentSet& node,
                               const ComponentSet& conflict,
                               const CostModel& model);

/// Stable sort by descending F.
void SortDecreasingByF(std::vector<ChildEntry>& children);

/// Inserts after every entry with F >= entry.F, so ties stay FIFO.
void InsertSortedByF(ChildEntry entry, std::vector<ChildEntry>& children);

/// The recursive procedure, bound to one search's state. `state` must
/// outlive the object; for the hybrid search it arrives pre-filled.
class RbfHsSearch {
 public:
  RbfHsSearch(const Dpi& dpi, const CostModel& model, std::size_t ld,
              SearchOptions options, SessionState& state);

  /// Processes `node` entered with backed-up value `backed_up` under
  /// `bound`. Returns the new backed-up value, or nullopt once ld
  /// diagnoses are found (the whole recursion unwinds).
  std::optional<Cost> Process(const ComponentSet& node, Cost backed_up,
                              Cost bound);

  /// The exploration loop over a prepared child list (F-values assigned).
  /// Used for regular frames and for the hybrid search's virtual root.
  std::optional<Cost> ExploreChildren(std::vector<ChildEntry> children,
                                      Cost bound);

  /// ExploreChildren for a root whose children were not created by this
  /// object (the hybrid search's virtual root); counts them as live.
  std::optional<Cost> ExploreVirtualRoot(std::vector<ChildEntry> children);

  /// Peak of live child-list entries since construction.
  std::size_t peak_live() const { return peak_live_; }

 private:
  void AddLive(std::size_t n);
  void CheckF(const ComponentSet& node, Cost backed_up, Cost f) const;

  const Dpi& dpi_;
  const CostModel& model_;
  std::size_t ld_;
  SearchOptions options_;
  SessionState& state_;
  std::size_t live_ = 0;
  std::size_t peak_live_ = 0;
};

/// Returns the ld (if existent) best minimal diagnoses in non-increasing
/// cost order. MaxProb models must be cost-adjusted.
SearchResult RunRbfHs(const Dpi& dpi, const CostModel& model,
                      std::size_t ld = kAllDiagnoses,
                      const SearchOptions& options = {});

}  // namespace mbd

#endif  // MBD_RBFHS_H_
