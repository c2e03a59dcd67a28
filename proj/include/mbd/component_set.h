/// @file component_set.h
/// Component identifiers and sorted component sets.
#ifndef MBD_COMPONENT_SET_H_
#define MBD_COMPONENT_SET_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace mbd {

/// Dense 0-based index of a component (sentence) in K.
using ComponentId = std::uint32_t;

/// A set of components kept as a sorted, duplicate-free vector.
///
/// Nodes, conflicts and diagnoses are all component sets. Sizes are small
/// (bounded by the number of minimal conflicts for tree nodes), so sorted
/// vectors beat node-based containers for both memory and speed.
class ComponentSet {
 public:
  using const_iterator = std::vector<ComponentId>::const_iterator;

  ComponentSet() = default;
  ComponentSet(std::initializer_list<ComponentId> ids);
  explicit ComponentSet(std::vector<ComponentId> ids);

  /// The set {0, ..., n-1}.
  static ComponentSet Range(std::size_t n);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const_iterator begin() const { return ids_.begin(); }
  const_iterator end() const { return ids_.end(); }
  ComponentId operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<ComponentId>& ids() const { return ids_; }

  bool contains(ComponentId id) const;
  bool is_subset_of(const ComponentSet& other) const;
  bool intersects(const ComponentSet& other) const;

  /// Copy with `id` added.
  ComponentSet with(ComponentId id) const;
  /// Copy with `id` removed.
  ComponentSet without(ComponentId id) const;
  ComponentSet set_union(const ComponentSet& other) const;
  ComponentSet difference(const ComponentSet& other) const;

  friend bool operator==(const ComponentSet&, const ComponentSet&) = default;
  /// Cardinality first, then lexicographic; the canonical enumeration order.
  friend bool operator<(const ComponentSet& a, const ComponentSet& b);

 private:
  std::vector<ComponentId> ids_;
};

std::ostream& operator<<(std::ostream& os, const ComponentSet& s);

/// Removes duplicates and strict supersets, keeping the first occurrence
/// order of the surviving sets.
std::vector<ComponentSet> MinimizeSets(const std::vector<ComponentSet>& sets);

}  // namespace mbd

template <>
struct std::hash<mbd::ComponentSet> {
  std::size_t operator()(const mbd::ComponentSet& s) const noexcept;
};

#endif  // MBD_COMPONENT_SET_H_
