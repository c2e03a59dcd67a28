/// @file component_set.cc
#include "mbd/component_set.h"

#include <algorithm>
#include <iterator>
#include <numeric>

namespace mbd {

ComponentSet::ComponentSet(std::initializer_list<ComponentId> ids)
    : ComponentSet(std::vector<ComponentId>(ids)) {}

ComponentSet::ComponentSet(std::vector<ComponentId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

ComponentSet ComponentSet::Range(std::size_t n) {
  std::vector<ComponentId> ids(n);
  std::iota(ids.begin(), ids.end(), ComponentId{0});
  ComponentSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool ComponentSet::contains(ComponentId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool ComponentSet::is_subset_of(const ComponentSet& other) const {
  if (size() > other.size()) return false;
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

bool ComponentSet::intersects(const ComponentSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

ComponentSet ComponentSet::with(ComponentId id) const {
  ComponentSet out;
  out.ids_.reserve(ids_.size() + 1);
  auto pos = std::lower_bound(ids_.begin(), ids_.end(), id);
  out.ids_.insert(out.ids_.end(), ids_.begin(), pos);
  if (pos == ids_.end() || *pos != id) out.ids_.push_back(id);
  out.ids_.insert(out.ids_.end(), pos, ids_.end());
  return out;
}

ComponentSet ComponentSet::without(ComponentId id) const {
  ComponentSet out = *this;
  auto pos = std::lower_bound(out.ids_.begin(), out.ids_.end(), id);
  if (pos != out.ids_.end() && *pos == id) out.ids_.erase(pos);
  return out;
}

ComponentSet ComponentSet::set_union(const ComponentSet& other) const {
  ComponentSet out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                 other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

ComponentSet ComponentSet::difference(const ComponentSet& other) const {
  ComponentSet out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                      other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

bool operator<(const ComponentSet& a, const ComponentSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.ids_ < b.ids_;
}

std::ostream& operator<<(std::ostream& os, const ComponentSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  return os << '}';
}

std::vector<ComponentSet> MinimizeSets(const std::vector<ComponentSet>& sets) {
  std::vector<ComponentSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      if (i == j) continue;
      if (sets[j] == sets[i]) {
        dominated = j < i;  // keep the first copy only
      } else {
        dominated = sets[j].is_subset_of(sets[i]);
      }
    }
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

}  // namespace mbd

std::size_t std::hash<mbd::ComponentSet>::operator()(
    const mbd::ComponentSet& s) const noexcept {
  std::size_t h = s.size();
  for (auto id : s) h ^= id + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}
