#pragma once

#include "kge/common.hpp"
#include "kge/triples.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

namespace kge {

/// Map from (head, relation) to the sorted set of tails known true across all
/// splits; backs the "Filtered" ranking setting.
class FilterIndex {
 public:
  void insert(int head, int relation, int tail) { map_[detail::pair_key(head, relation)].push_back(tail); }

  void finalize() {
    for (auto& [key, tails] : map_) {
      std::sort(tails.begin(), tails.end());
      tails.erase(std::unique(tails.begin(), tails.end()), tails.end());
    }
  }

  /// Known-true tails for (head, relation); empty when the pair was never seen.
  const std::vector<int>& known_tails(int head, int relation) const {
    static const std::vector<int> empty;
    auto it = map_.find(detail::pair_key(head, relation));
    return it == map_.end() ? empty : it->second;
  }

  bool contains(int head, int relation, int tail) const {
    const auto& tails = known_tails(head, relation);
    return std::binary_search(tails.begin(), tails.end(), tail);
  }

  size_t n_keys() const { return map_.size(); }

 private:
  std::unordered_map<uint64_t, std::vector<int>> map_;
};

inline FilterIndex build_filter_index(const std::vector<const TripleStore*>& stores) {
  FilterIndex index;
  for (const TripleStore* store : stores) {
    for (const Triple& t : store->triples) {
      index.insert(t.head, t.relation, t.tail);
    }
  }
  index.finalize();
  return index;
}

}  // namespace kge
