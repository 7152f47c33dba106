#ifndef FIM_ITEMSET_HPP
#define FIM_ITEMSET_HPP

#include <span>
#include <vector>

#include "fim/database.hpp"

namespace fim {

// Non-empty, strictly ascending list of ItemIds.
using Itemset = std::vector<ItemId>;

// True if sorted `a` is a subset of sorted `b`.
bool is_subset_of(std::span<const ItemId> a, std::span<const ItemId> b);

// True if strictly ascending and non-empty.
bool is_canonical_itemset(std::span<const ItemId> items);

// FNV-1a over the id sequence, for hash containers keyed by Itemset.
struct ItemsetHash {
  std::size_t operator()(const Itemset& items) const {
    std::uint64_t h = 1469598103934665603ull;
    for (ItemId id : items) {
      h = (h ^ id) * 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace fim

#endif  // FIM_ITEMSET_HPP
