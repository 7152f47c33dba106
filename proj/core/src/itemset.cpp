#include "fim/itemset.hpp"

namespace fim {

bool is_subset_of(std::span<const ItemId> a, std::span<const ItemId> b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      return false;
    }
  }
  return i == a.size();
}

bool is_canonical_itemset(std::span<const ItemId> items) {
  if (items.empty()) {
    return false;
  }
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i - 1] >= items[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace fim
