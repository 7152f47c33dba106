#include "fim/fptree.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "fim/error.hpp"

namespace fim {

ItemOrder ItemOrder::from_supports(
    std::span<const std::uint64_t> support_by_item) {
  std::vector<ItemId> ids(support_by_item.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](ItemId a, ItemId b) {
    if (support_by_item[a] != support_by_item[b]) {
      return support_by_item[a] > support_by_item[b];
    }
    return a < b;
  });
  ItemOrder order;
  order.rank_.resize(ids.size());
  for (std::uint32_t r = 0; r < ids.size(); ++r) {
    order.rank_[ids[r]] = r;
  }
  return order;
}

const FPTree::HeaderRow& FPTree::find_header(ItemId item) const {
  for (const HeaderRow& row : header_) {
    if (row.item == item) {
      return row;
    }
  }
  throw UnknownItemError("item " + std::to_string(item) +
                         " has no header row");
}

FPTree build_fptree(std::span<const WeightedBasket> baskets,
                    std::uint64_t min_count, const ItemOrder* order) {
  std::unordered_map<ItemId, std::uint64_t> supports;
  for (const WeightedBasket& basket : baskets) {
    for (ItemId id : basket.items) {
      supports[id] += basket.weight;
    }
  }

  ItemOrder derived;
  if (order == nullptr) {
    std::uint64_t max_id = 0;
    for (const auto& [id, support] : supports) {
      max_id = std::max<std::uint64_t>(max_id, id);
    }
    std::vector<std::uint64_t> by_item(supports.empty() ? 0 : max_id + 1, 0);
    for (const auto& [id, support] : supports) {
      by_item[id] = support;
    }
    derived = ItemOrder::from_supports(by_item);
    order = &derived;
  }

  std::vector<FPTree::HeaderRow> header;
  for (const auto& [id, support] : supports) {
    if (support >= min_count) {
      header.push_back({id, support, nullptr});
    }
  }
  std::sort(header.begin(), header.end(),
            [&](const FPTree::HeaderRow& a, const FPTree::HeaderRow& b) {
              return order->rank(a.item) < order->rank(b.item);
            });

  std::unordered_map<ItemId, std::size_t> row_of;
  std::vector<FPTree::Node*> chain_tail(header.size(), nullptr);
  for (std::size_t i = 0; i < header.size(); ++i) {
    row_of.emplace(header[i].item, i);
  }

  auto root = std::make_unique<FPTree::Node>();
  std::vector<ItemId> kept;
  for (const WeightedBasket& basket : baskets) {
    kept.clear();
    for (ItemId id : basket.items) {
      if (row_of.find(id) != row_of.end()) {
        kept.push_back(id);
      }
    }
    std::sort(kept.begin(), kept.end(), [&](ItemId a, ItemId b) {
      return order->rank(a) < order->rank(b);
    });

    FPTree::Node* node = root.get();
    for (ItemId id : kept) {
      auto& child = node->children[id];
      if (!child) {
        child = std::make_unique<FPTree::Node>();
        child->item = id;
        child->parent = node;
        const std::size_t row = row_of.at(id);
        if (chain_tail[row] == nullptr) {
          header[row].head = child.get();
        } else {
          chain_tail[row]->next_same_item = child.get();
        }
        chain_tail[row] = child.get();
      }
      child->count += basket.weight;
      node = child.get();
    }
  }

  return FPTree(std::move(root), std::move(header), *order);
}

std::vector<WeightedBasket> prefix_paths(const FPTree& tree, ItemId item) {
  const FPTree::HeaderRow& row = tree.find_header(item);
  std::vector<WeightedBasket> paths;
  for (const FPTree::Node* node = row.head; node != nullptr;
       node = node->next_same_item) {
    WeightedBasket path;
    path.weight = node->count;
    for (const FPTree::Node* up = node->parent; !up->is_root();
         up = up->parent) {
      path.items.push_back(up->item);
    }
    std::reverse(path.items.begin(), path.items.end());  // ascending rank
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace fim
