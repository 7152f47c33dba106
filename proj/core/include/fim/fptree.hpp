#ifndef FIM_FPTREE_HPP
#define FIM_FPTREE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "fim/database.hpp"
#include "fim/itemset.hpp"

namespace fim {

// Total order used to arrange basket items before trie insertion:
// descending support, ties broken by ascending ItemId. Lower rank means
// closer to the root.
class ItemOrder {
public:
  ItemOrder() = default;

  // support_by_item is indexed by ItemId.
  static ItemOrder from_supports(std::span<const std::uint64_t> support_by_item);

  std::uint32_t rank(ItemId id) const { return rank_[id]; }
  std::size_t size() const { return rank_.size(); }

private:
  std::vector<std::uint32_t> rank_;
};

// A basket annotated with a multiplicity. Arises from path compression when
// projecting conditional databases; items are listed in ascending rank.
struct WeightedBasket {
  std::vector<ItemId> items;
  std::uint64_t weight = 1;
};

// Prefix tree over the baskets themselves, with per-node counts and
// per-item chains threaded through next_same_item links.
class FPTree {
public:
  struct Node {
    ItemId item = 0;  // meaningless on the root
    std::uint64_t count = 0;
    Node* parent = nullptr;  // nullptr marks the root
    Node* next_same_item = nullptr;
    std::map<ItemId, std::unique_ptr<Node>> children;

    bool is_root() const { return parent == nullptr; }
  };

  // One row per frequent item, in rank order. The chain starting at `head`
  // visits every node of that item exactly once; the node counts along it
  // sum to `total`.
  struct HeaderRow {
    ItemId item = 0;
    std::uint64_t total = 0;
    Node* head = nullptr;
  };

  FPTree(std::unique_ptr<Node> root, std::vector<HeaderRow> header,
         ItemOrder order)
      : root_(std::move(root)),
        header_(std::move(header)),
        order_(std::move(order)) {}

  const Node& root() const { return *root_; }
  const std::vector<HeaderRow>& header() const { return header_; }
  const ItemOrder& item_order() const { return order_; }
  bool empty() const { return header_.empty(); }

  // Throws UnknownItemError when the item has no header row.
  const HeaderRow& find_header(ItemId item) const;

private:
  std::unique_ptr<Node> root_;
  std::vector<HeaderRow> header_;
  ItemOrder order_;
};

// Builds the tree for the weighted baskets: items whose weighted support is
// below min_count are dropped, the rest are sorted by rank and inserted
// along shared prefixes, adding each basket's weight to the path counts.
// When `order` is null the order is derived from the baskets themselves;
// recursive projections pass the top-level order down unchanged.
FPTree build_fptree(std::span<const WeightedBasket> baskets,
                    std::uint64_t min_count, const ItemOrder* order = nullptr);

// The conditional database of `item`: one weighted basket per chain node,
// holding the items on its root path (the node's own item excluded) with
// the node's count as weight. Total emitted weight equals the item's
// support in the tree.
std::vector<WeightedBasket> prefix_paths(const FPTree& tree, ItemId item);

}  // namespace fim

#endif  // FIM_FPTREE_HPP
