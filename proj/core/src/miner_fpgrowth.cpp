#include "fim/miner_fpgrowth.hpp"

#include <algorithm>

#include "fim/error.hpp"
#include "fim/fptree.hpp"

namespace fim {

namespace {

// Mines every frequent itemset that ends (in rank order) at one of the
// tree's header items, appending the accumulated prefix.
void grow(const FPTree& tree, std::uint64_t min_count, Itemset& prefix,
          std::vector<MiningResult::Entry>& out) {
  const auto& header = tree.header();
  for (auto row = header.rbegin(); row != header.rend(); ++row) {
    prefix.push_back(row->item);

    Itemset found = prefix;
    std::sort(found.begin(), found.end());
    out.push_back({std::move(found), row->total});

    const auto conditional = prefix_paths(tree, row->item);
    FPTree subtree = build_fptree(conditional, min_count, &tree.item_order());
    if (!subtree.empty()) {
      grow(subtree, min_count, prefix, out);
    }
    prefix.pop_back();
  }
}

}  // namespace

MiningResult mine_fpgrowth(const TransactionDatabase& db,
                           SupportThreshold sigma) {
  const std::uint64_t min_count = sigma.resolve(db.basket_count());
  if (min_count == 0) {
    throw ThresholdError("support threshold resolves to 0");
  }

  std::vector<std::uint64_t> supports(db.item_count(), 0);
  std::vector<WeightedBasket> baskets;
  baskets.reserve(db.basket_count());
  for (const Basket& basket : db.baskets()) {
    for (ItemId id : basket) {
      ++supports[id];
    }
    baskets.push_back({basket, 1});
  }

  // The rank order is fixed once from the top-level supports and reused by
  // every conditional tree.
  const ItemOrder order = ItemOrder::from_supports(supports);
  FPTree tree = build_fptree(baskets, min_count, &order);

  MiningResult result;
  result.threshold = sigma;
  result.basket_count = db.basket_count();
  Itemset prefix;
  grow(tree, min_count, prefix, result.entries);
  return result;
}

}  // namespace fim
