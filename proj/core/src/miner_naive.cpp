#include "fim/miner_naive.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>

#include "fim/error.hpp"

namespace fim {

MiningResult mine_naive(const TransactionDatabase& db, SupportThreshold sigma) {
  const std::uint64_t min_count = sigma.resolve(db.basket_count());
  if (min_count == 0) {
    throw ThresholdError("support threshold resolves to 0");
  }
  if (db.item_count() > kNaiveMaxDistinctItems) {
    throw CapacityError(
        "naive miner limited to " + std::to_string(kNaiveMaxDistinctItems) +
        " distinct items, got " + std::to_string(db.item_count()));
  }
  for (const Basket& basket : db.baskets()) {
    if (basket.size() > kNaiveMaxBasketSize) {
      throw CapacityError(
          "naive miner limited to baskets of " +
          std::to_string(kNaiveMaxBasketSize) + " items, got " +
          std::to_string(basket.size()));
    }
  }

  // Counting each basket's own subsets instead of the full power set of all
  // items keeps memory bounded by what actually occurs in the data.
  std::unordered_map<Itemset, std::uint64_t, ItemsetHash> counts;
  Itemset subset;
  for (const Basket& basket : db.baskets()) {
    const std::uint32_t n = static_cast<std::uint32_t>(basket.size());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      subset.clear();
      for (std::uint32_t bit = 0; bit < n; ++bit) {
        if (mask & (1u << bit)) {
          subset.push_back(basket[bit]);
        }
      }
      ++counts[subset];
    }
  }

  MiningResult result;
  result.threshold = sigma;
  result.basket_count = db.basket_count();
  for (auto& [items, count] : counts) {
    if (count >= min_count) {
      result.entries.push_back({items, count});
    }
  }
  return result;
}

}  // namespace fim
