#include "fim/miner_eclat.hpp"

#include <algorithm>

#include "fim/error.hpp"
#include "fim/result_trie.hpp"

namespace fim {

VerticalDatabase vertical_database(const TransactionDatabase& db,
                                   SupportThreshold sigma) {
  const std::uint64_t min_count = sigma.resolve(db.basket_count());
  std::vector<Tidset> columns(db.item_count());
  TransactionId tid = 0;
  for (const Basket& basket : db.baskets()) {
    for (ItemId id : basket) {
      columns[id].push_back(tid);
    }
    ++tid;
  }
  VerticalDatabase vdb;
  for (ItemId id = 0; id < columns.size(); ++id) {
    if (columns[id].size() >= min_count) {
      vdb.columns.push_back({id, std::move(columns[id])});
    }
  }
  return vdb;
}

Tidset intersect_tidsets(const Tidset& a, const Tidset& b) {
  Tidset out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

namespace {

// Extends `prefix` with every column item in turn, then recurses into the
// conditional vertical database of items greater than the chosen one.
void eclat_extend(const std::vector<VerticalDatabase::Column>& columns,
                  std::uint64_t min_count, Itemset& prefix, ResultTrie& out) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    prefix.push_back(columns[i].item);
    out.insert(prefix, columns[i].tids.size());

    std::vector<VerticalDatabase::Column> conditional;
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      Tidset cover = intersect_tidsets(columns[i].tids, columns[j].tids);
      if (cover.size() >= min_count) {
        conditional.push_back({columns[j].item, std::move(cover)});
      }
    }
    if (!conditional.empty()) {
      eclat_extend(conditional, min_count, prefix, out);
    }
    prefix.pop_back();
  }
}

}  // namespace

MiningResult mine_eclat(const TransactionDatabase& db, SupportThreshold sigma) {
  const std::uint64_t min_count = sigma.resolve(db.basket_count());
  if (min_count == 0) {
    throw ThresholdError("support threshold resolves to 0");
  }

  VerticalDatabase vdb = vertical_database(db, sigma);
  ResultTrie trie;
  Itemset prefix;
  eclat_extend(vdb.columns, min_count, prefix, trie);

  MiningResult result;
  result.threshold = sigma;
  result.basket_count = db.basket_count();
  result.entries = trie.flatten();
  return result;
}

}  // namespace fim
