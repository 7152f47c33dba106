#ifndef FIM_MINER_ECLAT_HPP
#define FIM_MINER_ECLAT_HPP

#include <cstdint>
#include <vector>

#include "fim/result.hpp"

namespace fim {

// 0-based index of a basket within the database.
using TransactionId = std::uint32_t;

// Strictly ascending transaction ids covering an itemset; the length is the
// itemset's support.
using Tidset = std::vector<TransactionId>;

// Vertical layout: one tidset column per item whose support meets sigma.
struct VerticalDatabase {
  struct Column {
    ItemId item;
    Tidset tids;
  };
  std::vector<Column> columns;  // ascending by item
};

// Builds the item -> tidset index, keeping only items with support >= sigma.
VerticalDatabase vertical_database(const TransactionDatabase& db,
                                   SupportThreshold sigma);

Tidset intersect_tidsets(const Tidset& a, const Tidset& b);

// Depth-first vertical mining: extends each prefix with items greater than
// the last, intersecting tidsets and pruning below-threshold covers. Throws
// ThresholdError when sigma resolves to 0.
MiningResult mine_eclat(const TransactionDatabase& db, SupportThreshold sigma);

}  // namespace fim

#endif  // FIM_MINER_ECLAT_HPP
