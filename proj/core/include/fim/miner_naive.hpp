#ifndef FIM_MINER_NAIVE_HPP
#define FIM_MINER_NAIVE_HPP

#include <cstddef>

#include "fim/result.hpp"

namespace fim {

// Tractability limits for the brute-force miner. Worst case stays under
// ~16M counter entries.
inline constexpr std::size_t kNaiveMaxBasketSize = 20;
inline constexpr std::size_t kNaiveMaxDistinctItems = 24;

// Brute-force reference miner: counts every non-empty subset of every
// basket, then keeps the ones with support >= sigma. Used as ground truth
// for the other miners on small instances.
//
// Throws CapacityError when a basket exceeds kNaiveMaxBasketSize items or
// the database exceeds kNaiveMaxDistinctItems distinct items, and
// ThresholdError when sigma resolves to 0.
MiningResult mine_naive(const TransactionDatabase& db, SupportThreshold sigma);

}  // namespace fim

#endif  // FIM_MINER_NAIVE_HPP
