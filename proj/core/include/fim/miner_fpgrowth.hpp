#ifndef FIM_MINER_FPGROWTH_HPP
#define FIM_MINER_FPGROWTH_HPP

#include "fim/result.hpp"

namespace fim {

// Pattern-growth mining: builds the FP-tree, then for each frequent item
// projects its conditional database from the prefix paths and recurses. No
// candidate sets are materialized. Throws ThresholdError when sigma
// resolves to 0.
MiningResult mine_fpgrowth(const TransactionDatabase& db,
                           SupportThreshold sigma);

}  // namespace fim

#endif  // FIM_MINER_FPGROWTH_HPP
