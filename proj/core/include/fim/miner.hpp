#ifndef FIM_MINER_HPP
#define FIM_MINER_HPP

#include <string>
#include <string_view>

#include "fim/result.hpp"

namespace fim {

enum class Algorithm { naive, apriori, eclat, fpgrowth };

// Throws ConfigError for an unrecognized name.
Algorithm parse_algorithm(std::string_view name);

std::string algorithm_name(Algorithm algorithm);

// Runs the selected miner. All four produce identical (itemset, support)
// sets; they differ only in search strategy and cost.
MiningResult mine(Algorithm algorithm, const TransactionDatabase& db,
                  SupportThreshold sigma);

}  // namespace fim

#endif  // FIM_MINER_HPP
