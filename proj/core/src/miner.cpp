#include "fim/miner.hpp"

#include "fim/error.hpp"
#include "fim/miner_apriori.hpp"
#include "fim/miner_eclat.hpp"
#include "fim/miner_fpgrowth.hpp"
#include "fim/miner_naive.hpp"

namespace fim {

Algorithm parse_algorithm(std::string_view name) {
  if (name == "naive") return Algorithm::naive;
  if (name == "apriori") return Algorithm::apriori;
  if (name == "eclat") return Algorithm::eclat;
  if (name == "fpgrowth") return Algorithm::fpgrowth;
  throw ConfigError("unknown algorithm: \"" + std::string(name) +
                    "\" (expected naive, apriori, eclat or fpgrowth)");
}

std::string algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::naive:
      return "naive";
    case Algorithm::apriori:
      return "apriori";
    case Algorithm::eclat:
      return "eclat";
    case Algorithm::fpgrowth:
      return "fpgrowth";
  }
  return "unknown";
}

MiningResult mine(Algorithm algorithm, const TransactionDatabase& db,
                  SupportThreshold sigma) {
  switch (algorithm) {
    case Algorithm::naive:
      return mine_naive(db, sigma);
    case Algorithm::apriori:
      return mine_apriori(db, sigma);
    case Algorithm::eclat:
      return mine_eclat(db, sigma);
    case Algorithm::fpgrowth:
      return mine_fpgrowth(db, sigma);
  }
  throw ConfigError("invalid algorithm value");
}

}  // namespace fim
