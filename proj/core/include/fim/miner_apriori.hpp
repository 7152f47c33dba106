#ifndef FIM_MINER_APRIORI_HPP
#define FIM_MINER_APRIORI_HPP

#include <cstdint>
#include <vector>

#include "fim/result.hpp"

namespace fim {

// Candidate itemsets of one breadth-first level, with support accumulators.
struct CandidateSet {
  std::uint32_t level_k = 0;
  std::vector<Itemset> candidates;         // distinct, sorted lexicographically
  std::vector<std::uint64_t> support_acc;  // parallel to candidates
};

// Frequent itemsets of one level, sorted lexicographically.
struct FrequentLevel {
  std::uint32_t level_k = 0;
  std::vector<MiningResult::Entry> entries;
};

struct AprioriStats {
  std::size_t db_scans = 0;  // one per counted non-empty candidate level
  std::size_t levels = 0;    // number of non-empty frequent levels
};

// Joins pairs of level-k itemsets sharing their first k-1 items into
// (k+1)-candidates, then prunes any candidate with an infrequent k-subset.
CandidateSet generate_candidates(const FrequentLevel& fk);

// Accumulates each candidate's support in exactly one pass over the
// database, testing candidate-subset-of-basket per transaction.
void count_candidate_supports(const TransactionDatabase& db, CandidateSet& cs);

// Level-wise breadth-first mining: count C_k, extract F_k, join/prune into
// C_{k+1}, until no candidates remain. Throws ThresholdError when sigma
// resolves to 0.
MiningResult mine_apriori(const TransactionDatabase& db, SupportThreshold sigma,
                          AprioriStats* stats = nullptr);

}  // namespace fim

#endif  // FIM_MINER_APRIORI_HPP
