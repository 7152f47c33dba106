#include "fim/miner_apriori.hpp"

#include <algorithm>
#include <unordered_set>

#include "fim/error.hpp"

namespace fim {

namespace {

bool all_k_subsets_frequent(
    const Itemset& candidate,
    const std::unordered_set<Itemset, ItemsetHash>& frequent) {
  Itemset subset;
  subset.reserve(candidate.size() - 1);
  for (std::size_t skip = 0; skip < candidate.size(); ++skip) {
    subset.clear();
    for (std::size_t i = 0; i < candidate.size(); ++i) {
      if (i != skip) {
        subset.push_back(candidate[i]);
      }
    }
    if (frequent.find(subset) == frequent.end()) {
      return false;
    }
  }
  return true;
}

}  // namespace

CandidateSet generate_candidates(const FrequentLevel& fk) {
  CandidateSet next;
  next.level_k = fk.level_k + 1;

  std::unordered_set<Itemset, ItemsetHash> frequent;
  frequent.reserve(fk.entries.size());
  for (const auto& entry : fk.entries) {
    frequent.insert(entry.items);
  }

  // Entries sharing their first k-1 items form contiguous blocks in the
  // lexicographic order, so the join only pairs within a block.
  const auto& entries = fk.entries;
  for (std::size_t block = 0; block < entries.size();) {
    std::size_t end = block + 1;
    const Itemset& base = entries[block].items;
    while (end < entries.size() &&
           std::equal(base.begin(), base.end() - 1,
                      entries[end].items.begin())) {
      ++end;
    }
    for (std::size_t i = block; i < end; ++i) {
      for (std::size_t j = i + 1; j < end; ++j) {
        Itemset candidate = entries[i].items;
        candidate.push_back(entries[j].items.back());
        if (all_k_subsets_frequent(candidate, frequent)) {
          next.candidates.push_back(std::move(candidate));
        }
      }
    }
    block = end;
  }
  next.support_acc.assign(next.candidates.size(), 0);
  return next;
}

void count_candidate_supports(const TransactionDatabase& db, CandidateSet& cs) {
  cs.support_acc.assign(cs.candidates.size(), 0);
  if (cs.candidates.empty()) {
    return;
  }
  for (const Basket& basket : db.baskets()) {
    for (std::size_t c = 0; c < cs.candidates.size(); ++c) {
      if (is_subset_of(cs.candidates[c], basket)) {
        ++cs.support_acc[c];
      }
    }
  }
}

MiningResult mine_apriori(const TransactionDatabase& db, SupportThreshold sigma,
                          AprioriStats* stats) {
  const std::uint64_t min_count = sigma.resolve(db.basket_count());
  if (min_count == 0) {
    throw ThresholdError("support threshold resolves to 0");
  }

  MiningResult result;
  result.threshold = sigma;
  result.basket_count = db.basket_count();
  AprioriStats local;

  CandidateSet ck;
  ck.level_k = 1;
  for (ItemId id = 0; id < db.item_count(); ++id) {
    ck.candidates.push_back(Itemset{id});
  }
  ck.support_acc.assign(ck.candidates.size(), 0);

  while (!ck.candidates.empty()) {
    count_candidate_supports(db, ck);
    ++local.db_scans;

    FrequentLevel fk;
    fk.level_k = ck.level_k;
    for (std::size_t c = 0; c < ck.candidates.size(); ++c) {
      if (ck.support_acc[c] >= min_count) {
        fk.entries.push_back({std::move(ck.candidates[c]), ck.support_acc[c]});
      }
    }
    if (!fk.entries.empty()) {
      ++local.levels;
    }
    result.entries.insert(result.entries.end(), fk.entries.begin(),
                          fk.entries.end());
    ck = generate_candidates(fk);
  }

  if (stats != nullptr) {
    *stats = local;
  }
  return result;
}

}  // namespace fim
