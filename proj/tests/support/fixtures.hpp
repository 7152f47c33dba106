#ifndef FIM_TESTS_SUPPORT_FIXTURES_HPP
#define FIM_TESTS_SUPPORT_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fim/database.hpp"
#include "fim/result.hpp"

namespace fim::test {

// The five-basket store example used across the suites.
inline constexpr const char* kDb5Text =
    "mp3player usb-charger book-dct book-ths\n"
    "mp3player usb-charger\n"
    "usb-charger mp3player book-dct book-ths\n"
    "usb-charger\n"
    "book-dct book-ths\n";

// Canonical serialization of mining kDb5Text at an absolute threshold of 2:
// all 15 non-empty itemsets qualify.
inline constexpr const char* kDb5Sigma2Canonical =
    "book-dct : 3\n"
    "book-ths : 3\n"
    "mp3player : 3\n"
    "usb-charger : 4\n"
    "book-dct book-ths : 3\n"
    "book-dct mp3player : 2\n"
    "book-dct usb-charger : 2\n"
    "book-ths mp3player : 2\n"
    "book-ths usb-charger : 2\n"
    "mp3player usb-charger : 3\n"
    "book-dct book-ths mp3player : 2\n"
    "book-dct book-ths usb-charger : 2\n"
    "book-dct mp3player usb-charger : 2\n"
    "book-ths mp3player usb-charger : 2\n"
    "book-dct book-ths mp3player usb-charger : 2\n";

inline TransactionDatabase db5() { return parse_database(kDb5Text); }

// Seeded random database within the brute-force miner's limits.
inline TransactionDatabase random_database(std::mt19937_64& rng,
                                           std::size_t max_items = 12,
                                           std::size_t max_baskets = 64,
                                           std::size_t max_basket_size = 8) {
  const std::size_t n_items = 1 + rng() % max_items;
  const std::size_t n_baskets = rng() % (max_baskets + 1);
  std::string text;
  for (std::size_t b = 0; b < n_baskets; ++b) {
    const std::size_t size = 1 + rng() % std::min(max_basket_size, n_items);
    for (std::size_t k = 0; k < size; ++k) {
      if (k > 0) {
        text += ' ';
      }
      text += 'i';
      text += std::to_string(rng() % n_items);
    }
    text += '\n';
  }
  return parse_database(text);
}

// Definitional oracle: enumerates the global power set of all items and
// counts containing baskets with its own subset check, independent of the
// library's mining and support code.
inline std::map<std::vector<ItemId>, std::uint64_t> powerset_oracle(
    const TransactionDatabase& db, std::uint64_t min_count) {
  std::map<std::vector<ItemId>, std::uint64_t> frequent;
  const std::size_t n = db.item_count();
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::vector<ItemId> itemset;
    for (std::size_t bit = 0; bit < n; ++bit) {
      if (mask & (1ull << bit)) {
        itemset.push_back(static_cast<ItemId>(bit));
      }
    }
    std::uint64_t count = 0;
    for (const Basket& basket : db.baskets()) {
      bool contains_all = true;
      for (ItemId id : itemset) {
        if (std::find(basket.begin(), basket.end(), id) == basket.end()) {
          contains_all = false;
          break;
        }
      }
      if (contains_all) {
        ++count;
      }
    }
    if (count >= min_count) {
      frequent.emplace(std::move(itemset), count);
    }
  }
  return frequent;
}

// MiningResult entries as a sorted (itemset, support) map for set equality.
inline std::map<std::vector<ItemId>, std::uint64_t> as_map(
    const MiningResult& result) {
  std::map<std::vector<ItemId>, std::uint64_t> map;
  for (const auto& entry : result.entries) {
    map.emplace(entry.items, entry.support);
  }
  return map;
}

}  // namespace fim::test

#endif  // FIM_TESTS_SUPPORT_FIXTURES_HPP
