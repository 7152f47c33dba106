#include <doctest.h>

#include <random>

#include "fim/error.hpp"
#include "fim/miner_eclat.hpp"
#include "fim/miner_naive.hpp"
#include "fim/result_trie.hpp"

#include "support/fixtures.hpp"

using namespace fim;

namespace {

const Tidset* column_of(const VerticalDatabase& vdb, ItemId item) {
  for (const auto& column : vdb.columns) {
    if (column.item == item) {
      return &column.tids;
    }
  }
  return nullptr;
}

}  // namespace

TEST_CASE("vertical database lists covering baskets per item") {
  const TransactionDatabase db = test::db5();
  const VerticalDatabase vdb =
      vertical_database(db, SupportThreshold::absolute(2));

  const Tidset* mp3 = column_of(vdb, db.dictionary().id_of("mp3player"));
  REQUIRE(mp3 != nullptr);
  CHECK(*mp3 == Tidset{0, 1, 2});

  const Tidset* usb = column_of(vdb, db.dictionary().id_of("usb-charger"));
  REQUIRE(usb != nullptr);
  CHECK(*usb == Tidset{0, 1, 2, 3});
}

TEST_CASE("vertical database drops items below threshold") {
  const TransactionDatabase db = test::db5();
  const VerticalDatabase vdb =
      vertical_database(db, SupportThreshold::absolute(4));
  REQUIRE(vdb.columns.size() == 1);
  CHECK(vdb.columns[0].item == db.dictionary().id_of("usb-charger"));
}

TEST_CASE("vertical database of an empty database is empty") {
  const TransactionDatabase empty;
  CHECK(vertical_database(empty, SupportThreshold::absolute(1))
            .columns.empty());
}

TEST_CASE("column lengths sum to the frequent-item incidence count") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 30; ++round) {
    const TransactionDatabase db = test::random_database(rng);
    const VerticalDatabase vdb =
        vertical_database(db, SupportThreshold::absolute(2));
    std::size_t total = 0;
    for (const auto& column : vdb.columns) {
      CHECK(std::is_sorted(column.tids.begin(), column.tids.end()));
      total += column.tids.size();
    }
    std::size_t expected = 0;
    for (const Basket& basket : db.baskets()) {
      for (ItemId id : basket) {
        if (column_of(vdb, id) != nullptr) {
          ++expected;
        }
      }
    }
    CHECK(total == expected);
  }
}

TEST_CASE("tidset intersection") {
  CHECK(intersect_tidsets({0, 1, 2}, {0, 1, 2, 3}) == Tidset{0, 1, 2});
  CHECK(intersect_tidsets({0, 1, 2}, {0, 1, 2}) == Tidset{0, 1, 2});
  CHECK(intersect_tidsets({0, 2}, {1, 3}).empty());
  CHECK(intersect_tidsets({}, {1, 2}).empty());
}

TEST_CASE("eclat reproduces the worked example") {
  const TransactionDatabase db = test::db5();
  const MiningResult result = mine_eclat(db, SupportThreshold::absolute(2));
  CHECK(result.entries.size() == 15);
  CHECK(test::as_map(result) == test::powerset_oracle(db, 2));

  Itemset triple = {db.dictionary().id_of("mp3player"),
                    db.dictionary().id_of("usb-charger"),
                    db.dictionary().id_of("book-dct")};
  std::sort(triple.begin(), triple.end());
  const auto map = test::as_map(result);
  auto it = map.find(triple);
  REQUIRE(it != map.end());
  CHECK(it->second == 2);
}

TEST_CASE("eclat rejects a threshold resolving to zero") {
  const TransactionDatabase empty;
  CHECK_THROWS_AS(mine_eclat(empty, SupportThreshold::relative(0.3)),
                  ThresholdError);
}

TEST_CASE("eclat equals the brute-force miner on random instances") {
  std::mt19937_64 rng(4096);
  for (int round = 0; round < 200; ++round) {
    const TransactionDatabase db = test::random_database(rng);
    const auto sigma = SupportThreshold::absolute(1 + rng() % 3);
    REQUIRE(test::as_map(mine_eclat(db, sigma)) ==
            test::as_map(mine_naive(db, sigma)));
  }
}

TEST_CASE("reported support equals the member tidset intersection size") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    const TransactionDatabase db = test::random_database(rng);
    if (db.basket_count() == 0) {
      continue;
    }
    const auto sigma = SupportThreshold::absolute(1 + rng() % 3);
    const MiningResult result = mine_eclat(db, sigma);
    const VerticalDatabase full =
        vertical_database(db, SupportThreshold::absolute(1));
    for (const auto& entry : result.entries) {
      const Tidset* first = column_of(full, entry.items[0]);
      REQUIRE(first != nullptr);
      Tidset cover = *first;
      for (std::size_t i = 1; i < entry.items.size(); ++i) {
        const Tidset* column = column_of(full, entry.items[i]);
        REQUIRE(column != nullptr);
        cover = intersect_tidsets(cover, *column);
      }
      REQUIRE(cover.size() == entry.support);
    }
  }
}

TEST_CASE("each itemset is reported exactly once") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 30; ++round) {
    const TransactionDatabase db = test::random_database(rng);
    const MiningResult result = mine_eclat(db, SupportThreshold::absolute(2));
    const auto map = test::as_map(result);
    CHECK(map.size() == result.entries.size());
    for (const auto& entry : result.entries) {
      CHECK(std::is_sorted(entry.items.begin(), entry.items.end()));
    }
  }
}

TEST_CASE("result trie stores supports at the right-most item") {
  ResultTrie trie;
  trie.insert(Itemset{0, 2}, 3);
  trie.insert(Itemset{0}, 5);
  trie.insert(Itemset{0, 2, 4}, 2);
  CHECK(trie.size() == 3);
  CHECK(trie.lookup(Itemset{0, 2}) == 3);
  CHECK(trie.lookup(Itemset{0}) == 5);
  CHECK(!trie.lookup(Itemset{2}).has_value());
  CHECK(!trie.lookup(Itemset{0, 4}).has_value());

  const auto entries = trie.flatten();
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].items == Itemset{0});
  CHECK(entries[1].items == Itemset{0, 2});
  CHECK(entries[2].items == Itemset{0, 2, 4});
}
