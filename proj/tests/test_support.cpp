#include <doctest.h>

#include <random>

#include "fim/error.hpp"
#include "fim/support.hpp"

#include "support/fixtures.hpp"

using namespace fim;

namespace {

Itemset ids_of(const TransactionDatabase& db,
               std::initializer_list<const char*> tokens) {
  Itemset items;
  for (const char* token : tokens) {
    items.push_back(db.dictionary().id_of(token));
  }
  std::sort(items.begin(), items.end());
  return items;
}

}  // namespace

TEST_CASE("support counts on the five-basket example") {
  const TransactionDatabase db = test::db5();
  CHECK(support_of(db, ids_of(db, {"mp3player", "usb-charger"})) == 3);
  CHECK(support_of(db, ids_of(db, {"usb-charger"})) == 4);
  CHECK(support_of(db, ids_of(db, {"book-dct", "book-ths"})) == 3);
  CHECK(support_of(db, ids_of(db, {"mp3player", "usb-charger", "book-dct",
                                   "book-ths"})) == 2);
}

TEST_CASE("support over an empty database is zero") {
  const TransactionDatabase empty;
  const Itemset x = {0};
  CHECK_THROWS_AS(support_of(empty, x), UnknownItemError);  // id unknown
  const TransactionDatabase db = parse_database("a\n");
  CHECK(support_of(TransactionDatabase({}, db.dictionary()), Itemset{0}) == 0);
}

TEST_CASE("support rejects foreign item ids") {
  const TransactionDatabase db = test::db5();
  CHECK_THROWS_AS(support_of(db, Itemset{99}), UnknownItemError);
}

TEST_CASE("relative support") {
  CHECK(relative_support(3, 5) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(relative_support(0, 5) == 0.0);
  CHECK(relative_support(5, 5) == 1.0);
  CHECK_THROWS_AS(relative_support(0, 0), ThresholdError);
}

TEST_CASE("threshold construction and resolution") {
  CHECK_THROWS_AS(SupportThreshold::absolute(0), ConfigError);
  CHECK_THROWS_AS(SupportThreshold::relative(0.0), ConfigError);
  CHECK_THROWS_AS(SupportThreshold::relative(1.5), ConfigError);
  CHECK_THROWS_AS(SupportThreshold::relative(-0.1), ConfigError);

  CHECK(SupportThreshold::absolute(3).resolve(5) == 3);
  CHECK(SupportThreshold::absolute(3).resolve(0) == 3);
  // ceil semantics keep "at least" guarantees under rounding
  CHECK(SupportThreshold::relative(0.6).resolve(5) == 3);
  CHECK(SupportThreshold::relative(0.5).resolve(5) == 3);
  CHECK(SupportThreshold::relative(0.01).resolve(100000) == 1000);
  CHECK(SupportThreshold::relative(0.3).resolve(10) == 3);
  CHECK(SupportThreshold::relative(0.7).resolve(10) == 7);
  CHECK(SupportThreshold::relative(1.0).resolve(7) == 7);
  CHECK(SupportThreshold::relative(0.001).resolve(10) == 1);
  CHECK(SupportThreshold::relative(0.5).resolve(0) == 0);
}

TEST_CASE("support is monotone under subset extension") {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 100; ++round) {
    const TransactionDatabase db = test::random_database(rng);
    if (db.item_count() == 0) {
      continue;
    }
    // random superset Y, random subset X of Y
    Itemset superset;
    for (ItemId id = 0; id < db.item_count(); ++id) {
      if (rng() % 2 == 0) {
        superset.push_back(id);
      }
    }
    if (superset.empty()) {
      superset.push_back(static_cast<ItemId>(rng() % db.item_count()));
    }
    Itemset subset;
    for (ItemId id : superset) {
      if (rng() % 2 == 0) {
        subset.push_back(id);
      }
    }
    if (subset.empty()) {
      subset.push_back(superset[rng() % superset.size()]);
    }
    CHECK(support_of(db, subset) >= support_of(db, superset));
    const double rel =
        db.basket_count() == 0
            ? 0.0
            : relative_support(support_of(db, subset), db.basket_count());
    CHECK(rel >= 0.0);
    CHECK(rel <= 1.0);
  }
}
