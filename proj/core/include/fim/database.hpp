#ifndef FIM_DATABASE_HPP
#define FIM_DATABASE_HPP

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fim {

// Dense item identifier, assigned in first-seen order starting at 0.
using ItemId = std::uint32_t;

// A basket holds the distinct items of one transaction, sorted by ItemId.
using Basket = std::vector<ItemId>;

// Bijection between item token strings and dense ItemIds.
class ItemDictionary {
public:
  // Returns the id of `token`, assigning the next dense id on first sight.
  // Throws FormatError for empty or whitespace-containing tokens.
  ItemId intern(std::string_view token);

  // Returns the id of `token` or throws UnknownItemError.
  ItemId id_of(std::string_view token) const;

  bool contains(std::string_view token) const;
  const std::string& token_of(ItemId id) const;

  std::size_t size() const { return id_to_token_.size(); }

private:
  std::unordered_map<std::string, ItemId> token_to_id_;
  std::vector<std::string> id_to_token_;
};

// Immutable collection of baskets over interned items. Safe to share across
// concurrent readers once constructed.
class TransactionDatabase {
public:
  TransactionDatabase() = default;
  TransactionDatabase(std::vector<Basket> baskets, ItemDictionary dictionary)
      : baskets_(std::move(baskets)), dictionary_(std::move(dictionary)) {}

  const std::vector<Basket>& baskets() const { return baskets_; }
  const ItemDictionary& dictionary() const { return dictionary_; }

  // N: total number of baskets.
  std::size_t basket_count() const { return baskets_.size(); }
  std::size_t item_count() const { return dictionary_.size(); }

private:
  std::vector<Basket> baskets_;
  ItemDictionary dictionary_;
};

// Reads one basket per non-blank line, items separated by ASCII spaces/tabs.
// Duplicate tokens within a line are collapsed; items are sorted by ItemId.
// Zero non-blank lines yield an empty database. Throws IoError if the stream
// is in a failed state, FormatError for bad tokens.
TransactionDatabase parse_database(std::istream& in);

// Convenience overload over a whole text buffer.
TransactionDatabase parse_database(std::string_view text);

}  // namespace fim

#endif  // FIM_DATABASE_HPP
