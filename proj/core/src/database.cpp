#include "fim/database.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fim/error.hpp"

namespace fim {

namespace {

bool has_whitespace(std::string_view token) {
  return std::any_of(token.begin(), token.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

}  // namespace

ItemId ItemDictionary::intern(std::string_view token) {
  if (token.empty()) {
    throw FormatError("empty item token");
  }
  if (has_whitespace(token)) {
    throw FormatError("item token contains whitespace: \"" +
                      std::string(token) + "\"");
  }
  auto it = token_to_id_.find(std::string(token));
  if (it != token_to_id_.end()) {
    return it->second;
  }
  const auto id = static_cast<ItemId>(id_to_token_.size());
  id_to_token_.emplace_back(token);
  token_to_id_.emplace(id_to_token_.back(), id);
  return id;
}

ItemId ItemDictionary::id_of(std::string_view token) const {
  auto it = token_to_id_.find(std::string(token));
  if (it == token_to_id_.end()) {
    throw UnknownItemError("unknown item token: \"" + std::string(token) +
                           "\"");
  }
  return it->second;
}

bool ItemDictionary::contains(std::string_view token) const {
  return token_to_id_.find(std::string(token)) != token_to_id_.end();
}

const std::string& ItemDictionary::token_of(ItemId id) const {
  if (id >= id_to_token_.size()) {
    throw UnknownItemError("item id out of range: " + std::to_string(id));
  }
  return id_to_token_[id];
}

TransactionDatabase parse_database(std::istream& in) {
  if (in.fail()) {
    throw IoError("cannot read transaction stream");
  }
  ItemDictionary dict;
  std::vector<Basket> baskets;
  std::string line;
  while (std::getline(in, line)) {
    Basket basket;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                   line[pos] == '\r')) {
        ++pos;
      }
      std::size_t start = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' &&
             line[pos] != '\r') {
        ++pos;
      }
      if (pos > start) {
        basket.push_back(
            dict.intern(std::string_view(line).substr(start, pos - start)));
      }
    }
    if (basket.empty()) {
      continue;  // blank line
    }
    std::sort(basket.begin(), basket.end());
    basket.erase(std::unique(basket.begin(), basket.end()), basket.end());
    baskets.push_back(std::move(basket));
  }
  if (in.bad()) {
    throw IoError("I/O failure while reading transaction stream");
  }
  return TransactionDatabase(std::move(baskets), std::move(dict));
}

TransactionDatabase parse_database(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_database(in);
}

}  // namespace fim
