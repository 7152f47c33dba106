#ifndef FIM_RESULT_TRIE_HPP
#define FIM_RESULT_TRIE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>

#include "fim/result.hpp"

namespace fim {

// Prefix trie for accumulating found itemsets. The root is empty; a path of
// ascending ItemIds spells an itemset and the node holding the right-most
// item stores its support.
class ResultTrie {
public:
  struct Node {
    std::map<ItemId, std::unique_ptr<Node>> children;
    std::uint64_t support = 0;
    bool terminal = false;  // a stored itemset ends here
  };

  // items must be strictly ascending. Re-inserting an itemset overwrites
  // its support.
  void insert(std::span<const ItemId> items, std::uint64_t support);

  std::optional<std::uint64_t> lookup(std::span<const ItemId> items) const;

  // Number of stored itemsets.
  std::size_t size() const { return size_; }

  const Node& root() const { return root_; }

  // Depth-first flatten into (itemset, support) entries, paths ascending.
  std::vector<MiningResult::Entry> flatten() const;

private:
  Node root_;
  std::size_t size_ = 0;
};

}  // namespace fim

#endif  // FIM_RESULT_TRIE_HPP
