#include "fim/result_trie.hpp"

namespace fim {

void ResultTrie::insert(std::span<const ItemId> items, std::uint64_t support) {
  Node* node = &root_;
  for (ItemId id : items) {
    auto& child = node->children[id];
    if (!child) {
      child = std::make_unique<Node>();
    }
    node = child.get();
  }
  if (!node->terminal) {
    node->terminal = true;
    ++size_;
  }
  node->support = support;
}

std::optional<std::uint64_t> ResultTrie::lookup(
    std::span<const ItemId> items) const {
  const Node* node = &root_;
  for (ItemId id : items) {
    auto it = node->children.find(id);
    if (it == node->children.end()) {
      return std::nullopt;
    }
    node = it->second.get();
  }
  if (!node->terminal) {
    return std::nullopt;
  }
  return node->support;
}

namespace {

void flatten_into(const ResultTrie::Node& node, Itemset& path,
                  std::vector<MiningResult::Entry>& out) {
  if (node.terminal) {
    out.push_back({path, node.support});
  }
  for (const auto& [id, child] : node.children) {
    path.push_back(id);
    flatten_into(*child, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<MiningResult::Entry> ResultTrie::flatten() const {
  std::vector<MiningResult::Entry> out;
  Itemset path;
  flatten_into(root_, path, out);
  return out;
}

}  // namespace fim
