#include "fim/result.hpp"

#include <algorithm>
#include <sstream>

#include "fim/error.hpp"

namespace fim {

std::vector<CanonicalEntry> canonical_entries(const MiningResult& result,
                                              const ItemDictionary& dict) {
  std::vector<CanonicalEntry> out;
  out.reserve(result.entries.size());
  for (const auto& entry : result.entries) {
    CanonicalEntry ce;
    ce.tokens.reserve(entry.items.size());
    for (ItemId id : entry.items) {
      ce.tokens.push_back(dict.token_of(id));
    }
    std::sort(ce.tokens.begin(), ce.tokens.end());
    ce.support = entry.support;
    out.push_back(std::move(ce));
  }
  std::sort(out.begin(), out.end(),
            [](const CanonicalEntry& a, const CanonicalEntry& b) {
              if (a.tokens.size() != b.tokens.size()) {
                return a.tokens.size() < b.tokens.size();
              }
              if (a.tokens != b.tokens) {
                return a.tokens < b.tokens;
              }
              return a.support < b.support;
            });
  return out;
}

void write_result(const MiningResult& result, const ItemDictionary& dict,
                  std::ostream& sink) {
  for (const auto& entry : canonical_entries(result, dict)) {
    for (std::size_t i = 0; i < entry.tokens.size(); ++i) {
      if (i > 0) {
        sink << ' ';
      }
      sink << entry.tokens[i];
    }
    sink << " : " << entry.support << '\n';
    if (sink.fail()) {
      throw IoError("write failure while emitting mining result");
    }
  }
}

std::string result_to_string(const MiningResult& result,
                             const ItemDictionary& dict) {
  std::ostringstream out;
  write_result(result, dict, out);
  return out.str();
}

}  // namespace fim
