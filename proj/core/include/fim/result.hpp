#ifndef FIM_RESULT_HPP
#define FIM_RESULT_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "fim/database.hpp"
#include "fim/itemset.hpp"
#include "fim/support.hpp"

namespace fim {

// The frequent itemsets found by one mining run, with absolute supports.
struct MiningResult {
  struct Entry {
    Itemset items;
    std::uint64_t support = 0;
  };

  std::vector<Entry> entries;
  SupportThreshold threshold = SupportThreshold::absolute(1);
  std::size_t basket_count = 0;
};

// Entries rewritten as token lists, sorted lexicographically within each
// itemset and ordered by (itemset length, token order) across entries.
// This is the canonical order used for serialization and comparison.
struct CanonicalEntry {
  std::vector<std::string> tokens;
  std::uint64_t support = 0;

  friend bool operator==(const CanonicalEntry&, const CanonicalEntry&) = default;
};

std::vector<CanonicalEntry> canonical_entries(const MiningResult& result,
                                              const ItemDictionary& dict);

// Emits one line per entry: "tok1 tok2 ... : support", in canonical order.
// Byte-for-byte deterministic for equal results. Throws IoError on write
// failure.
void write_result(const MiningResult& result, const ItemDictionary& dict,
                  std::ostream& sink);

// write_result into a string.
std::string result_to_string(const MiningResult& result,
                             const ItemDictionary& dict);

}  // namespace fim

#endif  // FIM_RESULT_HPP
