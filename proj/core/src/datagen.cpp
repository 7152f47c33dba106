#include "fim/datagen.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_set>

#include "fim/error.hpp"

namespace fim {

std::uint64_t GeneratorConfig::resolved_pool_size() const {
  if (f_pool_size != 0) {
    return f_pool_size;
  }
  return std::min(4 * frequent_set_count, item_count / 10);
}

void GeneratorConfig::validate() const {
  if (item_count < 1) {
    throw ConfigError("item count must be >= 1");
  }
  if (max_basket_size < 1) {
    throw ConfigError("max basket size must be >= 1");
  }
  if (max_basket_size > item_count) {
    throw ConfigError("max basket size exceeds item count; lines could not "
                      "hold distinct items");
  }
  if (density < 0.0 || density > 1.0) {
    throw ConfigError("density must lie in [0, 1]");
  }
  if (frequent_set_count > 0) {
    if (max_basket_size < 2) {
      throw ConfigError("planted frequent sets need max basket size >= 2");
    }
    if (resolved_pool_size() < 2) {
      throw ConfigError("F-item pool must hold at least 2 items; raise "
                        "item_count or set f_pool_size");
    }
  }
}

FrequentSetPool build_frequent_sets(const GeneratorConfig& config, Rng& rng) {
  config.validate();
  FrequentSetPool result;
  if (config.frequent_set_count == 0) {
    return result;
  }

  const std::uint64_t pool_size = config.resolved_pool_size();
  const std::uint64_t max_set_size =
      std::min({std::uint64_t{8}, config.max_basket_size, pool_size});

  std::vector<std::uint32_t> scratch(pool_size);
  for (std::uint64_t s = 0; s < config.frequent_set_count; ++s) {
    const std::uint64_t size = rng.between(2, max_set_size);
    // Partial Fisher-Yates: the first `size` slots end up as a uniform
    // sample without replacement.
    std::iota(scratch.begin(), scratch.end(), 0);
    std::vector<std::uint32_t> members;
    members.reserve(size);
    for (std::uint64_t k = 0; k < size; ++k) {
      const std::uint64_t j = k + rng.below(pool_size - k);
      std::swap(scratch[k], scratch[j]);
      members.push_back(scratch[k]);
    }
    std::sort(members.begin(), members.end());
    result.sets.push_back(std::move(members));
  }

  std::unordered_set<std::uint32_t> used;
  for (const auto& set : result.sets) {
    used.insert(set.begin(), set.end());
  }
  result.pool.assign(used.begin(), used.end());
  std::sort(result.pool.begin(), result.pool.end());
  return result;
}

namespace {

void append_distinct_filler(std::string& line, std::uint64_t need,
                            std::uint64_t item_count, Rng& rng,
                            std::unordered_set<std::uint64_t>& seen) {
  seen.clear();
  while (seen.size() < need) {
    const std::uint64_t pick = rng.below(item_count);
    if (seen.insert(pick).second) {
      if (!line.empty()) {
        line += ' ';
      }
      line += 'I';
      line += std::to_string(pick);
    }
  }
}

}  // namespace

void generate(const GeneratorConfig& config, std::ostream& out,
              std::ostream* sidecar) {
  config.validate();
  Rng rng(config.seed);
  const FrequentSetPool pool = build_frequent_sets(config, rng);

  std::string line;
  std::vector<std::uint32_t> members;
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < config.basket_count; ++i) {
    line.clear();
    const std::uint64_t target = rng.between(1, config.max_basket_size);
    const bool embed = !pool.sets.empty() && rng.bernoulli(config.density);
    if (embed) {
      members = pool.sets[rng.below(pool.sets.size())];
      rng.shuffle(members);
      for (std::uint32_t m : members) {
        if (!line.empty()) {
          line += ' ';
        }
        line += 'F';
        line += std::to_string(m);
      }
      if (target > members.size()) {
        append_distinct_filler(line, target - members.size(),
                               config.item_count, rng, seen);
      }
    } else {
      append_distinct_filler(line, target, config.item_count, rng, seen);
    }
    out << line << '\n';
    if (sidecar != nullptr) {
      *sidecar << (embed ? '1' : '0') << '\n';
    }
    if (out.fail() || (sidecar != nullptr && sidecar->fail())) {
      throw IoError("write failure while generating dataset");
    }
  }
  out.flush();
  if (out.fail()) {
    throw IoError("write failure while generating dataset");
  }
}

std::string generate_to_string(const GeneratorConfig& config) {
  std::ostringstream out;
  generate(config, out);
  return out.str();
}

}  // namespace fim
