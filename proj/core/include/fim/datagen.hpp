#ifndef FIM_DATAGEN_HPP
#define FIM_DATAGEN_HPP

#include <cstdint>
#include <ostream>
#include <vector>

#include "fim/rng.hpp"

namespace fim {

// Knobs for the synthetic basket generator. Items come in two namespaces:
// "F"-prefixed members of planted frequent sets and "I"-prefixed uniform
// filler.
struct GeneratorConfig {
  std::uint64_t basket_count = 10'000'000;
  std::uint64_t item_count = 50'000;  // size of the I namespace
  std::uint64_t frequent_set_count = 100;
  std::uint64_t max_basket_size = 50;
  double density = 0.5;  // probability a line embeds a planted set
  std::uint64_t seed = 1;
  // Size of the shared F-item pool the planted sets draw from. 0 derives
  // the default: 4 * frequent_set_count, capped at item_count / 10.
  std::uint64_t f_pool_size = 0;

  std::uint64_t resolved_pool_size() const;

  // Throws ConfigError on out-of-range or inconsistent values.
  void validate() const;
};

// The planted frequent sets, as indices into the F namespace.
struct FrequentSetPool {
  std::vector<std::vector<std::uint32_t>> sets;
  std::vector<std::uint32_t> pool;  // distinct F indices actually used
};

// Draws config.frequent_set_count sets. Each set's size is uniform on
// [2, min(8, max_basket_size)] and its members are sampled without
// replacement from a pool of resolved_pool_size() F items, so sets overlap.
FrequentSetPool build_frequent_sets(const GeneratorConfig& config, Rng& rng);

// Writes config.basket_count lines. With probability `density` a line
// embeds one planted set (members in per-line shuffled order) and is then
// padded with distinct uniform I items up to a target length drawn from
// [1, max_basket_size]; a set longer than the target is never truncated.
// Other lines hold only I items. Output is byte-identical for equal
// configs. `sidecar`, when given, receives one 0/1 line per basket flagging
// whether a planted set was embedded.
void generate(const GeneratorConfig& config, std::ostream& out,
              std::ostream* sidecar = nullptr);

// generate into a string.
std::string generate_to_string(const GeneratorConfig& config);

}  // namespace fim

#endif  // FIM_DATAGEN_HPP
