#include <doctest.h>

#include <cctype>
#include <sstream>
#include <unordered_set>

#include "fim/datagen.hpp"
#include "fim/error.hpp"

#include "support/fixtures.hpp"

using namespace fim;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) {
    tokens.push_back(token);
  }
  return tokens;
}

GeneratorConfig small_config() {
  GeneratorConfig config;
  config.basket_count = 200;
  config.item_count = 100;
  config.frequent_set_count = 2;
  config.max_basket_size = 10;
  config.density = 0.5;
  config.seed = 1;
  return config;
}

}  // namespace

TEST_CASE("frequent set pool has the configured shape") {
  GeneratorConfig config = small_config();
  config.frequent_set_count = 20;
  Rng rng(config.seed);
  const FrequentSetPool pool = build_frequent_sets(config, rng);
  REQUIRE(pool.sets.size() == 20);
  for (const auto& set : pool.sets) {
    CHECK(set.size() >= 2);
    CHECK(set.size() <= 8);
    CHECK(set.size() <= config.max_basket_size);
    std::unordered_set<std::uint32_t> distinct(set.begin(), set.end());
    CHECK(distinct.size() == set.size());
    for (std::uint32_t member : set) {
      CHECK(member < config.resolved_pool_size());
    }
  }
  // sets share a pool smaller than their combined size, so members overlap
  CHECK(pool.pool.size() <= config.resolved_pool_size());
}

TEST_CASE("zero frequent sets yield an empty pool") {
  GeneratorConfig config = small_config();
  config.frequent_set_count = 0;
  Rng rng(1);
  const FrequentSetPool pool = build_frequent_sets(config, rng);
  CHECK(pool.sets.empty());
  CHECK(pool.pool.empty());
}

TEST_CASE("equal seeds build equal pools") {
  const GeneratorConfig config = small_config();
  Rng a(42);
  Rng b(42);
  CHECK(build_frequent_sets(config, a).sets ==
        build_frequent_sets(config, b).sets);
}

TEST_CASE("config validation") {
  GeneratorConfig config = small_config();
  config.max_basket_size = 1;  // too small to hold a planted set
  CHECK_THROWS_AS(config.validate(), ConfigError);

  config = small_config();
  config.density = 1.5;
  CHECK_THROWS_AS(config.validate(), ConfigError);

  config = small_config();
  config.item_count = 5;  // pool would be empty, lines could not be distinct
  CHECK_THROWS_AS(config.validate(), ConfigError);

  config = small_config();
  config.frequent_set_count = 0;
  config.max_basket_size = 1;
  CHECK_NOTHROW(config.validate());
}

TEST_CASE("line count and token grammar") {
  const GeneratorConfig config = small_config();
  const std::string text = generate_to_string(config);
  const auto lines = lines_of(text);
  REQUIRE(lines.size() == config.basket_count);
  for (const auto& line : lines) {
    const auto tokens = tokens_of(line);
    CHECK(!tokens.empty());
    std::unordered_set<std::string> distinct;
    for (const auto& token : tokens) {
      REQUIRE(token.size() >= 2);
      REQUIRE((token[0] == 'I' || token[0] == 'F'));
      for (std::size_t i = 1; i < token.size(); ++i) {
        REQUIRE(std::isdigit(static_cast<unsigned char>(token[i])));
      }
      if (token[0] == 'I') {
        REQUIRE(std::stoull(token.substr(1)) < config.item_count);
      }
      distinct.insert(token);
    }
    REQUIRE(distinct.size() == tokens.size());
    REQUIRE(distinct.size() <= config.max_basket_size);
  }
}

TEST_CASE("density zero and one are exact") {
  GeneratorConfig config = small_config();
  config.density = 0.0;
  for (const auto& line : lines_of(generate_to_string(config))) {
    CHECK(line.find('F') == std::string::npos);
  }
  config.density = 1.0;
  for (const auto& line : lines_of(generate_to_string(config))) {
    CHECK(line[0] == 'F');  // embedded members come first
  }
}

TEST_CASE("sidecar flags embedding per line and tracks the density") {
  GeneratorConfig config = small_config();
  config.basket_count = 10'000;
  config.density = 0.5;
  std::ostringstream out;
  std::ostringstream sidecar;
  generate(config, out, &sidecar);

  const auto lines = lines_of(out.str());
  const auto flags = lines_of(sidecar.str());
  REQUIRE(flags.size() == lines.size());

  std::size_t embedded = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    REQUIRE((flags[i] == "0" || flags[i] == "1"));
    const bool has_f = lines[i].find('F') != std::string::npos;
    REQUIRE(has_f == (flags[i] == "1"));
    embedded += flags[i] == "1";
  }
  const double fraction =
      static_cast<double>(embedded) / static_cast<double>(lines.size());
  // binomial 3-sigma band around 0.5 for 10k draws
  CHECK(fraction >= 0.485);
  CHECK(fraction <= 0.515);
}

TEST_CASE("identical configs generate identical bytes") {
  const GeneratorConfig config = small_config();
  CHECK(generate_to_string(config) == generate_to_string(config));

  GeneratorConfig other = config;
  other.seed = 2;
  CHECK(generate_to_string(config) != generate_to_string(other));
}

TEST_CASE("embedded sets longer than the target length are not truncated") {
  GeneratorConfig config = small_config();
  config.density = 1.0;
  config.basket_count = 2'000;
  config.seed = 3;
  Rng pool_rng(config.seed);
  const FrequentSetPool pool = build_frequent_sets(config, pool_rng);

  std::size_t min_set = SIZE_MAX;
  for (const auto& set : pool.sets) {
    min_set = std::min(min_set, set.size());
  }
  for (const auto& line : lines_of(generate_to_string(config))) {
    const auto tokens = tokens_of(line);
    std::size_t f_count = 0;
    for (const auto& token : tokens) {
      f_count += token[0] == 'F';
    }
    // the full set is present: its F tokens always survive
    CHECK(f_count >= min_set);
    CHECK(tokens.size() >= f_count);
  }
}

TEST_CASE("zero baskets produce empty output") {
  GeneratorConfig config = small_config();
  config.basket_count = 0;
  CHECK(generate_to_string(config).empty());
}
