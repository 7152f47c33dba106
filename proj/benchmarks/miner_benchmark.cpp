// Microbenchmarks for the three timed miners and the supporting machinery,
// on generated datasets small enough for quick iteration. The full sweep
// harness lives behind `fim bench`; these isolate single operations.

#include <benchmark/benchmark.h>

#include "fim/database.hpp"
#include "fim/datagen.hpp"
#include "fim/miner.hpp"
#include "fim/miner_eclat.hpp"

namespace {

using namespace fim;

GeneratorConfig config_for(double density, std::uint64_t max_basket) {
  GeneratorConfig config;
  config.basket_count = 5'000;
  config.item_count = 500;
  config.frequent_set_count = 5;
  config.max_basket_size = max_basket;
  config.density = density;
  config.seed = 99;
  return config;
}

TransactionDatabase dataset(double density, std::uint64_t max_basket) {
  return parse_database(generate_to_string(config_for(density, max_basket)));
}

void mine_benchmark(benchmark::State& state, Algorithm algorithm) {
  const double density = static_cast<double>(state.range(0)) / 10.0;
  const TransactionDatabase db = dataset(density, 20);
  const auto sigma = SupportThreshold::relative(0.01);
  std::size_t found = 0;
  for (auto _ : state) {
    const MiningResult result = mine(algorithm, db, sigma);
    found = result.entries.size();
    benchmark::DoNotOptimize(found);
  }
  state.counters["itemsets"] = static_cast<double>(found);
}

void BM_MineApriori(benchmark::State& state) {
  mine_benchmark(state, Algorithm::apriori);
}
void BM_MineEclat(benchmark::State& state) {
  mine_benchmark(state, Algorithm::eclat);
}
void BM_MineFpgrowth(benchmark::State& state) {
  mine_benchmark(state, Algorithm::fpgrowth);
}

BENCHMARK(BM_MineApriori)->Arg(2)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MineEclat)->Arg(2)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MineFpgrowth)->Arg(2)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ParseDatabase(benchmark::State& state) {
  const std::string text = generate_to_string(config_for(0.5, 20));
  for (auto _ : state) {
    const TransactionDatabase db = parse_database(text);
    benchmark::DoNotOptimize(db.basket_count());
  }
}
BENCHMARK(BM_ParseDatabase)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& state) {
  const GeneratorConfig config = config_for(0.5, 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_to_string(config).size());
  }
}
BENCHMARK(BM_Generate)->Unit(benchmark::kMillisecond);

void BM_TidsetIntersection(benchmark::State& state) {
  Tidset a;
  Tidset b;
  for (std::uint32_t i = 0; i < 100'000; ++i) {
    if (i % 2 == 0) {
      a.push_back(i);
    }
    if (i % 3 == 0) {
      b.push_back(i);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect_tidsets(a, b).size());
  }
}
BENCHMARK(BM_TidsetIntersection);

}  // namespace

BENCHMARK_MAIN();
