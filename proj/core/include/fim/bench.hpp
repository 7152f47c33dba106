#ifndef FIM_BENCH_HPP
#define FIM_BENCH_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fim/datagen.hpp"
#include "fim/miner.hpp"

namespace fim {

// One sweep of the density or max-basket-size parameter over a fixed-size
// generated database, timing each algorithm at each point.
struct ExperimentSpec {
  enum class Kind { density_sweep, basket_sweep };

  Kind kind = Kind::density_sweep;
  GeneratorConfig base_config;
  std::vector<double> points;  // non-empty, ascending
  std::vector<Algorithm> algorithms = {Algorithm::apriori, Algorithm::eclat,
                                       Algorithm::fpgrowth};
  std::uint64_t trials = 1;
  SupportThreshold min_support = SupportThreshold::relative(0.01);

  static std::vector<double> default_density_points();  // 0.1 .. 0.8 step 0.1
  static std::vector<double> default_basket_points();   // 5 .. 100 step 5
};

struct TrialResult {
  std::string algorithm;
  double param_value = 0.0;
  std::uint64_t trial_index = 0;
  double wall_seconds = 0.0;
  std::uint64_t itemsets_found = 0;
  std::optional<std::uint64_t> peak_memory_bytes;
  std::string error;  // non-empty marks a failed trial

  bool ok() const { return error.empty(); }
};

struct BenchReport {
  struct MedianRow {
    std::string algorithm;
    double param_value = 0.0;
    double median_wall_seconds = 0.0;
  };

  ExperimentSpec spec;
  std::string param_name;  // "density" or "max_basket_size"
  std::vector<TrialResult> trials;
  std::vector<MedianRow> medians;  // over successful trials per cell
};

using MinerFn =
    std::function<MiningResult(const TransactionDatabase&, SupportThreshold)>;

// Timing core: runs `miner` `trials` times on the pre-loaded database,
// clocking the mining call alone. A throwing trial is recorded with its
// diagnostic instead of propagating.
std::vector<TrialResult> run_timed_trials(const MinerFn& miner,
                                          std::string_view label,
                                          const TransactionDatabase& db,
                                          SupportThreshold sigma,
                                          std::uint64_t trials);

// Times one of apriori, eclat or fpgrowth by name; any other name (the
// naive miner included) raises ConfigError.
std::vector<TrialResult> time_miner(std::string_view algorithm,
                                    const TransactionDatabase& db,
                                    SupportThreshold sigma,
                                    std::uint64_t trials);

// Runs the sweep: per point, generates the dataset with a seed derived from
// the base seed and the point value, parses it once, and times every
// algorithm on the identical database. Generation or parse failure aborts
// with the failing point named.
BenchReport run_experiment(const ExperimentSpec& spec);

// Writes trials.csv, medians.csv and chart.svg (one polyline per
// algorithm) into out_dir, plus failures.csv when any trial failed.
// Re-emitting an unchanged report produces identical bytes.
void emit_report(const BenchReport& report,
                 const std::filesystem::path& out_dir);

}  // namespace fim

#endif  // FIM_BENCH_HPP
