// Command-line front end: generate synthetic basket data, mine frequent
// itemsets, run parameter-sweep benchmarks, and cross-check the miners
// against each other.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 I/O or runtime
// failure, 3 verification mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fim/bench.hpp"
#include "fim/database.hpp"
#include "fim/datagen.hpp"
#include "fim/error.hpp"
#include "fim/miner.hpp"
#include "fim/result.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitMismatch = 3;

// A token containing '.' is a relative fraction, anything else an absolute
// count.
fim::SupportThreshold parse_min_support(const std::string& token) {
  try {
    if (token.find('.') != std::string::npos) {
      std::size_t used = 0;
      const double fraction = std::stod(token, &used);
      if (used != token.size()) {
        throw fim::ConfigError("bad --min-support value: " + token);
      }
      return fim::SupportThreshold::relative(fraction);
    }
    std::size_t used = 0;
    const unsigned long long count = std::stoull(token, &used);
    if (used != token.size()) {
      throw fim::ConfigError("bad --min-support value: " + token);
    }
    return fim::SupportThreshold::absolute(count);
  } catch (const fim::Error&) {
    throw;
  } catch (const std::exception&) {
    throw fim::ConfigError("bad --min-support value: " + token);
  }
}

std::optional<std::uint64_t> seed_from_env() {
  const char* value = std::getenv("FIM_SEED");
  if (value == nullptr) {
    return std::nullopt;
  }
  try {
    std::size_t used = 0;
    const unsigned long long seed = std::stoull(value, &used);
    if (used != std::string(value).size()) {
      throw std::invalid_argument("trailing characters");
    }
    return seed;
  } catch (const std::exception&) {
    throw fim::ConfigError(std::string("bad FIM_SEED value: ") + value);
  }
}

fim::TransactionDatabase load_database(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw fim::IoError("cannot open input file: " + path);
  }
  return fim::parse_database(in);
}

struct GenerateArgs {
  fim::GeneratorConfig config;
  std::string output;
  std::string sidecar;
  std::string preset;
  CLI::Option* opt_baskets = nullptr;
  CLI::Option* opt_items = nullptr;
  CLI::Option* opt_frequent_sets = nullptr;
};

// Desk-scale preset: small enough to generate and mine on a laptop while
// keeping the same shape as the full-size defaults.
void apply_desk_preset(fim::GeneratorConfig& config, const GenerateArgs& args) {
  if (args.opt_baskets->count() == 0) {
    config.basket_count = 100'000;
  }
  if (args.opt_items->count() == 0) {
    config.item_count = 5'000;
  }
  if (args.opt_frequent_sets->count() == 0) {
    config.frequent_set_count = 10;
  }
}

int cmd_generate(GenerateArgs& args) {
  if (args.preset == "desk") {
    apply_desk_preset(args.config, args);
  }
  if (const auto seed = seed_from_env()) {
    args.config.seed = *seed;
  }
  std::ofstream out(args.output, std::ios::binary);
  if (!out) {
    throw fim::IoError("cannot open output file: " + args.output);
  }
  std::ofstream sidecar;
  if (!args.sidecar.empty()) {
    sidecar.open(args.sidecar, std::ios::binary);
    if (!sidecar) {
      throw fim::IoError("cannot open sidecar file: " + args.sidecar);
    }
  }
  fim::generate(args.config, out, args.sidecar.empty() ? nullptr : &sidecar);
  return kExitOk;
}

struct MineArgs {
  std::string algorithm;
  std::string min_support;
  std::string input;
  std::string output;
};

int cmd_mine(const MineArgs& args) {
  const fim::Algorithm algorithm = fim::parse_algorithm(args.algorithm);
  const fim::SupportThreshold sigma = parse_min_support(args.min_support);
  const fim::TransactionDatabase db = load_database(args.input);
  const fim::MiningResult result = fim::mine(algorithm, db, sigma);
  if (args.output.empty()) {
    fim::write_result(result, db.dictionary(), std::cout);
  } else {
    std::ofstream out(args.output, std::ios::binary);
    if (!out) {
      throw fim::IoError("cannot open output file: " + args.output);
    }
    fim::write_result(result, db.dictionary(), out);
  }
  return kExitOk;
}

struct BenchArgs {
  std::string experiment;
  std::string output_dir;
  std::string min_support = "0.01";
  std::uint64_t trials = 3;
  GenerateArgs generator;  // reuses the generate flag set and preset logic
};

int cmd_bench(BenchArgs& args) {
  if (args.generator.preset == "desk") {
    apply_desk_preset(args.generator.config, args.generator);
  }
  if (const auto seed = seed_from_env()) {
    args.generator.config.seed = *seed;
  }

  fim::ExperimentSpec spec;
  if (args.experiment == "density") {
    spec.kind = fim::ExperimentSpec::Kind::density_sweep;
    spec.points = fim::ExperimentSpec::default_density_points();
  } else if (args.experiment == "basket-size") {
    spec.kind = fim::ExperimentSpec::Kind::basket_sweep;
    spec.points = fim::ExperimentSpec::default_basket_points();
  } else {
    throw fim::ConfigError("unknown experiment: \"" + args.experiment +
                           "\" (expected density or basket-size)");
  }
  spec.base_config = args.generator.config;
  spec.trials = args.trials;
  spec.min_support = parse_min_support(args.min_support);

  const fim::BenchReport report = fim::run_experiment(spec);
  fim::emit_report(report, args.output_dir);

  std::size_t failed = 0;
  for (const auto& trial : report.trials) {
    if (!trial.ok()) {
      ++failed;
    }
  }
  std::cout << "wrote " << report.trials.size() << " trials ("
            << failed << " failed) to " << args.output_dir << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string input;
  std::string min_support;
  bool against_naive = false;
};

int cmd_verify(const VerifyArgs& args) {
  const fim::SupportThreshold sigma = parse_min_support(args.min_support);
  const fim::TransactionDatabase db = load_database(args.input);

  std::vector<fim::Algorithm> algorithms = {fim::Algorithm::apriori,
                                            fim::Algorithm::eclat,
                                            fim::Algorithm::fpgrowth};
  if (args.against_naive) {
    algorithms.insert(algorithms.begin(), fim::Algorithm::naive);
  }

  const char* fault = std::getenv("FIM_VERIFY_INJECT_FAULT");
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> outputs;
  for (fim::Algorithm algorithm : algorithms) {
    fim::MiningResult result = fim::mine(algorithm, db, sigma);
    if (fault != nullptr && fim::algorithm_name(algorithm) == fault &&
        !result.entries.empty()) {
      result.entries.front().support += 1;
    }
    std::istringstream lines(fim::result_to_string(result, db.dictionary()));
    std::vector<std::string> split;
    std::string line;
    while (std::getline(lines, line)) {
      split.push_back(line);
    }
    names.push_back(fim::algorithm_name(algorithm));
    outputs.push_back(std::move(split));
  }

  bool mismatch = false;
  for (std::size_t i = 1; i < outputs.size(); ++i) {
    if (outputs[i] == outputs[0]) {
      continue;
    }
    mismatch = true;
    const std::size_t limit = std::min(outputs[0].size(), outputs[i].size());
    std::size_t at = limit;
    for (std::size_t k = 0; k < limit; ++k) {
      if (outputs[0][k] != outputs[i][k]) {
        at = k;
        break;
      }
    }
    const auto line_or = [](const std::vector<std::string>& v,
                            std::size_t k) -> std::string {
      return k < v.size() ? v[k] : "<missing>";
    };
    std::cerr << "verify: " << names[i] << " disagrees with " << names[0]
              << " at line " << at + 1 << ": \"" << line_or(outputs[i], at)
              << "\" vs \"" << line_or(outputs[0], at) << "\"\n";
  }
  if (mismatch) {
    return kExitMismatch;
  }
  std::cout << "verify: " << names.size() << " algorithms agree ("
            << outputs[0].size() << " itemsets)\n";
  return kExitOk;
}

void add_generator_flags(CLI::App* cmd, GenerateArgs& args) {
  args.opt_baskets = cmd->add_option("--baskets", args.config.basket_count,
                                     "Number of baskets to generate");
  args.opt_items = cmd->add_option("--items", args.config.item_count,
                                   "Size of the I item namespace");
  args.opt_frequent_sets =
      cmd->add_option("--frequent-sets", args.config.frequent_set_count,
                      "Number of planted frequent sets");
  cmd->add_option("--max-basket", args.config.max_basket_size,
                  "Maximum items per basket");
  cmd->add_option("--density", args.config.density,
                  "Probability a line embeds a planted set");
  cmd->add_option("--seed", args.config.seed,
                  "RNG seed (FIM_SEED overrides)");
  cmd->add_option("--f-pool", args.config.f_pool_size,
                  "F-item pool size (0 = derive from --frequent-sets)");
  cmd->add_option("--preset", args.preset, "Config preset")
      ->check(CLI::IsMember({"desk"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequent itemset mining toolkit"};
  app.require_subcommand(1);

  GenerateArgs generate_args;
  auto* generate_cmd =
      app.add_subcommand("generate", "Write a synthetic basket dataset");
  add_generator_flags(generate_cmd, generate_args);
  generate_cmd->add_option("--output", generate_args.output, "Dataset path")
      ->required();
  generate_cmd->add_option("--sidecar", generate_args.sidecar,
                           "Debug sidecar path: one 0/1 per line flagging "
                           "embedded planted sets");

  MineArgs mine_args;
  auto* mine_cmd =
      app.add_subcommand("mine", "Mine frequent itemsets from a dataset");
  mine_cmd
      ->add_option("--algorithm", mine_args.algorithm,
                   "naive, apriori, eclat or fpgrowth")
      ->required();
  mine_cmd
      ->add_option("--min-support", mine_args.min_support,
                   "Absolute count, or relative fraction when the value "
                   "contains '.'")
      ->required();
  mine_cmd->add_option("--input", mine_args.input, "Dataset path")->required();
  mine_cmd->add_option("--output", mine_args.output,
                       "Result path (default stdout)");

  BenchArgs bench_args;
  auto* bench_cmd =
      app.add_subcommand("bench", "Run a parameter-sweep benchmark");
  bench_cmd
      ->add_option("--experiment", bench_args.experiment,
                   "density or basket-size")
      ->required();
  bench_cmd->add_option("--output-dir", bench_args.output_dir,
                        "Report directory")
      ->required();
  bench_cmd->add_option("--trials", bench_args.trials,
                        "Timed repetitions per algorithm and point");
  bench_cmd->add_option("--min-support", bench_args.min_support,
                        "Mining threshold for every point");
  add_generator_flags(bench_cmd, bench_args.generator);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Check that all miners agree on a dataset");
  verify_cmd->add_option("--input", verify_args.input, "Dataset path")
      ->required();
  verify_cmd
      ->add_option("--min-support", verify_args.min_support,
                   "Absolute count, or relative fraction when the value "
                   "contains '.'")
      ->required();
  verify_cmd->add_flag("--against-naive", verify_args.against_naive,
                       "Include the brute-force miner as ground truth");

  int threads = 1;
  for (CLI::App* cmd : {mine_cmd, bench_cmd, verify_cmd}) {
    cmd->add_option("--threads", threads,
                    "Worker threads (mining currently runs single-threaded)")
        ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate_cmd->parsed()) {
      return cmd_generate(generate_args);
    }
    if (mine_cmd->parsed()) {
      return cmd_mine(mine_args);
    }
    if (bench_cmd->parsed()) {
      return cmd_bench(bench_args);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(verify_args);
    }
  } catch (const fim::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const fim::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const fim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
