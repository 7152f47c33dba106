#include "fim/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "fim/error.hpp"

#if defined(__unix__) || defined(__APPLE__)
#include <sys/resource.h>
#endif

namespace fim {

namespace {

std::optional<std::uint64_t> peak_memory_bytes() {
#if defined(__unix__)
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) == 0) {
    return static_cast<std::uint64_t>(usage.ru_maxrss) * 1024;  // KiB on Linux
  }
#endif
  return std::nullopt;
}

// Shortest round-trip decimal form, locale-independent.
std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string format_fixed(double value, int precision) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed,
                    precision);
  return std::string(buf, ptr);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Dataset seed for one sweep point: stable under reordering of points.
std::uint64_t derive_seed(std::uint64_t base_seed, double point) {
  std::uint64_t bits;
  static_assert(sizeof(bits) == sizeof(point));
  std::memcpy(&bits, &point, sizeof(bits));
  return splitmix64(base_seed ^ splitmix64(bits));
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) {
    return values[n / 2];
  }
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

}  // namespace

std::vector<double> ExperimentSpec::default_density_points() {
  std::vector<double> points;
  for (int i = 1; i <= 8; ++i) {
    points.push_back(i / 10.0);
  }
  return points;
}

std::vector<double> ExperimentSpec::default_basket_points() {
  std::vector<double> points;
  for (int i = 5; i <= 100; i += 5) {
    points.push_back(static_cast<double>(i));
  }
  return points;
}

std::vector<TrialResult> run_timed_trials(const MinerFn& miner,
                                          std::string_view label,
                                          const TransactionDatabase& db,
                                          SupportThreshold sigma,
                                          std::uint64_t trials) {
  if (trials < 1) {
    throw ConfigError("trial count must be >= 1");
  }
  std::vector<TrialResult> results;
  results.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    TrialResult trial;
    trial.algorithm = std::string(label);
    trial.trial_index = t;
    const auto start = std::chrono::steady_clock::now();
    try {
      const MiningResult mined = miner(db, sigma);
      trial.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        start)
              .count();
      trial.itemsets_found = mined.entries.size();
    } catch (const std::exception& e) {
      trial.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        start)
              .count();
      trial.error = e.what();
      if (trial.error.empty()) {
        trial.error = "miner failed";
      }
    }
    trial.peak_memory_bytes = peak_memory_bytes();
    results.push_back(std::move(trial));
  }
  return results;
}

std::vector<TrialResult> time_miner(std::string_view algorithm,
                                    const TransactionDatabase& db,
                                    SupportThreshold sigma,
                                    std::uint64_t trials) {
  const Algorithm parsed = parse_algorithm(algorithm);
  if (parsed == Algorithm::naive) {
    throw ConfigError("the naive miner is excluded from timed runs");
  }
  return run_timed_trials(
      [parsed](const TransactionDatabase& database, SupportThreshold s) {
        return mine(parsed, database, s);
      },
      algorithm, db, sigma, trials);
}

BenchReport run_experiment(const ExperimentSpec& spec) {
  if (spec.points.empty()) {
    throw ConfigError("experiment needs at least one parameter point");
  }
  if (!std::is_sorted(spec.points.begin(), spec.points.end())) {
    throw ConfigError("experiment points must be ascending");
  }
  if (spec.trials < 1) {
    throw ConfigError("trial count must be >= 1");
  }
  if (spec.algorithms.empty()) {
    throw ConfigError("experiment needs at least one algorithm");
  }
  for (Algorithm a : spec.algorithms) {
    if (a == Algorithm::naive) {
      throw ConfigError("the naive miner is excluded from timed sweeps");
    }
  }

  BenchReport report;
  report.spec = spec;
  report.param_name = spec.kind == ExperimentSpec::Kind::density_sweep
                          ? "density"
                          : "max_basket_size";

  for (double point : spec.points) {
    GeneratorConfig config = spec.base_config;
    if (spec.kind == ExperimentSpec::Kind::density_sweep) {
      config.density = point;
    } else {
      config.max_basket_size = static_cast<std::uint64_t>(point);
    }
    config.seed = derive_seed(spec.base_config.seed, point);

    TransactionDatabase db;
    try {
      const std::string text = generate_to_string(config);
      db = parse_database(text);
    } catch (const std::exception& e) {
      throw IoError("experiment point " + report.param_name + "=" +
                    format_double(point) + " failed: " + e.what());
    }

    for (Algorithm algorithm : spec.algorithms) {
      auto trials =
          time_miner(algorithm_name(algorithm), db, spec.min_support,
                     spec.trials);
      for (auto& trial : trials) {
        trial.param_value = point;
        report.trials.push_back(std::move(trial));
      }
    }
  }

  for (Algorithm algorithm : spec.algorithms) {
    const std::string name = algorithm_name(algorithm);
    for (double point : spec.points) {
      std::vector<double> seconds;
      for (const TrialResult& trial : report.trials) {
        if (trial.ok() && trial.algorithm == name &&
            trial.param_value == point) {
          seconds.push_back(trial.wall_seconds);
        }
      }
      if (!seconds.empty()) {
        report.medians.push_back({name, point, median_of(std::move(seconds))});
      }
    }
  }
  return report;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << body;
  out.flush();
  if (out.fail()) {
    throw IoError("write failure on " + path.string());
  }
}

std::string render_chart_svg(const BenchReport& report) {
  constexpr double kWidth = 800;
  constexpr double kHeight = 500;
  constexpr double kLeft = 70;
  constexpr double kRight = 30;
  constexpr double kTop = 40;
  constexpr double kBottom = 60;
  const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                           "#9467bd"};

  double x_min = report.spec.points.front();
  double x_max = report.spec.points.back();
  if (x_max == x_min) {
    x_max = x_min + 1;
  }
  double y_max = 0;
  for (const auto& row : report.medians) {
    y_max = std::max(y_max, row.median_wall_seconds);
  }
  if (y_max <= 0) {
    y_max = 1;
  }
  y_max *= 1.05;

  const auto x_of = [&](double v) {
    return kLeft + (v - x_min) / (x_max - x_min) * (kWidth - kLeft - kRight);
  };
  const auto y_of = [&](double v) {
    return kHeight - kBottom - v / y_max * (kHeight - kTop - kBottom);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\""
      << kWidth << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth
      << " " << kHeight << "\">\n";
  svg << "  <rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  svg << "  <text x=\"" << kWidth / 2
      << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">median mining time vs "
      << report.param_name << "</text>\n";

  // axes
  svg << "  <line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom
      << "\" x2=\"" << kWidth - kRight << "\" y2=\"" << kHeight - kBottom
      << "\" stroke=\"black\"/>\n";
  svg << "  <line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"black\"/>\n";

  for (double point : report.spec.points) {
    const double x = x_of(point);
    svg << "  <line x1=\"" << format_fixed(x, 2) << "\" y1=\""
        << kHeight - kBottom << "\" x2=\"" << format_fixed(x, 2) << "\" y2=\""
        << kHeight - kBottom + 5 << "\" stroke=\"black\"/>\n";
    svg << "  <text x=\"" << format_fixed(x, 2) << "\" y=\""
        << kHeight - kBottom + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << format_double(point) << "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double v = y_max * i / 4;
    const double y = y_of(v);
    svg << "  <line x1=\"" << kLeft - 5 << "\" y1=\"" << format_fixed(y, 2)
        << "\" x2=\"" << kLeft << "\" y2=\"" << format_fixed(y, 2)
        << "\" stroke=\"black\"/>\n";
    svg << "  <text x=\"" << kLeft - 9 << "\" y=\""
        << format_fixed(y + 4, 2)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << format_fixed(v, 3) << "</text>\n";
  }
  svg << "  <text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\""
      << kHeight - 18
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">"
      << report.param_name << "</text>\n";
  svg << "  <text x=\"18\" y=\"" << (kTop + kHeight - kBottom) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 18 "
      << (kTop + kHeight - kBottom) / 2 << ")\">seconds</text>\n";

  // one polyline per algorithm
  std::size_t series = 0;
  for (Algorithm algorithm : report.spec.algorithms) {
    const std::string name = algorithm_name(algorithm);
    const char* color = kColors[series % std::size(kColors)];
    std::ostringstream points;
    for (const auto& row : report.medians) {
      if (row.algorithm == name) {
        points << format_fixed(x_of(row.param_value), 2) << ','
               << format_fixed(y_of(row.median_wall_seconds), 2) << ' ';
      }
    }
    std::string joined = points.str();
    if (!joined.empty()) {
      joined.pop_back();
    }
    svg << "  <polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"" << joined << "\"/>\n";
    svg << "  <text x=\"" << kWidth - kRight - 8 << "\" y=\""
        << kTop + 16 * static_cast<double>(series)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"12\" fill=\""
        << color << "\">" << name << "</text>\n";
    ++series;
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

void emit_report(const BenchReport& report,
                 const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + out_dir.string() +
                  ": " + ec.message());
  }

  std::ostringstream trials;
  trials << "algorithm,param_name,param_value,trial,wall_seconds,"
            "itemsets_found\n";
  std::ostringstream failures;
  failures << "algorithm,param_name,param_value,trial,error\n";
  bool any_failure = false;
  for (const TrialResult& trial : report.trials) {
    if (trial.ok()) {
      trials << trial.algorithm << ',' << report.param_name << ','
             << format_double(trial.param_value) << ',' << trial.trial_index
             << ',' << format_double(trial.wall_seconds) << ','
             << trial.itemsets_found << '\n';
    } else {
      any_failure = true;
      std::string reason = trial.error;
      std::replace(reason.begin(), reason.end(), ',', ';');
      std::replace(reason.begin(), reason.end(), '\n', ' ');
      failures << trial.algorithm << ',' << report.param_name << ','
               << format_double(trial.param_value) << ',' << trial.trial_index
               << ',' << reason << '\n';
    }
  }
  write_file(out_dir / "trials.csv", trials.str());
  if (any_failure) {
    write_file(out_dir / "failures.csv", failures.str());
  }

  std::ostringstream medians;
  medians << "algorithm,param_name,param_value,median_wall_seconds\n";
  for (const auto& row : report.medians) {
    medians << row.algorithm << ',' << report.param_name << ','
            << format_double(row.param_value) << ','
            << format_double(row.median_wall_seconds) << '\n';
  }
  write_file(out_dir / "medians.csv", medians.str());

  write_file(out_dir / "chart.svg", render_chart_svg(report));
}

}  // namespace fim
