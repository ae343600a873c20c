#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pearl/noncomm_graph.hpp"
#include "pearl/random_necklace.hpp"
#include "pearl/scheduler.hpp"

namespace pearl {

struct BenchConfig {
  std::vector<std::size_t> sizes{500, 1000, 2000};
  std::size_t trials = 5;
  int frame_size = 8;
  int degree_max = 2;
  std::uint64_t seed = 1;
};

struct BenchRow {
  std::size_t n_strings = 0;
  double mean_ms_build = 0.0;
  double mean_ms_dp = 0.0;
  double mean_edges = 0.0;
  /// Build-time ratio to the previous row.
  std::optional<double> ratio;
};

/// Times build_graph and longest_paths on `trials` random encoders per size. Rows follow
/// the order of `config.sizes`.
inline std::vector<BenchRow> run_bench(const BenchConfig& config) {
  using clock = std::chrono::steady_clock;
  auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };

  std::mt19937_64 rng(config.seed);
  std::vector<BenchRow> rows;
  for (std::size_t n : config.sizes) {
    RandomNecklaceParams params{n, n, config.frame_size, config.frame_size, config.degree_max};
    BenchRow row;
    row.n_strings = n;
    std::int64_t sink = 0;
    for (std::size_t t = 0; t < config.trials; ++t) {
      const PearlNecklace necklace = random_necklace(rng, params);
      const auto t0 = clock::now();
      const NoncommGraph graph = build_graph(necklace);
      const auto t1 = clock::now();
      const LongestPathResult paths = longest_paths(graph);
      const auto t2 = clock::now();
      sink += paths.total;
      row.mean_ms_build += ms(t1 - t0);
      row.mean_ms_dp += ms(t2 - t1);
      row.mean_edges += static_cast<double>(graph.edges.size());
    }
    const double trials = static_cast<double>(config.trials);
    row.mean_ms_build /= trials;
    row.mean_ms_dp /= trials;
    row.mean_edges /= trials;
    if (!rows.empty() && rows.back().mean_ms_build > 0.0) {
      row.ratio = row.mean_ms_build / rows.back().mean_ms_build;
    }
    static_cast<void>(sink);
    rows.push_back(row);
  }
  return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n_strings,mean_ms_build,mean_ms_dp,ratio\n";
  for (const BenchRow& row : rows) {
    out << row.n_strings << ',' << row.mean_ms_build << ',' << row.mean_ms_dp << ',';
    if (row.ratio) out << *row.ratio;
    out << '\n';
  }
  return out.str();
}

}  // namespace pearl
