#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pearl/bench.hpp"
#include "pearl/gate_model.hpp"
#include "pearl/json_io.hpp"
#include "pearl/noncomm_graph.hpp"
#include "pearl/oracle.hpp"
#include "pearl/random_necklace.hpp"
#include "pearl/scheduler.hpp"

namespace pearl::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kVerificationFailed = 2 };

struct CliConfig {
  std::string input = "-";
  std::string format;
  std::optional<std::int64_t> window;
  std::optional<std::int64_t> bound;
  std::uint64_t seed = 1;
  std::size_t random_cases = 0;
  std::optional<std::size_t> corrupt;
  std::vector<std::size_t> sizes{500, 1000, 2000};
  std::size_t trials = 5;
  int degree_max = 2;
  int frame_size = 8;
};

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path);
  if (!file) throw ValidationError("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

/// Runs every oracle against the scheduler's answer for one encoder.
inline VerificationReport verify_one(const PearlNecklace& necklace, const CliConfig& config) {
  const NoncommGraph graph = build_graph(necklace);
  ConvRealization realization = assign_frames(necklace, graph);

  VerificationReport report;
  report.dp_memory = realization.memory;
  report.frame_size = necklace.frame_size();
  report.frames = config.window.value_or(realization.memory + 4);

  if (config.corrupt) {
    if (*config.corrupt < 1 || *config.corrupt > necklace.size()) {
      throw ValidationError("--corrupt index outside [1, N]");
    }
    realization = oracle::lower_gate(std::move(realization), *config.corrupt);
  }

  if (necklace.size() <= oracle::kDefaultBruteForceCap) {
    const std::int64_t bound = config.bound.value_or(report.dp_memory + 2);
    report.brute_force_memory = oracle::brute_force_min_memory(necklace, bound);
  } else {
    report.warning = "brute force skipped: " + std::to_string(necklace.size()) +
                     " gate strings exceeds the cap of " +
                     std::to_string(oracle::kDefaultBruteForceCap);
  }

  const auto order = oracle::check_order_preservation(necklace, realization, report.frames);
  report.order_preserved = order.preserved;
  report.order_violation = order.violation;
  const auto equivalence = oracle::verify_equivalence(necklace, realization, report.frames);
  report.tableau_equal = equivalence.equal;
  report.divergence = equivalence.divergence;
  return report;
}

inline int cmd_compile(const CliConfig& config, std::istream& in, std::ostream& out) {
  const PearlNecklace necklace = parse_necklace(read_input(config.input, in));
  const ConvRealization realization = compile(necklace);
  if (config.format == "text") {
    out << render_realization(realization);
  } else {
    out << realization_json(realization).dump(2) << '\n';
  }
  return kOk;
}

inline int cmd_graph(const CliConfig& config, std::istream& in, std::ostream& out) {
  const PearlNecklace necklace = parse_necklace(read_input(config.input, in));
  out << export_dot(build_graph(necklace));
  return kOk;
}

inline int cmd_verify(const CliConfig& config, std::istream& in, std::ostream& out,
                      std::ostream& err) {
  if (config.window && *config.window < 1) throw ValidationError("--window must be >= 1");
  if (config.bound && *config.bound < 0) throw ValidationError("--bound must be >= 0");

  if (config.random_cases > 0) {
    std::mt19937_64 rng(config.seed);
    const RandomNecklaceParams params{1, 6, 2, 4, 2};
    nlohmann::json failures = nlohmann::json::array();
    for (std::size_t c = 0; c < config.random_cases; ++c) {
      const PearlNecklace necklace = random_necklace(rng, params);
      const VerificationReport report = verify_one(necklace, config);
      if (!report.passed(true)) {
        nlohmann::json failure = report_json(report);
        failure["case"] = c;
        failure["encoder"] = render_necklace(necklace);
        failures.push_back(std::move(failure));
      }
    }
    nlohmann::json summary = {{"cases", config.random_cases},
                              {"seed", config.seed},
                              {"failures", failures}};
    out << summary.dump(2) << '\n';
    return failures.empty() ? kOk : kVerificationFailed;
  }

  const PearlNecklace necklace = parse_necklace(read_input(config.input, in));
  const VerificationReport report = verify_one(necklace, config);
  if (!report.warning.empty()) err << "warning: " << report.warning << '\n';
  out << report_json(report).dump(2) << '\n';
  return report.passed(report.warning.empty()) ? kOk : kVerificationFailed;
}

inline int cmd_bench(const CliConfig& config, std::ostream& out) {
  if (config.trials < 1) throw ValidationError("--trials must be >= 1");
  if (config.sizes.empty()) throw ValidationError("--sizes must list at least one size");
  if (config.degree_max < 0) throw ValidationError("--degree-max must be >= 0");
  BenchConfig bench;
  bench.sizes = config.sizes;
  bench.trials = config.trials;
  bench.degree_max = config.degree_max;
  bench.frame_size = config.frame_size;
  bench.seed = config.seed;
  out << bench_csv(run_bench(bench));
  return kOk;
}

/// Entry point shared by the executable and the tests. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Minimal-memory convolutional realization of pearl-necklace encoders", "pearlc"};
  app.require_subcommand(1);
  CliConfig config;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input,-i", config.input, "Encoder file, or - for standard input");
  };

  auto* compile_cmd = app.add_subcommand("compile", "Print the minimal-memory realization");
  add_input(compile_cmd);
  compile_cmd->add_option("--format,-f", config.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* graph_cmd = app.add_subcommand("graph", "Print the non-commutativity graph as DOT");
  add_input(graph_cmd);
  graph_cmd->add_option("--format,-f", config.format, "dot")->check(CLI::IsMember({"dot"}));

  auto* verify_cmd = app.add_subcommand("verify", "Check the realization against the oracles");
  add_input(verify_cmd);
  verify_cmd->add_option("--format,-f", config.format, "json")->check(CLI::IsMember({"json"}));
  verify_cmd->add_option("--window", config.window, "Frames in the simulation window");
  verify_cmd->add_option("--bound", config.bound, "Brute-force bound on frame indices");
  verify_cmd->add_option("--seed", config.seed, "Seed for --random");
  verify_cmd->add_option("--random", config.random_cases,
                         "Verify this many seeded random encoders instead of --input");
  verify_cmd->add_option("--corrupt", config.corrupt,
                         "Debug: lower gate J by one frame before checking");

  auto* bench_cmd = app.add_subcommand("bench", "Time graph construction and longest paths");
  bench_cmd->add_option("--sizes", config.sizes, "Comma-separated gate-string counts")
      ->delimiter(',');
  bench_cmd->add_option("--trials", config.trials, "Encoders per size");
  bench_cmd->add_option("--degree-max", config.degree_max, "Largest |degree|");
  bench_cmd->add_option("--frame", config.frame_size, "Qubits per frame")
      ->check(CLI::Range(2, 1 << 20));
  bench_cmd->add_option("--seed", config.seed, "Random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (compile_cmd->parsed()) return cmd_compile(config, in, out);
    if (graph_cmd->parsed()) return cmd_graph(config, in, out);
    if (verify_cmd->parsed()) return cmd_verify(config, in, out, err);
    return cmd_bench(config, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace pearl::cli
