// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "coinforge/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>

#include "coinforge/histogram.hpp"
#include "coinforge/output.hpp"
#include "coinforge/rng.hpp"
#include "coinforge/scenario.hpp"
#include "coinforge/simulation.hpp"
#include "coinforge/spend_bench.hpp"

#ifndef COINFORGE_VERSION
#define COINFORGE_VERSION "0.0.0"
#endif

namespace coinforge::cli {

namespace fs = std::filesystem;
using nlohmann::json;

const char* version() { return COINFORGE_VERSION; }

namespace {

struct SimulateOptions {
  std::string scenario;
  std::string strategy;
  std::size_t iterations = 1000;
  std::size_t runs = 1;
  std::uint64_t seed = 1;
  std::string out = "coinforge-out";
  std::optional<Amount> dust_threshold;
  std::size_t bins = kDefaultHistogramBins;
  std::optional<int> bin_base;
};

struct BenchOptions {
  std::vector<std::string> strategies{"bd", "rd", "greedy"};
  std::vector<std::size_t> threads{1, 2, 4, 8, 16};
  std::size_t ops_per_thread = 2000;
  std::uint64_t seed = 1;
  std::size_t max_retries = 3;
  std::string out = "coinforge-out";
};

json manifest_base(const char* command, const std::vector<std::string>& args) {
  return json{{"tool", "coinforge"},
              {"version", version()},
              {"command", command},
              {"arguments", args},
              {"rng", kRngAlgorithm}};
}

json config_json(const ScenarioConfig& c) {
  return json{{"scenario", to_string(c.kind)},
              {"deposits_per_iteration", c.deposits_per_iteration},
              {"payments_per_iteration", c.payments_per_iteration},
              {"deposit_mean", c.deposit_mean},
              {"deposit_sd", c.deposit_sd},
              {"payment_mean", c.payment_mean},
              {"payment_sd", c.payment_sd},
              {"initial_token_value", c.initial_token_value},
              {"iterations", c.iterations},
              {"runs", c.runs},
              {"base_seed", c.base_seed},
              {"dust_threshold", c.dust_threshold},
              {"bin_base", c.bin_scheme.base == BinScheme::Base::two ? 2 : 10}};
}

fs::path prepare_out_dir(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec || !fs::is_directory(p)) {
    throw std::runtime_error("cannot create output directory " + dir);
  }
  return p;
}

int simulate(const SimulateOptions& o, const std::vector<std::string>& args, std::ostream& out) {
  const Strategy strategy = *parse_strategy(o.strategy);
  if (o.bin_base && strategy != Strategy::boltzmann_binned) {
    throw CLI::ValidationError("--bin-base", "only applies to --strategy bd-binned");
  }

  ScenarioConfig cfg = ScenarioConfig::defaults(*parse_scenario(o.scenario));
  cfg.iterations = o.iterations;
  cfg.runs = o.runs;
  cfg.base_seed = o.seed;
  if (o.dust_threshold) cfg.dust_threshold = *o.dust_threshold;
  if (o.bin_base == 10) cfg.bin_scheme.base = BinScheme::Base::ten;
  cfg.validate();

  const fs::path dir = prepare_out_dir(o.out);
  const std::vector<RunMetrics> runs = run_simulations(cfg, strategy);
  const AggregateMetrics agg = aggregate_runs(runs);

  // Writes happen only after every run has joined.
  output::write_file(dir / "pool_size.csv", output::pool_size_csv(agg));
  output::write_file(dir / "inputs.csv", output::inputs_csv(agg));
  output::write_file(dir / "histogram.csv",
                     agg.pooled_final_tokens.empty()
                         ? std::string("bin_lo,bin_hi,count\n")
                         : output::histogram_csv(final_histogram(agg.pooled_final_tokens, o.bins)));

  const json summary{{"scenario", to_string(cfg.kind)},
                     {"strategy", to_string(strategy)},
                     {"runs", cfg.runs},
                     {"iterations", cfg.iterations},
                     {"mean_final_pool_size", agg.mean_final_pool},
                     {"std_final_pool_size", agg.std_final_pool},
                     {"mean_inputs_per_payment", agg.mean_inputs_per_payment},
                     {"dust_threshold", cfg.dust_threshold},
                     {"dust_count_total", agg.total_dust},
                     {"mean_dust_count", static_cast<double>(agg.total_dust) / static_cast<double>(agg.runs)},
                     {"skipped_payments_total", agg.total_skipped},
                     {"final_tokens_pooled", agg.pooled_final_tokens.size()}};
  output::write_file(dir / "summary.json", summary.dump(2) + "\n");

  json manifest = manifest_base("simulate", args);
  manifest["strategy"] = to_string(strategy);
  manifest["config"] = config_json(cfg);
  manifest["histogram_bins"] = o.bins;
  manifest["run_seed_rule"] = "base_seed + run_index";
  output::write_file(dir / "manifest.json", manifest.dump(2) + "\n");

  out << to_string(cfg.kind) << '/' << to_string(strategy) << ": " << cfg.runs << " runs x "
      << cfg.iterations << " iterations, mean final pool " << agg.mean_final_pool
      << ", mean inputs/payment " << agg.mean_inputs_per_payment << ", dust " << agg.total_dust
      << ", skipped " << agg.total_skipped << " -> " << dir.string() << '\n';
  return 0;
}

int bench(const BenchOptions& o, const std::vector<std::string>& args, std::ostream& out,
          std::ostream& err) {
  std::vector<Strategy> strategies;
  for (const std::string& s : o.strategies) {
    const auto parsed = parse_strategy(s);
    if (!parsed) throw CLI::ValidationError("--strategy", "unknown strategy " + s);
    strategies.push_back(*parsed);
  }
  const fs::path dir = prepare_out_dir(o.out);

  std::vector<BenchMetrics> cells;
  bool all_ok = true;
  for (Strategy s : strategies) {
    for (std::size_t threads : o.threads) {
      BenchConfig cfg;
      cfg.strategy = s;
      cfg.threads = threads;
      cfg.ops_per_thread = o.ops_per_thread;
      cfg.seed = o.seed;
      cfg.max_retries = o.max_retries;
      try {
        cells.push_back(run_bench(cfg));
        const BenchMetrics& c = cells.back();
        out << to_string(s) << " threads=" << threads << " latency_ns=" << std::llround(c.mean_latency_ns)
            << " contention=" << c.contention_rate << '\n';
      } catch (const std::exception& e) {
        err << "bench " << to_string(s) << " x" << threads << " failed: " << e.what() << '\n';
        all_ok = false;
      }
    }
  }

  output::write_file(dir / "bench.csv", output::bench_csv(cells));
  json manifest = manifest_base("bench", args);
  manifest["strategies"] = o.strategies;
  manifest["threads"] = o.threads;
  manifest["ops_per_thread"] = o.ops_per_thread;
  manifest["seed"] = o.seed;
  manifest["max_retries"] = o.max_retries;
  manifest["worker_seed_rule"] = "seed ^ (0x9E3779B97F4A7C15 * (thread_index + 1))";
  manifest["workload"] = config_json(BenchConfig{}.workload);
  output::write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  return all_ok ? 0 : 1;
}

// Subcommand config files are expanded into flags ahead of parsing so that
// required options can come from the file and explicit flags still win.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  const auto given = [&](const std::string& flag) {
    return std::any_of(args.begin(), args.end(),
                       [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
  };
  std::vector<std::string> expanded = args;
  for (const CLI::ConfigItem& item : CLI::ConfigINI{}.from_file(path)) {
    if (item.name == "config" || item.name == "++" || item.name == "--" || !item.parents.empty()) continue;
    const std::string flag = "--" + item.name;
    if (given(flag)) continue;
    std::string value;
    for (const std::string& v : item.inputs) value += (value.empty() ? "" : ",") + v;
    expanded.push_back(flag);
    expanded.push_back(value);
  }
  return expanded;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coin selection simulator and concurrent spend benchmark", "coinforge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());

  SimulateOptions sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run wallet simulations for one strategy");
  std::string config_path;
  simulate_cmd->add_option("--config", config_path, "File of key = value lines using the flag names");
  simulate_cmd->add_option("--scenario", sim.scenario, "Deposit/payment scenario")
      ->required()
      ->check(CLI::IsMember({"normal", "poisson", "dirichlet"}));
  simulate_cmd->add_option("--strategy", sim.strategy, "Coin selection strategy")
      ->required()
      ->check(CLI::IsMember({"bd", "rd", "greedy", "bd-binned", "hvf"}));
  simulate_cmd->add_option("--iterations", sim.iterations)->capture_default_str()->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--runs", sim.runs)->capture_default_str()->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", sim.seed, "Base seed; run r uses seed + r")->capture_default_str();
  simulate_cmd->add_option("--out", sim.out, "Output directory")->envname("COINFORGE_OUT")->capture_default_str();
  simulate_cmd->add_option("--dust-threshold", sim.dust_threshold, "Values below this count as dust")
      ->check(CLI::NonNegativeNumber);
  simulate_cmd->add_option("--bins", sim.bins, "Histogram bins")->capture_default_str()->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--bin-base", sim.bin_base, "Value bins for bd-binned")->check(CLI::IsMember({2, 10}));

  BenchOptions bo;
  auto* bench_cmd = app.add_subcommand("bench", "Measure spend latency and contention on a shared wallet");
  bench_cmd->add_option("--config", config_path, "File of key = value lines using the flag names");
  bench_cmd->add_option("--strategy", bo.strategies, "Comma-separated strategies")
      ->delimiter(',')
      ->capture_default_str()
      ->check(CLI::IsMember({"bd", "rd", "greedy", "bd-binned", "hvf"}));
  bench_cmd->add_option("--threads", bo.threads, "Comma-separated thread counts")
      ->delimiter(',')
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--ops-per-thread", bo.ops_per_thread)->capture_default_str()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bo.seed)->capture_default_str();
  bench_cmd->add_option("--max-retries", bo.max_retries)->capture_default_str()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bo.out, "Output directory")->envname("COINFORGE_OUT")->capture_default_str();

  try {
    const std::vector<std::string> full = expand_config(args);
    std::vector<const char*> argv{"coinforge"};
    for (const std::string& a : full) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (*simulate_cmd) return simulate(sim, args, out);
    return bench(bo, args, out, err);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const std::exception& e) {
    err << "coinforge: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace coinforge::cli
