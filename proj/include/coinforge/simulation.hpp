// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "coinforge/scenario.hpp"
#include "coinforge/selection.hpp"
#include "coinforge/token.hpp"

namespace coinforge {

struct RunMetrics {
  std::vector<std::size_t> pool_size_series;   // after each iteration
  std::vector<Amount> pool_total_series;       // after each iteration
  std::vector<Amount> deposited_series;        // sum of the iteration's deposits
  std::vector<Amount> paid_series;             // sum of its executed payment targets
  std::vector<std::size_t> inputs_per_payment;  // executed payments, in order
  // Per iteration: inputs summed over executed payments, and how many executed.
  std::vector<std::size_t> inputs_sum_series;
  std::vector<std::size_t> executed_series;
  std::size_t skipped_payments = 0;
  std::vector<Amount> final_tokens;
  std::size_t dust_count = 0;

  friend bool operator==(const RunMetrics&, const RunMetrics&) = default;
};

/// Seed of run `run_index`: base_seed + run_index.
std::uint64_t run_seed(const ScenarioConfig& config, std::size_t run_index);

/// One wallet simulation. Each iteration applies its deposits, then its
/// payments in order; a payment the pool cannot cover is skipped and counted.
/// Scenario and selection draws share one generator, so the result is a pure
/// function of (config, strategy, run_index).
RunMetrics run_simulation(const ScenarioConfig& config, Strategy strategy, std::size_t run_index);

/// All config.runs runs, in parallel across run indices, ordered by index.
std::vector<RunMetrics> run_simulations(const ScenarioConfig& config, Strategy strategy);

namespace serial {
std::vector<RunMetrics> run_simulations(const ScenarioConfig& config, Strategy strategy);
}  // namespace serial

struct AggregateMetrics {
  std::size_t runs = 0;
  std::vector<double> mean_pool;
  std::vector<double> std_pool;  // population deviation across runs
  // Per-iteration average over executed payments, then across runs that
  // executed at least one payment in that iteration (NaN if none did).
  std::vector<double> mean_inputs;
  std::vector<double> std_inputs;
  std::vector<Amount> pooled_final_tokens;  // concatenated in run order
  double mean_final_pool = 0.0;
  double std_final_pool = 0.0;
  double mean_inputs_per_payment = 0.0;  // over every executed payment of every run
  std::size_t total_dust = 0;
  std::size_t total_skipped = 0;
};

/// Throws std::invalid_argument for an empty list or mismatched series lengths.
AggregateMetrics aggregate_runs(std::span<const RunMetrics> metrics);

namespace serial {
AggregateMetrics aggregate_runs(std::span<const RunMetrics> metrics);
}  // namespace serial

}  // namespace coinforge
