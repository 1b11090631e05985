// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "coinforge/simulation.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>

namespace coinforge {

std::uint64_t run_seed(const ScenarioConfig& config, std::size_t run_index) {
  return config.base_seed + static_cast<std::uint64_t>(run_index);
}

RunMetrics run_simulation(const ScenarioConfig& config, Strategy strategy, std::size_t run_index) {
  config.validate();
  Rng rng(run_seed(config, run_index));

  TokenPool pool;
  TokenId next_id = 0;
  pool.add({next_id++, config.initial_token_value});

  RunMetrics m;
  m.pool_size_series.reserve(config.iterations);
  m.pool_total_series.reserve(config.iterations);
  m.inputs_sum_series.reserve(config.iterations);
  m.executed_series.reserve(config.iterations);

  for (std::size_t it = 0; it < config.iterations; ++it) {
    const IterationEvents ev = next_iteration(config, rng);
    Amount deposited = 0;
    Amount paid = 0;
    for (Amount d : ev.deposits) {
      pool.add({next_id++, d});
      deposited += d;
    }

    std::size_t inputs = 0;
    std::size_t executed = 0;
    for (Amount target : ev.payments) {
      if (pool.total() < target) {
        ++m.skipped_payments;
        continue;
      }
      const SelectionOutcome out = select(strategy, pool.tokens(), target, rng, config.bin_scheme);
      for (const Token& t : out.selected) pool.remove(t.id);
      if (out.change > 0) pool.add({next_id++, out.change});
      m.inputs_per_payment.push_back(out.selected.size());
      inputs += out.selected.size();
      paid += target;
      ++executed;
    }
    m.pool_size_series.push_back(pool.count());
    m.pool_total_series.push_back(pool.total());
    m.deposited_series.push_back(deposited);
    m.paid_series.push_back(paid);
    m.inputs_sum_series.push_back(inputs);
    m.executed_series.push_back(executed);
  }

  m.final_tokens.reserve(pool.count());
  for (const Token& t : pool.tokens()) {
    m.final_tokens.push_back(t.value);
    if (t.value < config.dust_threshold) ++m.dust_count;
  }
  return m;
}

namespace serial {

std::vector<RunMetrics> run_simulations(const ScenarioConfig& config, Strategy strategy) {
  config.validate();
  std::vector<RunMetrics> out;
  out.reserve(config.runs);
  for (std::size_t r = 0; r < config.runs; ++r) out.push_back(run_simulation(config, strategy, r));
  return out;
}

}  // namespace serial

std::vector<RunMetrics> run_simulations(const ScenarioConfig& config, Strategy strategy) {
  config.validate();
  std::vector<RunMetrics> out(config.runs);
  std::exception_ptr failure;
  const auto runs = static_cast<std::ptrdiff_t>(config.runs);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t r = 0; r < runs; ++r) {
    try {
      out[static_cast<std::size_t>(r)] = run_simulation(config, strategy, static_cast<std::size_t>(r));
    } catch (...) {
#pragma omp critical(coinforge_run_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

namespace {

struct MeanStd {
  double mean;
  double sd;
};

template <typename Get>
MeanStd mean_std(std::size_t n, Get get) {
  double sum = 0.0;
  std::size_t used = 0;
  for (std::size_t r = 0; r < n; ++r) {
    const double x = get(r);
    if (std::isnan(x)) continue;
    sum += x;
    ++used;
  }
  if (used == 0) return {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
  const double mean = sum / static_cast<double>(used);
  double ss = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const double x = get(r);
    if (!std::isnan(x)) ss += (x - mean) * (x - mean);
  }
  return {mean, std::sqrt(ss / static_cast<double>(used))};
}

double iteration_inputs(const RunMetrics& m, std::size_t it) {
  if (m.executed_series[it] == 0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(m.inputs_sum_series[it]) / static_cast<double>(m.executed_series[it]);
}

std::size_t check_shapes(std::span<const RunMetrics> metrics) {
  if (metrics.empty()) throw std::invalid_argument("aggregate_runs: no runs");
  const std::size_t n = metrics.front().pool_size_series.size();
  for (const RunMetrics& m : metrics) {
    if (m.pool_size_series.size() != n || m.inputs_sum_series.size() != n ||
        m.executed_series.size() != n) {
      throw std::invalid_argument("aggregate_runs: series lengths differ between runs");
    }
  }
  return n;
}

void aggregate_iteration(std::span<const RunMetrics> metrics, std::size_t it, AggregateMetrics& a) {
  const std::size_t runs = metrics.size();
  const MeanStd pool = mean_std(runs, [&](std::size_t r) {
    return static_cast<double>(metrics[r].pool_size_series[it]);
  });
  const MeanStd inputs = mean_std(runs, [&](std::size_t r) { return iteration_inputs(metrics[r], it); });
  a.mean_pool[it] = pool.mean;
  a.std_pool[it] = pool.sd;
  a.mean_inputs[it] = inputs.mean;
  a.std_inputs[it] = inputs.sd;
}

AggregateMetrics prepare(std::span<const RunMetrics> metrics, std::size_t n) {
  AggregateMetrics a;
  a.runs = metrics.size();
  a.mean_pool.resize(n);
  a.std_pool.resize(n);
  a.mean_inputs.resize(n);
  a.std_inputs.resize(n);
  return a;
}

void finish(std::span<const RunMetrics> metrics, AggregateMetrics& a) {
  std::size_t payments = 0;
  std::size_t inputs = 0;
  for (const RunMetrics& m : metrics) {
    a.pooled_final_tokens.insert(a.pooled_final_tokens.end(), m.final_tokens.begin(), m.final_tokens.end());
    a.total_dust += m.dust_count;
    a.total_skipped += m.skipped_payments;
    payments += m.inputs_per_payment.size();
    for (std::size_t k : m.inputs_per_payment) inputs += k;
  }
  const MeanStd final_pool = mean_std(metrics.size(), [&](std::size_t r) {
    const auto& s = metrics[r].pool_size_series;
    return s.empty() ? 0.0 : static_cast<double>(s.back());
  });
  a.mean_final_pool = final_pool.mean;
  a.std_final_pool = final_pool.sd;
  a.mean_inputs_per_payment =
      payments == 0 ? 0.0 : static_cast<double>(inputs) / static_cast<double>(payments);
}

}  // namespace

namespace serial {

AggregateMetrics aggregate_runs(std::span<const RunMetrics> metrics) {
  const std::size_t n = check_shapes(metrics);
  AggregateMetrics a = prepare(metrics, n);
  for (std::size_t it = 0; it < n; ++it) aggregate_iteration(metrics, it, a);
  finish(metrics, a);
  return a;
}

}  // namespace serial

AggregateMetrics aggregate_runs(std::span<const RunMetrics> metrics) {
  const std::size_t n = check_shapes(metrics);
  AggregateMetrics a = prepare(metrics, n);
  const auto iterations = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t it = 0; it < iterations; ++it) {
    aggregate_iteration(metrics, static_cast<std::size_t>(it), a);
  }
  finish(metrics, a);
  return a;
}

}  // namespace coinforge
