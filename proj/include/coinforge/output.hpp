// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "coinforge/histogram.hpp"
#include "coinforge/simulation.hpp"
#include "coinforge/spend_bench.hpp"

namespace coinforge::output {

// CSV schemas (header row first, column order fixed):
//   pool_size.csv   iteration,mean_pool,std_pool
//   inputs.csv      iteration,mean_inputs,std_inputs
//   histogram.csv   bin_lo,bin_hi,count
//   bench.csv       strategy,threads,mean_latency_ns,contention_rate,total_spends
// Iterations count from 1. Real numbers use the shortest round-trip form,
// contention rates fixed with 9 decimals, latencies integer nanoseconds.

std::string pool_size_csv(const AggregateMetrics& agg);
std::string inputs_csv(const AggregateMetrics& agg);
std::string histogram_csv(const Histogram& h);
std::string bench_csv(std::span<const BenchMetrics> cells);

std::string format_real(double x);

// Writes `contents` to `path`; throws std::runtime_error if that fails.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace coinforge::output
