// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "coinforge/output.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coinforge::output {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

std::string series_csv(const char* header, const std::vector<double>& mean,
                       const std::vector<double>& sd) {
  std::ostringstream os;
  os << header << '\n';
  for (std::size_t i = 0; i < mean.size(); ++i) {
    os << i + 1 << ',' << format_real(mean[i]) << ',' << format_real(sd[i]) << '\n';
  }
  return os.str();
}

}  // namespace

std::string pool_size_csv(const AggregateMetrics& agg) {
  return series_csv("iteration,mean_pool,std_pool", agg.mean_pool, agg.std_pool);
}

std::string inputs_csv(const AggregateMetrics& agg) {
  return series_csv("iteration,mean_inputs,std_inputs", agg.mean_inputs, agg.std_inputs);
}

std::string histogram_csv(const Histogram& h) {
  std::ostringstream os;
  os << "bin_lo,bin_hi,count\n";
  for (std::size_t j = 0; j < h.counts.size(); ++j) {
    os << format_real(h.edges[j]) << ',' << format_real(h.edges[j + 1]) << ',' << h.counts[j] << '\n';
  }
  return os.str();
}

std::string bench_csv(std::span<const BenchMetrics> cells) {
  std::ostringstream os;
  os << "strategy,threads,mean_latency_ns,contention_rate,total_spends\n";
  for (const BenchMetrics& c : cells) {
    char rate[32];
    std::snprintf(rate, sizeof rate, "%.9f", c.contention_rate);
    os << to_string(c.strategy) << ',' << c.threads << ',' << std::llround(c.mean_latency_ns) << ','
       << rate << ',' << c.total_spends << '\n';
  }
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << contents;
  f.close();
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace coinforge::output
