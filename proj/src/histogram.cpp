// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "coinforge/histogram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coinforge {

std::uint64_t Histogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

namespace {

constexpr std::size_t kParallelHistogramThreshold = 1 << 15;

// Offset times bin count can exceed 64 bits for values near 10^17.
__extension__ using Wide = unsigned __int128;

struct Binner {
  Amount lo;
  Wide span;
  std::size_t bins;

  std::size_t operator()(Amount v) const {
    if (span == 0) return 0;
    const auto offset = static_cast<Wide>(v - lo);
    const auto j = static_cast<std::size_t>(offset * bins / span);
    return std::min(j, bins - 1);
  }
};

Histogram empty_histogram(std::span<const Amount> values, std::size_t bins, Binner& binner) {
  if (values.empty()) throw std::invalid_argument("final_histogram: no values");
  if (bins == 0) throw std::invalid_argument("final_histogram: zero bins");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  binner = Binner{*lo, static_cast<Wide>(*hi - *lo), bins};

  Histogram h;
  h.counts.assign(bins, 0);
  h.edges.resize(bins + 1);
  const double width = static_cast<double>(*hi - *lo);
  for (std::size_t k = 0; k <= bins; ++k) {
    h.edges[k] = static_cast<double>(*lo) + width * static_cast<double>(k) / static_cast<double>(bins);
  }
  h.edges.back() = static_cast<double>(*hi);
  return h;
}

}  // namespace

namespace serial {

Histogram final_histogram(std::span<const Amount> values, std::size_t bins) {
  Binner binner{};
  Histogram h = empty_histogram(values, bins, binner);
  for (Amount v : values) ++h.counts[binner(v)];
  return h;
}

}  // namespace serial

Histogram final_histogram(std::span<const Amount> values, std::size_t bins) {
  if (values.size() < kParallelHistogramThreshold) return serial::final_histogram(values, bins);

  Binner binner{};
  Histogram h = empty_histogram(values, bins, binner);
  const std::size_t n = values.size();
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for nowait
    for (std::size_t i = 0; i < n; ++i) ++local[binner(values[i])];
#pragma omp critical(coinforge_histogram_merge)
    for (std::size_t j = 0; j < bins; ++j) h.counts[j] += local[j];
  }
  return h;
}

}  // namespace coinforge
