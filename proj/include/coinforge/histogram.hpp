// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "coinforge/token.hpp"

namespace coinforge {

inline constexpr std::size_t kDefaultHistogramBins = 200;

struct Histogram {
  std::vector<double> edges;          // bins + 1, non-decreasing, span [min, max]
  std::vector<std::uint64_t> counts;  // one per bin

  std::uint64_t total() const;
};

/// Equal-width histogram over [min, max]. The maximum lands in the last bin;
/// if every value is equal they all land in bin 0. Throws on empty input or
/// zero bins.
Histogram final_histogram(std::span<const Amount> values, std::size_t bins = kDefaultHistogramBins);

namespace serial {
Histogram final_histogram(std::span<const Amount> values, std::size_t bins = kDefaultHistogramBins);
}  // namespace serial

}  // namespace coinforge
