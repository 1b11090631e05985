// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace coinforge {

/// One generator per simulation run (or per bench worker) feeds every draw.
using Rng = std::mt19937_64;

/// Recorded in run manifests so outputs can be replayed.
inline constexpr const char* kRngAlgorithm = "mt19937_64";

/// Uniform variate in [0, 1) from the top 53 bits of a single generator output.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace coinforge
