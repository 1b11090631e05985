// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coinforge/rng.hpp"
#include "coinforge/token.hpp"

namespace coinforge {

/// Inverse temperature m / E of the tokens still available for selection.
///
/// Returns 0 when every remaining value is zero: all weights are equal then,
/// whatever beta is. Throws std::invalid_argument for an empty view.
double compute_beta(std::span<const Token> remaining);
double compute_beta(std::size_t count, Amount total);

/// Pools at least this large have their weights computed in parallel.
inline constexpr std::size_t kParallelWeightThreshold = 1 << 14;

// Writes exp(-beta * (v - v_min)) for each value. The shift by the minimum
// cancels in the normalized distribution and guarantees one weight is exactly 1.
void boltzmann_weights(std::span<const Amount> values, double beta, std::span<double> out);
std::vector<double> boltzmann_weights(std::span<const Amount> values, double beta);

namespace serial {
// Single-threaded reference for the kernel above; results are bit-identical.
void boltzmann_weights(std::span<const Amount> values, double beta, std::span<double> out);
}  // namespace serial

/// Weights divided by their sum.
std::vector<double> normalize(std::span<const double> weights);

/// Index i with probability w_i / sum(w), from one uniform variate and a
/// cumulative scan. Throws std::invalid_argument unless some weight is positive.
std::size_t weighted_draw(std::span<const double> weights, Rng& rng);

/// Pluggable per-token weight used by the draw loop.
struct WeightFunction {
  enum class Kind { boltzmann, uniform, reciprocal };

  Kind kind = Kind::boltzmann;
  // Boltzmann only. Unset means beta = m / E, recomputed before every draw.
  std::optional<double> fixed_beta;

  static WeightFunction boltzmann() { return {Kind::boltzmann, std::nullopt}; }
  static WeightFunction boltzmann_fixed(double beta) { return {Kind::boltzmann, beta}; }
  static WeightFunction uniform() { return {Kind::uniform, std::nullopt}; }
  // 1 / v, with zero-valued tokens weighted as if worth one unit.
  static WeightFunction reciprocal() { return {Kind::reciprocal, std::nullopt}; }

  void fill(std::span<const Amount> values, std::size_t count, Amount total,
            std::span<double> out) const;
};

}  // namespace coinforge
