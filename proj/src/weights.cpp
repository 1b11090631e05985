// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "coinforge/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace coinforge {

double compute_beta(std::size_t count, Amount total) {
  if (count == 0) throw std::invalid_argument("compute_beta: no tokens remaining");
  if (total < 0) throw std::invalid_argument("compute_beta: negative total");
  if (total == 0) return 0.0;
  return static_cast<double>(count) / static_cast<double>(total);
}

double compute_beta(std::span<const Token> remaining) {
  return compute_beta(remaining.size(), total_value(remaining));
}

namespace {

void check_sizes(std::span<const Amount> values, std::span<double> out) {
  if (values.size() != out.size()) throw std::invalid_argument("boltzmann_weights: size mismatch");
}

}  // namespace

namespace serial {

void boltzmann_weights(std::span<const Amount> values, double beta, std::span<double> out) {
  check_sizes(values, out);
  if (values.empty()) return;
  const Amount v_min = *std::min_element(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = std::exp(-beta * static_cast<double>(values[i] - v_min));
  }
}

}  // namespace serial

void boltzmann_weights(std::span<const Amount> values, double beta, std::span<double> out) {
  check_sizes(values, out);
  const std::size_t n = values.size();
  if (n < kParallelWeightThreshold) {
    serial::boltzmann_weights(values, beta, out);
    return;
  }
  const Amount* v = values.data();
  double* w = out.data();
  Amount v_min = std::numeric_limits<Amount>::max();
#pragma omp parallel for simd reduction(min : v_min)
  for (std::size_t i = 0; i < n; ++i) v_min = std::min(v_min, v[i]);
#pragma omp parallel for
  for (std::size_t i = 0; i < n; ++i) w[i] = std::exp(-beta * static_cast<double>(v[i] - v_min));
}

std::vector<double> boltzmann_weights(std::span<const Amount> values, double beta) {
  std::vector<double> out(values.size());
  boltzmann_weights(values, beta, out);
  return out;
}

std::vector<double> normalize(std::span<const double> weights) {
  double sum = 0.0;
  for (double w : weights) sum += w;
  if (!(sum > 0.0)) throw std::invalid_argument("normalize: weights sum to zero");
  std::vector<double> p(weights.begin(), weights.end());
  for (double& x : p) x /= sum;
  return p;
}

std::size_t weighted_draw(std::span<const double> weights, Rng& rng) {
  double total = 0.0;
  std::size_t last_positive = weights.size();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!(w >= 0.0) || std::isinf(w)) throw std::invalid_argument("weighted_draw: invalid weight");
    if (w > 0.0) last_positive = i;
    total += w;
  }
  if (last_positive == weights.size()) throw std::invalid_argument("weighted_draw: all weights zero");

  const double threshold = uniform01(rng) * total;
  double cumulative = 0.0;
  for (std::size_t i = 0; i < last_positive; ++i) {
    cumulative += weights[i];
    if (weights[i] > 0.0 && threshold < cumulative) return i;
  }
  // Rounding can leave the threshold at or beyond the final partial sum.
  return last_positive;
}

void WeightFunction::fill(std::span<const Amount> values, std::size_t count, Amount total,
                          std::span<double> out) const {
  switch (kind) {
    case Kind::boltzmann:
      boltzmann_weights(values, fixed_beta ? *fixed_beta : compute_beta(count, total), out);
      return;
    case Kind::uniform:
      std::fill(out.begin(), out.end(), 1.0);
      return;
    case Kind::reciprocal:
      for (std::size_t i = 0; i < values.size(); ++i) {
        out[i] = 1.0 / static_cast<double>(std::max<Amount>(values[i], 1));
      }
      return;
  }
}

}  // namespace coinforge
