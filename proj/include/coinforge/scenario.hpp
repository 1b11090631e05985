// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "coinforge/bins.hpp"
#include "coinforge/rng.hpp"
#include "coinforge/token.hpp"

namespace coinforge {

enum class ScenarioKind { normal, poisson, dirichlet };

std::string_view to_string(ScenarioKind k);
std::optional<ScenarioKind> parse_scenario(std::string_view name);

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::normal;
  std::size_t deposits_per_iteration = 3;
  std::size_t payments_per_iteration = 1;
  // Poisson uses only the means. Dirichlet deposits are the constant mean,
  // and its payments split the iteration's deposits exactly.
  double deposit_mean = 1000.0;
  double deposit_sd = 250.0;
  double payment_mean = 3000.0;
  double payment_sd = 500.0;
  Amount initial_token_value = 10'000'000;
  std::size_t iterations = 1000;
  std::size_t runs = 1;
  std::uint64_t base_seed = 1;
  // Reporting only; never consulted by a selector.
  Amount dust_threshold = 10;
  BinScheme bin_scheme{};

  /// Scenario defaults: normal and poisson use 3 deposits around 1000 and one
  /// payment around 3000 on a 10^7 start; dirichlet is one deposit of 2000
  /// spent by 10 payments on a 2000 start.
  static ScenarioConfig defaults(ScenarioKind kind);

  // Throws std::invalid_argument describing the first bad field.
  void validate() const;
};

struct IterationEvents {
  std::vector<Amount> deposits;
  std::vector<Amount> payments;
};

/// Draws one iteration's deposits and payments. Every value is at least 1.
IterationEvents next_iteration(const ScenarioConfig& config, Rng& rng);

}  // namespace coinforge
