// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "coinforge/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace coinforge {

std::string_view to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::normal: return "normal";
    case ScenarioKind::poisson: return "poisson";
    case ScenarioKind::dirichlet: return "dirichlet";
  }
  return "unknown";
}

std::optional<ScenarioKind> parse_scenario(std::string_view name) {
  if (name == "normal") return ScenarioKind::normal;
  if (name == "poisson") return ScenarioKind::poisson;
  if (name == "dirichlet") return ScenarioKind::dirichlet;
  return std::nullopt;
}

ScenarioConfig ScenarioConfig::defaults(ScenarioKind kind) {
  ScenarioConfig c;
  c.kind = kind;
  switch (kind) {
    case ScenarioKind::normal:
      break;
    case ScenarioKind::poisson:
      c.deposit_sd = std::sqrt(c.deposit_mean);
      c.payment_sd = std::sqrt(c.payment_mean);
      break;
    case ScenarioKind::dirichlet:
      c.deposits_per_iteration = 1;
      c.payments_per_iteration = 10;
      c.deposit_mean = 2000.0;
      c.deposit_sd = 0.0;
      c.payment_mean = 200.0;
      c.payment_sd = 0.0;
      c.initial_token_value = 2000;
      c.dust_threshold = 20;
      break;
  }
  return c;
}

void ScenarioConfig::validate() const {
  auto fail = [](const char* what) { throw std::invalid_argument(what); };
  if (iterations == 0) fail("iterations must be at least 1");
  if (runs == 0) fail("runs must be at least 1");
  if (initial_token_value < 1) fail("initial token value must be at least 1");
  if (dust_threshold < 0) fail("dust threshold must be non-negative");
  if (!(deposit_mean > 0.0) || !(payment_mean > 0.0)) fail("means must be positive");
  if (!(deposit_sd >= 0.0) || !(payment_sd >= 0.0)) fail("standard deviations must be non-negative");
  if (kind == ScenarioKind::dirichlet) {
    if (deposits_per_iteration == 0) fail("dirichlet scenario needs at least one deposit");
    if (payments_per_iteration == 0) fail("dirichlet scenario needs at least one payment");
  }
}

namespace {

Amount at_least_one(double x) { return std::max<Amount>(1, std::llround(x)); }

Amount draw_normal(double mean, double sd, Rng& rng) {
  if (sd == 0.0) return at_least_one(mean);
  std::normal_distribution<double> law(mean, sd);
  return at_least_one(law(rng));
}

Amount draw_poisson(double mean, Rng& rng) {
  std::poisson_distribution<Amount> law(mean);
  return std::max<Amount>(1, law(rng));
}

// Splits `total` into parts following a flat Dirichlet: normalized unit
// exponentials, rounded, with the rounding remainder carried by the last part.
std::vector<Amount> dirichlet_split(Amount total, std::size_t parts, Rng& rng) {
  if (total < static_cast<Amount>(parts)) {
    throw std::invalid_argument("dirichlet total smaller than the number of payments");
  }
  std::exponential_distribution<double> unit(1.0);
  std::vector<double> x(parts);
  for (double& v : x) v = unit(rng);
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);

  std::vector<Amount> out(parts);
  Amount assigned = 0;
  for (std::size_t i = 0; i + 1 < parts; ++i) {
    out[i] = at_least_one(static_cast<double>(total) * x[i] / sum);
    assigned += out[i];
  }
  out.back() = total - assigned;
  // Clamping and rounding can overdraw the last part; take the excess from
  // the largest parts one unit at a time.
  while (out.back() < 1) {
    auto largest = std::max_element(out.begin(), out.end() - 1);
    --*largest;
    ++out.back();
  }
  return out;
}

}  // namespace

IterationEvents next_iteration(const ScenarioConfig& config, Rng& rng) {
  IterationEvents ev;
  ev.deposits.reserve(config.deposits_per_iteration);
  ev.payments.reserve(config.payments_per_iteration);
  switch (config.kind) {
    case ScenarioKind::normal:
      for (std::size_t i = 0; i < config.deposits_per_iteration; ++i) {
        ev.deposits.push_back(draw_normal(config.deposit_mean, config.deposit_sd, rng));
      }
      for (std::size_t i = 0; i < config.payments_per_iteration; ++i) {
        ev.payments.push_back(draw_normal(config.payment_mean, config.payment_sd, rng));
      }
      break;
    case ScenarioKind::poisson:
      for (std::size_t i = 0; i < config.deposits_per_iteration; ++i) {
        ev.deposits.push_back(draw_poisson(config.deposit_mean, rng));
      }
      for (std::size_t i = 0; i < config.payments_per_iteration; ++i) {
        ev.payments.push_back(draw_poisson(config.payment_mean, rng));
      }
      break;
    case ScenarioKind::dirichlet: {
      ev.deposits.assign(config.deposits_per_iteration, at_least_one(config.deposit_mean));
      const Amount total = std::accumulate(ev.deposits.begin(), ev.deposits.end(), Amount{0});
      ev.payments = dirichlet_split(total, config.payments_per_iteration, rng);
      break;
    }
  }
  return ev;
}

}  // namespace coinforge
