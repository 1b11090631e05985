// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "coinforge/selection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace coinforge {

InsufficientFunds::InsufficientFunds(Amount target, Amount available)
    : std::runtime_error("insufficient funds: target " + std::to_string(target) +
                         ", available " + std::to_string(available)),
      target_(target),
      available_(available) {}

namespace detail {

void check_target(Amount target) {
  if (target <= 0) throw std::invalid_argument("target must be positive");
}

SelectionOutcome take_all(std::span<const Token> pool) {
  SelectionOutcome out;
  out.selected.assign(pool.begin(), pool.end());
  // Zero-valued tokens go first so the last token is the one that completes the sum.
  std::stable_partition(out.selected.begin(), out.selected.end(),
                        [](const Token& t) { return t.value == 0; });
  return out;
}

}  // namespace detail

namespace {

// Common preamble; returns the pool total when a draw loop is needed.
std::optional<SelectionOutcome> trivial_outcome(std::span<const Token> pool, Amount target,
                                                Amount& total) {
  detail::check_target(target);
  total = total_value(pool);
  if (total < target) throw InsufficientFunds(target, total);
  if (total == target) return detail::take_all(pool);
  return std::nullopt;
}

template <typename T>
void swap_remove(std::vector<T>& v, std::size_t i) {
  v[i] = v.back();
  v.pop_back();
}

}  // namespace

SelectionOutcome select_weighted(std::span<const Token> pool, Amount target, Rng& rng,
                                 const WeightFunction& weight) {
  Amount remaining_total = 0;
  if (auto done = trivial_outcome(pool, target, remaining_total)) return std::move(*done);

  std::vector<Token> remaining(pool.begin(), pool.end());
  std::vector<Amount> values(pool.size());
  std::transform(pool.begin(), pool.end(), values.begin(), [](const Token& t) { return t.value; });
  std::vector<double> weights(pool.size());

  SelectionOutcome out;
  Amount selected_sum = 0;
  while (selected_sum < target) {
    const std::size_t m = remaining.size();
    const std::span<double> w(weights.data(), m);
    weight.fill(std::span<const Amount>(values.data(), m), m, remaining_total, w);
    const std::size_t i = weighted_draw(w, rng);

    const Token t = remaining[i];
    out.selected.push_back(t);
    selected_sum += t.value;
    remaining_total -= t.value;
    swap_remove(remaining, i);
    swap_remove(values, i);
    ++out.draws;
  }
  out.change = selected_sum - target;
  return out;
}

SelectionOutcome select_boltzmann(std::span<const Token> pool, Amount target, Rng& rng) {
  return select_weighted(pool, target, rng, WeightFunction::boltzmann());
}

SelectionOutcome select_random(std::span<const Token> pool, Amount target, Rng& rng) {
  return select_weighted(pool, target, rng, WeightFunction::uniform());
}

SelectionOutcome select_boltzmann_binned(std::span<const Token> pool, Amount target, Rng& rng,
                                         BinScheme scheme) {
  Amount remaining_total = 0;
  if (auto done = trivial_outcome(pool, target, remaining_total)) return std::move(*done);

  std::vector<std::vector<Token>> bins;
  for (const Token& t : pool) {
    const std::size_t j = scheme.index(t.value);
    if (j >= bins.size()) bins.resize(j + 1);
    bins[j].push_back(t);
  }
  std::vector<double> sup(bins.size());
  for (std::size_t j = 0; j < bins.size(); ++j) sup[j] = scheme.upper(j);

  std::vector<double> bin_weights(bins.size());
  std::vector<double> ones;
  std::size_t remaining_count = pool.size();

  SelectionOutcome out;
  Amount selected_sum = 0;
  while (selected_sum < target) {
    const double beta = compute_beta(remaining_count, remaining_total);

    std::size_t filled = 0;
    std::size_t only = 0;
    double sup_min = 0.0;
    for (std::size_t j = 0; j < bins.size(); ++j) {
      if (bins[j].empty()) continue;
      if (filled == 0) sup_min = sup[j];
      ++filled;
      only = j;
    }
    std::size_t j = only;
    if (filled > 1) {
      for (std::size_t k = 0; k < bins.size(); ++k) {
        bin_weights[k] = bins[k].empty() ? 0.0 : std::exp(-beta * (sup[k] - sup_min));
      }
      j = weighted_draw(bin_weights, rng);
    }

    // Within the bin the draw is Random Draw, using the same procedure.
    std::vector<Token>& bin = bins[j];
    ones.assign(bin.size(), 1.0);
    const std::size_t i = weighted_draw(ones, rng);

    const Token t = bin[i];
    out.selected.push_back(t);
    selected_sum += t.value;
    remaining_total -= t.value;
    --remaining_count;
    swap_remove(bin, i);
    ++out.draws;
  }
  out.change = selected_sum - target;
  return out;
}

SelectionOutcome select_greedy(std::span<const Token> pool, Amount target) {
  detail::check_target(target);
  const Amount total = total_value(pool);
  std::vector<Token> sorted(pool.begin(), pool.end());
  std::sort(sorted.begin(), sorted.end(), DescendingValue{});
  return select_greedy_sorted(sorted, total, target);
}

SelectionOutcome select_highest_value_first(std::span<const Token> pool, Amount target) {
  detail::check_target(target);
  const Amount total = total_value(pool);
  if (total < target) throw InsufficientFunds(target, total);

  std::vector<Token> sorted(pool.begin(), pool.end());
  std::sort(sorted.begin(), sorted.end(), DescendingValue{});
  SelectionOutcome out;
  Amount sum = 0;
  for (const Token& t : sorted) {
    out.selected.push_back(t);
    sum += t.value;
    if (sum >= target) break;
  }
  out.change = sum - target;
  out.draws = out.selected.size();
  return out;
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::boltzmann: return "bd";
    case Strategy::random: return "rd";
    case Strategy::greedy: return "greedy";
    case Strategy::boltzmann_binned: return "bd-binned";
    case Strategy::highest_value_first: return "hvf";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "bd" || name == "boltzmann") return Strategy::boltzmann;
  if (name == "rd" || name == "random") return Strategy::random;
  if (name == "greedy") return Strategy::greedy;
  if (name == "bd-binned" || name == "boltzmann-binned") return Strategy::boltzmann_binned;
  if (name == "hvf") return Strategy::highest_value_first;
  return std::nullopt;
}

bool is_probabilistic(Strategy s) {
  return s == Strategy::boltzmann || s == Strategy::random || s == Strategy::boltzmann_binned;
}

SelectionOutcome select(Strategy strategy, std::span<const Token> pool, Amount target, Rng& rng,
                        BinScheme scheme) {
  switch (strategy) {
    case Strategy::boltzmann: return select_boltzmann(pool, target, rng);
    case Strategy::random: return select_random(pool, target, rng);
    case Strategy::greedy: return select_greedy(pool, target);
    case Strategy::boltzmann_binned: return select_boltzmann_binned(pool, target, rng, scheme);
    case Strategy::highest_value_first: return select_highest_value_first(pool, target);
  }
  throw std::invalid_argument("unknown strategy");
}

}  // namespace coinforge
