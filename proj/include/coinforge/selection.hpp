// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "coinforge/bins.hpp"
#include "coinforge/rng.hpp"
#include "coinforge/token.hpp"
#include "coinforge/weights.hpp"

namespace coinforge {

struct SelectionOutcome {
  std::vector<Token> selected;  // in draw order
  Amount change = 0;
  std::size_t draws = 0;

  Amount selected_total() const { return total_value(selected); }
};

/// The pool cannot cover the target at all.
class InsufficientFunds : public std::runtime_error {
 public:
  InsufficientFunds(Amount target, Amount available);

  Amount target() const { return target_; }
  Amount available() const { return available_; }
  Amount shortfall() const { return target_ - available_; }

 private:
  Amount target_;
  Amount available_;
};

// All selectors treat the pool as an immutable snapshot and never modify it.
// They throw std::invalid_argument for target <= 0 and InsufficientFunds when
// the pool total is below the target. A pool whose total equals the target
// is returned whole without any draws.

/// Draw loop shared by the probabilistic selectors: weigh the remaining
/// tokens, draw one, move it to the selection, repeat until covered.
SelectionOutcome select_weighted(std::span<const Token> pool, Amount target, Rng& rng,
                                 const WeightFunction& weight);

/// Boltzmann Draw: weights exp(-beta v) with beta = m / E over the remaining tokens.
SelectionOutcome select_boltzmann(std::span<const Token> pool, Amount target, Rng& rng);

/// Random Draw: every remaining token equally likely.
SelectionOutcome select_random(std::span<const Token> pool, Amount target, Rng& rng);

/// Boltzmann Draw over value bins: a filled bin is drawn with weight
/// exp(-beta sup B_j), then a token uniformly within it.
SelectionOutcome select_boltzmann_binned(std::span<const Token> pool, Amount target, Rng& rng,
                                         BinScheme scheme);

/// Greedy baseline. Scans tokens by descending value (ties by ascending id)
/// and takes each one that still fits under the outstanding amount; if a gap
/// remains, the smallest skipped token closes it.
SelectionOutcome select_greedy(std::span<const Token> pool, Amount target);

/// Highest value first: descending value (ties by ascending id) until covered.
SelectionOutcome select_highest_value_first(std::span<const Token> pool, Amount target);

/// Strict weak order used by the ordered selectors: value descending, id ascending.
struct DescendingValue {
  bool operator()(const Token& a, const Token& b) const {
    return a.value != b.value ? a.value > b.value : a.id < b.id;
  }
};

namespace detail {
void check_target(Amount target);
SelectionOutcome take_all(std::span<const Token> pool);
}  // namespace detail

/// Greedy over a range already sorted by DescendingValue. Lets a caller that
/// maintains an ordered store select without copying it.
template <std::ranges::forward_range Sorted>
SelectionOutcome select_greedy_sorted(const Sorted& sorted, Amount pool_total, Amount target) {
  detail::check_target(target);
  if (pool_total < target) throw InsufficientFunds(target, pool_total);

  SelectionOutcome out;
  Amount outstanding = target;
  std::optional<Token> smallest_skipped;
  for (const Token& t : sorted) {
    if (t.value <= outstanding) {
      if (t.value == 0) continue;
      out.selected.push_back(t);
      outstanding -= t.value;
      if (outstanding == 0) break;
    } else if (!smallest_skipped || t.value < smallest_skipped->value) {
      // Equal values arrive in ascending id order, so the first one wins ties.
      smallest_skipped = t;
    }
  }
  if (outstanding > 0) {
    // Every skipped token exceeded the outstanding amount when it was
    // visited, and that amount only shrinks, so any of them closes the gap.
    // Sufficient funds guarantee at least one was skipped.
    out.selected.push_back(*smallest_skipped);
    out.change = smallest_skipped->value - outstanding;
  }
  out.draws = out.selected.size();
  return out;
}

enum class Strategy { boltzmann, random, greedy, boltzmann_binned, highest_value_first };

/// Short CLI name: bd, rd, greedy, bd-binned, hvf.
std::string_view to_string(Strategy s);
/// Accepts the short names plus boltzmann, random, boltzmann-binned.
std::optional<Strategy> parse_strategy(std::string_view name);
bool is_probabilistic(Strategy s);

SelectionOutcome select(Strategy strategy, std::span<const Token> pool, Amount target,
                        Rng& rng, BinScheme scheme = {});

}  // namespace coinforge
