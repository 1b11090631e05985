// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "coinforge/wallet.hpp"

#include <algorithm>
#include <stdexcept>

namespace coinforge {

namespace {

SelectionOutcome highest_value_first_sorted(const std::set<Token, DescendingValue>& sorted,
                                            Amount total, Amount target) {
  detail::check_target(target);
  if (total < target) throw InsufficientFunds(target, total);
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

}  // namespace

SharedWallet::SharedWallet(Strategy strategy, std::span<const Token> initial, Options options)
    : strategy_(strategy), options_(options), ordered_mode_(!is_probabilistic(strategy)) {
  TokenId max_id = 0;
  for (const Token& t : initial) {
    max_id = std::max(max_id, t.id);
    if (ordered_mode_) {
      if (t.value < 0) throw std::invalid_argument("negative token value");
      ordered_.insert(t);
      ordered_total_ += t.value;
    } else {
      store_.add(t);
    }
  }
  if (ordered_mode_) {
    // The ordering key includes the value, so id uniqueness needs its own check.
    std::vector<TokenId> ids;
    for (const Token& t : ordered_) ids.push_back(t.id);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      throw std::invalid_argument("duplicate token id");
    }
  }
  next_id_ = initial.empty() ? 0 : max_id + 1;
}

TokenId SharedWallet::deposit(Amount value) {
  if (value < 0) throw std::invalid_argument("negative deposit");
  const TokenId id = next_id_.fetch_add(1, std::memory_order_relaxed);
  if (ordered_mode_) {
    std::lock_guard lock(ordered_mutex_);
    ordered_.insert({id, value});
    ordered_total_ += value;
  } else {
    std::unique_lock lock(store_mutex_);
    store_.add({id, value});
  }
  return id;
}

std::vector<Token> SharedWallet::snapshot() const {
  if (ordered_mode_) {
    std::lock_guard lock(ordered_mutex_);
    return {ordered_.begin(), ordered_.end()};
  }
  std::shared_lock lock(store_mutex_);
  const auto tokens = store_.tokens();
  return {tokens.begin(), tokens.end()};
}

Amount SharedWallet::total() const {
  if (ordered_mode_) {
    std::lock_guard lock(ordered_mutex_);
    return ordered_total_;
  }
  std::shared_lock lock(store_mutex_);
  return store_.total();
}

std::size_t SharedWallet::count() const {
  if (ordered_mode_) {
    std::lock_guard lock(ordered_mutex_);
    return ordered_.size();
  }
  std::shared_lock lock(store_mutex_);
  return store_.count();
}

SpendResult SharedWallet::spend(Amount target, Rng& rng) {
  detail::check_target(target);
  return ordered_mode_ ? spend_ordered(target) : spend_optimistic(target, rng);
}

void SharedWallet::commit_locked(const SelectionOutcome& outcome) {
  for (const Token& t : outcome.selected) {
    if (ordered_mode_) {
      ordered_.erase(t);
      ordered_total_ -= t.value;
    } else {
      store_.remove(t.id);
    }
    if (options_.log_removed) removed_.push_back(t.id);
  }
  if (outcome.change > 0) {
    const Token change{next_id_.fetch_add(1, std::memory_order_relaxed), outcome.change};
    if (ordered_mode_) {
      ordered_.insert(change);
      ordered_total_ += change.value;
    } else {
      store_.add(change);
    }
  }
}

SpendResult SharedWallet::spend_optimistic(Amount target, Rng& rng) {
  SpendResult result;
  for (std::size_t attempt = 0; attempt < options_.max_retries; ++attempt) {
    const std::vector<Token> snap = snapshot();
    // A momentarily short snapshot goes straight to the exclusive path,
    // which decides whether the funds really are missing.
    if (total_value(snap) < target) break;
    SelectionOutcome picked = select(strategy_, snap, target, rng);

    std::unique_lock lock(store_mutex_);
    const bool intact = std::all_of(picked.selected.begin(), picked.selected.end(),
                                    [&](const Token& t) { return store_.contains(t.id); });
    if (intact) {
      commit_locked(picked);
      result.outcome = std::move(picked);
      result.contended = result.conflicts > 0;
      return result;
    }
    ++result.conflicts;
  }

  std::unique_lock lock(store_mutex_);
  result.outcome = select(strategy_, store_.tokens(), target, rng);
  commit_locked(result.outcome);
  result.contended = result.conflicts > 0;
  result.used_fallback = true;
  return result;
}

SpendResult SharedWallet::spend_ordered(Amount target) {
  SpendResult result;
  std::unique_lock lock(ordered_mutex_, std::try_to_lock);
  if (!lock.owns_lock()) {
    result.contended = true;
    lock.lock();
  }
  result.outcome = strategy_ == Strategy::highest_value_first
                       ? highest_value_first_sorted(ordered_, ordered_total_, target)
                       : select_greedy_sorted(ordered_, ordered_total_, target);
  commit_locked(result.outcome);
  return result;
}

}  // namespace coinforge
