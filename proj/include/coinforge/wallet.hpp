// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstddef>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <span>
#include <vector>

#include "coinforge/rng.hpp"
#include "coinforge/selection.hpp"
#include "coinforge/token.hpp"

namespace coinforge {

struct SpendResult {
  SelectionOutcome outcome;
  // Impeded at selection time: a failed try-lock probe (ordered strategies)
  // or at least one optimistic reservation conflict (probabilistic ones).
  bool contended = false;
  std::size_t conflicts = 0;
  bool used_fallback = false;
};

/// A token store that many workers deposit into and spend from at once.
///
/// Probabilistic strategies select on a snapshot taken under a shared lock
/// and then reserve their picks under a brief exclusive lock; a pick that
/// vanished in between is a conflict and the spend retries on a fresh
/// snapshot. After `max_retries` conflicts the spend selects under the
/// exclusive lock instead. Ordered strategies (greedy, hvf) keep a value-sorted
/// store behind a single mutex that every deposit and spend must hold.
class SharedWallet {
 public:
  struct Options {
    std::size_t max_retries = 3;
    // Keep every removed id, for double-spend audits.
    bool log_removed = false;
  };

  SharedWallet(Strategy strategy, std::span<const Token> initial, Options options);
  SharedWallet(Strategy strategy, std::span<const Token> initial)
      : SharedWallet(strategy, initial, Options{}) {}

  SharedWallet(const SharedWallet&) = delete;
  SharedWallet& operator=(const SharedWallet&) = delete;

  TokenId deposit(Amount value);

  // Removes the selected tokens and stores the change (if non-zero) as a new
  // token. Throws InsufficientFunds when the live store cannot cover target.
  SpendResult spend(Amount target, Rng& rng);

  std::vector<Token> snapshot() const;
  Amount total() const;
  std::size_t count() const;
  Strategy strategy() const { return strategy_; }
  // Every id the wallet has issued, initial tokens included, is below this.
  TokenId issued_ids() const { return next_id_.load(); }

  // Only meaningful once all workers have joined.
  const std::vector<TokenId>& removed_ids() const { return removed_; }

 private:
  SpendResult spend_optimistic(Amount target, Rng& rng);
  SpendResult spend_ordered(Amount target);
  void commit_locked(const SelectionOutcome& outcome);

  Strategy strategy_;
  Options options_;
  bool ordered_mode_;
  std::atomic<TokenId> next_id_{0};

  mutable std::shared_mutex store_mutex_;
  TokenPool store_;

  mutable std::mutex ordered_mutex_;
  std::set<Token, DescendingValue> ordered_;
  Amount ordered_total_ = 0;

  // Appended under whichever lock guarded the removal.
  std::vector<TokenId> removed_;
};

}  // namespace coinforge
