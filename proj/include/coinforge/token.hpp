// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace coinforge {

/// Monetary value in integer minor units.
using Amount = std::int64_t;
using TokenId = std::uint64_t;

struct Token {
  TokenId id = 0;
  Amount value = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Sum of token values; throws std::overflow_error if the sum leaves Amount.
Amount total_value(std::span<const Token> tokens);

/// The wallet's unspent tokens with cached count and total.
///
/// Removal swaps the last token into the vacated slot, so iteration order is
/// a deterministic function of the add/remove history.
class TokenPool {
 public:
  TokenPool() = default;
  explicit TokenPool(std::span<const Token> tokens);

  // Throws std::invalid_argument on a negative value or a duplicate id,
  // std::overflow_error if the total would overflow.
  void add(Token token);

  // Throws std::out_of_range if the id is not held.
  Token remove(TokenId id);

  bool contains(TokenId id) const { return index_.contains(id); }

  std::span<const Token> tokens() const { return tokens_; }
  std::size_t count() const { return tokens_.size(); }
  Amount total() const { return total_; }
  bool empty() const { return tokens_.empty(); }

 private:
  std::vector<Token> tokens_;
  std::unordered_map<TokenId, std::size_t> index_;
  Amount total_ = 0;
};

}  // namespace coinforge
