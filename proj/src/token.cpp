// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "coinforge/token.hpp"

#include <stdexcept>
#include <string>

namespace coinforge {

namespace {

Amount checked_add(Amount a, Amount b) {
  Amount sum = 0;
  if (__builtin_add_overflow(a, b, &sum)) throw std::overflow_error("token value sum overflows");
  return sum;
}

}  // namespace

Amount total_value(std::span<const Token> tokens) {
  Amount sum = 0;
  for (const Token& t : tokens) sum = checked_add(sum, t.value);
  return sum;
}

TokenPool::TokenPool(std::span<const Token> tokens) {
  tokens_.reserve(tokens.size());
  index_.reserve(tokens.size());
  for (const Token& t : tokens) add(t);
}

void TokenPool::add(Token token) {
  if (token.value < 0) {
    throw std::invalid_argument("token " + std::to_string(token.id) + " has negative value");
  }
  if (index_.contains(token.id)) {
    throw std::invalid_argument("duplicate token id " + std::to_string(token.id));
  }
  total_ = checked_add(total_, token.value);
  index_.emplace(token.id, tokens_.size());
  tokens_.push_back(token);
}

Token TokenPool::remove(TokenId id) {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("token " + std::to_string(id) + " not in pool");
  const std::size_t slot = it->second;
  const Token removed = tokens_[slot];
  index_.erase(it);
  if (slot + 1 != tokens_.size()) {
    tokens_[slot] = tokens_.back();
    index_[tokens_[slot].id] = slot;
  }
  tokens_.pop_back();
  total_ -= removed.value;
  return removed;
}

}  // namespace coinforge
