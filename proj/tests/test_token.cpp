// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include <random>

#include "coinforge/token.hpp"

using namespace coinforge;

TEST_SUITE("token") {

TEST_CASE("pool caches count and total") {
  TokenPool pool(std::vector<Token>{{1, 10}, {2, 0}, {3, 25}});
  CHECK(pool.count() == 3);
  CHECK(pool.total() == 35);
  CHECK(pool.contains(2));

  const Token gone = pool.remove(1);
  CHECK(gone == Token{1, 10});
  CHECK(pool.count() == 2);
  CHECK(pool.total() == 25);
  CHECK_FALSE(pool.contains(1));
}

TEST_CASE("pool rejects bad tokens") {
  TokenPool pool;
  pool.add({7, 5});
  CHECK_THROWS_AS(pool.add({7, 1}), std::invalid_argument);
  CHECK_THROWS_AS(pool.add({8, -1}), std::invalid_argument);
  CHECK_THROWS_AS(pool.remove(99), std::out_of_range);
  CHECK(pool.count() == 1);
}

TEST_CASE("pool total holds values past 10^15 and detects overflow") {
  TokenPool pool;
  pool.add({1, 4'000'000'000'000'000});
  pool.add({2, 4'000'000'000'000'000});
  CHECK(pool.total() == 8'000'000'000'000'000);
  CHECK_THROWS_AS(pool.add({3, std::numeric_limits<Amount>::max()}), std::overflow_error);
  CHECK(pool.count() == 2);
}

TEST_CASE("random add/remove keeps the cached aggregates exact") {
  std::mt19937_64 rng(3);
  TokenPool pool;
  std::vector<TokenId> live;
  Amount expected = 0;
  TokenId next = 0;
  for (int step = 0; step < 5000; ++step) {
    if (live.empty() || rng() % 3 != 0) {
      const Amount v = static_cast<Amount>(rng() % 100000);
      pool.add({next, v});
      live.push_back(next++);
      expected += v;
    } else {
      const std::size_t k = rng() % live.size();
      expected -= pool.remove(live[k]).value;
      live[k] = live.back();
      live.pop_back();
    }
    REQUIRE(pool.count() == live.size());
    REQUIRE(pool.total() == expected);
  }
  CHECK(total_value(pool.tokens()) == expected);
}

}
