// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "coinforge/weights.hpp"
#include "oracle/draw_tree.hpp"

using namespace coinforge;

TEST_SUITE("weights") {

TEST_CASE("compute_beta is m over E") {
  CHECK(compute_beta(std::vector<Token>{{0, 1}, {1, 10}}) == doctest::Approx(2.0 / 11.0));
  CHECK(compute_beta(4, 4000) == doctest::Approx(0.001));
  CHECK(compute_beta(std::vector<Token>{{0, 0}, {1, 0}, {2, 0}}) == 0.0);
  CHECK_THROWS_AS(compute_beta(std::vector<Token>{}), std::invalid_argument);
}

TEST_CASE("two-token worked example") {
  const std::vector<Amount> values{1, 10};
  auto p = normalize(boltzmann_weights(values, 0.1));
  CHECK(std::abs(p[0] - 0.7109) <= 5e-4);
  CHECK(std::abs(p[1] - 0.2891) <= 5e-4);

  p = normalize(boltzmann_weights(values, 1.0));
  CHECK(std::abs(p[0] - 0.9999) <= 5e-4);
  CHECK(std::abs(p[1] - 1e-4) <= 5e-4);
  CHECK(p[1] > 0.0);
}

TEST_CASE("equal values give a uniform distribution") {
  for (double beta : {0.0, 0.3, 7.0}) {
    const auto p = normalize(boltzmann_weights(std::vector<Amount>{5, 5, 5}, beta));
    for (double x : p) CHECK(x == doctest::Approx(1.0 / 3.0));
  }
}

TEST_CASE("shifted weights match the unshifted high-precision oracle") {
  const std::vector<Amount> values{2, 3, 7};
  const auto exact = oracle::boltzmann_probabilities(values, 0.5L);
  const auto p = normalize(boltzmann_weights(values, 0.5));
  for (std::size_t i = 0; i < values.size(); ++i) {
    CHECK(std::abs(p[i] - static_cast<double>(exact[i])) < 1e-14);
  }
}

TEST_CASE("minimum value always weighs exactly one") {
  const std::vector<Amount> values{1'000'000, 5'000'000, 1'000'000'000};
  const auto w = boltzmann_weights(values, 1.0);
  CHECK(w[0] == 1.0);
  CHECK(w[1] == 0.0);  // underflows; unselectable this round
}

TEST_CASE("normalization, offset invariance and monotonicity hold on random pools") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2 + rng() % 40;
    std::vector<Amount> values(n);
    for (Amount& v : values) v = static_cast<Amount>(rng() % 5000);
    const Amount sum = std::accumulate(values.begin(), values.end(), Amount{0});
    const double beta = sum == 0 ? 0.0 : static_cast<double>(n) / static_cast<double>(sum);

    const auto p = normalize(boltzmann_weights(values, beta));
    REQUIRE(std::abs(std::accumulate(p.begin(), p.end(), 0.0) - 1.0) < 1e-12);

    const Amount offset = static_cast<Amount>(rng() % 1000);
    std::vector<Amount> shifted(values);
    for (Amount& v : shifted) v += offset;
    const auto q = normalize(boltzmann_weights(shifted, beta));
    for (std::size_t i = 0; i < n; ++i) REQUIRE(std::abs(p[i] - q[i]) < 1e-12);

    if (beta > 0.0) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (values[a] < values[b]) REQUIRE(p[a] > p[b]);
        }
      }
    }
  }
}

TEST_CASE("parallel kernel is bit-identical to the serial reference") {
  std::mt19937_64 rng(5);
  std::vector<Amount> values(kParallelWeightThreshold * 3 + 17);
  for (Amount& v : values) v = 100 + static_cast<Amount>(rng() % 100000);
  std::vector<double> a(values.size()), b(values.size());
  serial::boltzmann_weights(values, 2.5e-4, a);
  boltzmann_weights(values, 2.5e-4, b);
  CHECK(a == b);
  CHECK(*std::max_element(b.begin(), b.end()) == 1.0);
}

TEST_CASE("weighted_draw degenerate and invalid weights") {
  Rng rng(1);
  const std::vector<double> one_hot{1.0, 0.0, 0.0};
  for (int i = 0; i < 1000; ++i) REQUIRE(weighted_draw(one_hot, rng) == 0);
  const std::vector<double> tail{0.0, 0.0, 2.0};
  for (int i = 0; i < 1000; ++i) REQUIRE(weighted_draw(tail, rng) == 2);

  CHECK_THROWS_AS(weighted_draw(std::vector<double>{0.0, 0.0}, rng), std::invalid_argument);
  CHECK_THROWS_AS(weighted_draw(std::vector<double>{}, rng), std::invalid_argument);
  CHECK_THROWS_AS(weighted_draw(std::vector<double>{1.0, -1.0}, rng), std::invalid_argument);
  CHECK_THROWS_AS(weighted_draw(std::vector<double>{1.0, NAN}, rng), std::invalid_argument);
}

TEST_CASE("weighted_draw frequencies converge") {
  Rng rng(2024);
  constexpr int kDraws = 1'000'000;
  int hits = 0;
  for (int i = 0; i < kDraws; ++i) hits += weighted_draw(std::vector<double>{1.0, 1.0}, rng) == 0;
  CHECK(std::abs(hits / double(kDraws) - 0.5) <= 0.005);

  hits = 0;
  for (int i = 0; i < kDraws; ++i) hits += weighted_draw(std::vector<double>{3.0, 1.0}, rng) == 0;
  CHECK(std::abs(hits / double(kDraws) - 0.75) <= 0.005);
}

TEST_CASE("weight functions stay finite and non-negative") {
  const std::vector<Amount> values{0, 1, 2, 1000, 10'000'000};
  std::vector<double> w(values.size());
  for (const WeightFunction& f : {WeightFunction::boltzmann(), WeightFunction::boltzmann_fixed(0.0),
                                  WeightFunction::uniform(), WeightFunction::reciprocal()}) {
    f.fill(values, values.size(), 10'001'003, w);
    for (double x : w) CHECK((std::isfinite(x) && x >= 0.0));
  }
  WeightFunction::reciprocal().fill(values, values.size(), 0, w);
  CHECK(w[0] == 1.0);
  CHECK(w[3] == doctest::Approx(1e-3));
  WeightFunction::boltzmann_fixed(0.0).fill(values, values.size(), 0, w);
  for (double x : w) CHECK(x == 1.0);
}

}
