// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "coinforge/bins.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace coinforge {

std::size_t BinScheme::index(Amount value) const {
  if (value < 0) throw std::invalid_argument("BinScheme: negative value");
  if (value == 0) return 0;
  const auto v = static_cast<std::uint64_t>(value);
  if (base == Base::two) return static_cast<std::size_t>(std::bit_width(v));
  std::size_t digits = 0;
  for (std::uint64_t x = v; x != 0; x /= 10) ++digits;
  return digits;
}

double BinScheme::lower(std::size_t i) const {
  if (i == 0) return 0.0;
  return upper(i - 1);
}

double BinScheme::upper(std::size_t i) const {
  const double b = base == Base::two ? 2.0 : 10.0;
  return std::pow(b, static_cast<double>(i));
}

std::vector<double> bin_probabilities(std::span<const Amount> values, double beta,
                                      BinScheme scheme) {
  if (values.empty()) throw std::invalid_argument("bin_probabilities: no values");
  std::vector<char> filled;
  for (Amount v : values) {
    const std::size_t j = scheme.index(v);
    if (j >= filled.size()) filled.resize(j + 1, 0);
    filled[j] = 1;
  }
  const auto first = std::find(filled.begin(), filled.end(), 1) - filled.begin();
  const double sup_min = scheme.upper(static_cast<std::size_t>(first));
  std::vector<double> p(filled.size(), 0.0);
  double sum = 0.0;
  for (std::size_t j = 0; j < filled.size(); ++j) {
    if (filled[j]) sum += p[j] = std::exp(-beta * (scheme.upper(j) - sup_min));
  }
  for (double& x : p) x /= sum;
  return p;
}

}  // namespace coinforge
