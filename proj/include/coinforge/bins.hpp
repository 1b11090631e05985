// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coinforge/token.hpp"

namespace coinforge {

/// Partition of [0, inf) into B_0 = [0, 1) and B_i = [b^(i-1), b^i) for b = 2 or 10.
///
/// Boundaries are generated on demand, so every representable value has a
/// bin with a finite supremum.
struct BinScheme {
  enum class Base { two, ten };

  Base base = Base::two;

  std::size_t index(Amount value) const;
  // Inclusive lower boundary of bin i.
  double lower(std::size_t i) const;
  // Supremum (exclusive upper boundary) of bin i.
  double upper(std::size_t i) const;
};

/// Selection probability of each bin, exp(-beta * sup B_j) when B_j holds a
/// value and 0 otherwise, normalized. Indexed 0..max filled bin.
std::vector<double> bin_probabilities(std::span<const Amount> values, double beta,
                                      BinScheme scheme);

}  // namespace coinforge
