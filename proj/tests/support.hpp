// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "carray/modes.hpp"

namespace carray::test {

inline std::vector<Complex> random_weights(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> w(n);
  for (auto& v : w) v = {gauss(rng), gauss(rng)};
  return w;
}

inline ExcitationVector random_excitation(std::mt19937_64& rng, std::size_t n) {
  return ExcitationVector(random_weights(rng, n));
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Horizon cut sampled at n uniform azimuths from 0.
inline std::vector<double> uniform_azimuths(int n) {
  std::vector<double> phi(n);
  for (int j = 0; j < n; ++j) phi[j] = 2.0 * 3.14159265358979323846 * j / n;
  return phi;
}

}  // namespace carray::test
