// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#pragma once

#include <span>
#include <vector>

namespace carray {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1], nodes ascending.
QuadratureRule gauss_legendre(int n);

/// Sampling of the unit sphere with solid-angle quadrature weights.
///
/// theta_weights integrate f(theta) * sin(theta) over [0, pi] and
/// phi_weights integrate over one full turn, so the sum of
/// theta_weights[i] * phi_weights[j] over the grid is 4*pi.
struct SphereGrid {
  std::vector<double> theta;
  std::vector<double> theta_weights;
  std::vector<double> phi;
  std::vector<double> phi_weights;

  /// Gauss-Legendre in cos(theta) (theta ascending) times uniform midpoint
  /// rule in phi: phi_j = (j + 1/2) * 2*pi / n_phi.
  static SphereGrid gauss_legendre(int n_theta, int n_phi);

  /// Arbitrary strictly increasing samples. Each sample owns the cell
  /// between the midpoints to its neighbours; theta cells are clipped to
  /// [0, pi] and integrated exactly against sin(theta), phi cells wrap.
  /// Throws InvalidArgument on empty, non-monotone or out-of-domain grids.
  static SphereGrid from_samples(std::span<const double> theta, std::span<const double> phi);
};

inline constexpr int kDefaultThetaSamples = 181;
inline constexpr int kDefaultPhiSamples = 360;

}  // namespace carray
