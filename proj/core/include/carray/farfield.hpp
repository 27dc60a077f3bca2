// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "carray/elements.hpp"
#include "carray/geometry.hpp"
#include "carray/modes.hpp"
#include "carray/quadrature.hpp"

namespace carray {

/// F(u) = sum_n w_n * g_n(u) * exp(+i k r_n . u)
///
/// Time convention exp(+i w t); the far-zone propagator exp(-i k R) with
/// R ~ r0 - r_n . u leaves the +i k r_n . u phase per element.
/// Throws InvalidArgument if the excitation length does not match.
Complex total_field(const ArrayGeometry& geometry, const ElementPatternModel& model,
                    const ExcitationVector& excitation, const Direction& direction);

/// Everything needed to re-evaluate a sampled pattern off-grid.
struct FieldSource {
  ArrayGeometry geometry;
  ElementPatternModel model;
  ExcitationVector excitation;

  Complex operator()(const Direction& direction) const {
    return total_field(geometry, model, excitation, direction);
  }
};

/// Complex far-field samples on a (theta, phi) grid, theta-major.
class RadiationPattern {
 public:
  RadiationPattern(SphereGrid grid, std::vector<Complex> values,
                   std::optional<FieldSource> source = std::nullopt);

  const SphereGrid& grid() const noexcept { return grid_; }
  std::span<const double> theta() const noexcept { return grid_.theta; }
  std::span<const double> phi() const noexcept { return grid_.phi; }
  std::size_t n_theta() const noexcept { return grid_.theta.size(); }
  std::size_t n_phi() const noexcept { return grid_.phi.size(); }

  const Complex& at(std::size_t i, std::size_t j) const { return values_[i * n_phi() + j]; }
  std::span<const Complex> values() const noexcept { return values_; }

  /// Present when the pattern was produced by sample_pattern.
  const std::optional<FieldSource>& source() const noexcept { return source_; }

 private:
  SphereGrid grid_;
  std::vector<Complex> values_;
  std::optional<FieldSource> source_;
};

RadiationPattern sample_pattern(const ArrayGeometry& geometry, const ElementPatternModel& model,
                                const ExcitationVector& excitation, const SphereGrid& grid);

/// Samples on arbitrary strictly increasing grids (radians).
RadiationPattern sample_pattern(const ArrayGeometry& geometry, const ElementPatternModel& model,
                                const ExcitationVector& excitation,
                                std::span<const double> theta_grid,
                                std::span<const double> phi_grid);

/// Default 181 x 360 Gauss-Legendre / midpoint grid.
RadiationPattern sample_default_pattern(const ArrayGeometry& geometry,
                                        const ElementPatternModel& model,
                                        const ExcitationVector& excitation);

struct DirectivityReport {
  double peak_dbi;
  Direction peak_direction;
  double total_radiated;  // integral of |F|^2 over the sphere, steradian weighted
};

inline constexpr std::size_t kMinDirectivityTheta = 91;
inline constexpr std::size_t kMinDirectivityPhi = 180;

/// Integral of |F|^2 dOmega with the pattern's quadrature weights.
double total_radiated_power(const RadiationPattern& pattern);

/// Peak directivity. The grid maximum is refined with a quadratic fit over
/// its 3 x 3 neighbourhood; when the pattern carries a FieldSource the
/// refined direction is re-evaluated exactly.
///
/// Throws InvalidArgument when the grid is coarser than 91 x 180 and
/// DegeneratePattern when the pattern radiates no power.
DirectivityReport directivity(const RadiationPattern& pattern);

/// Directivity toward a fixed direction. Without a FieldSource the direction
/// must coincide with a grid node.
DirectivityReport directivity(const RadiationPattern& pattern, const Direction& direction);

struct BeamPeak {
  Direction direction;
  double level_dbi;
  double prominence_db;
};

/// Beams on the theta = 90 deg cut, strongest first.
///
/// A beam is a local maximum (circular in phi) whose topographic prominence
/// is at least min_prominence_db and whose level is within
/// max_below_strongest_db of the strongest sample on the cut. Peak azimuths
/// are refined by a three-point parabola. Requires a theta = 90 deg row.
std::vector<BeamPeak> find_beam_peaks(const RadiationPattern& pattern, double min_prominence_db,
                                      double max_below_strongest_db = 6.0);

/// Continuous-ring phase-mode far field on the horizon: i^m J_m(ka) e^{i m phi}.
/// Validated for |m| <= 16 and 0 < ka <= 20; throws RangeError outside.
Complex bessel_mode_reference(int m, double ka, double phi);

}  // namespace carray
