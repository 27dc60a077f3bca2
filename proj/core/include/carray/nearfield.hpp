// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "carray/elements.hpp"
#include "carray/geometry.hpp"
#include "carray/modes.hpp"

namespace carray {

/// Complex scalar field sampled on the plane z = z_height, x-major.
struct FieldGrid {
  double z_height = 0.0;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<Complex> values;
  Frequency frequency{1.0};

  const Complex& at(std::size_t i, std::size_t j) const { return values[i * y.size() + j]; }
  double max_magnitude() const;
};

/// Real-valued grid, same layout as FieldGrid.
struct RealGrid {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const { return values[i * y.size() + j]; }
};

/// Point-source field
///   E(p) = sum_n w_n g_n(u_np) exp(-i k |p - r_n|) / (k |p - r_n|)
/// with u_np the unit vector from element n to p. Throws FieldSingularity
/// when p is closer than lambda/100 to an element.
Complex efield_at(const ArrayGeometry& geometry, const ElementPatternModel& model,
                  const ExcitationVector& excitation, const Vec3& point);

/// Square plane grid centred on the array axis, samples_per_axis points
/// spanning [-half_extent, half_extent] on each axis.
FieldGrid efield_on_plane(const ArrayGeometry& geometry, const ElementPatternModel& model,
                          const ExcitationVector& excitation, double z_height,
                          double half_extent, int samples_per_axis);

/// Bilinear interpolation; (x, y) must lie inside the grid.
Complex interpolate(const FieldGrid& grid, double x, double y);
double interpolate(const RealGrid& grid, double x, double y);

inline constexpr int kDefaultWindingSamples = 512;

/// Net number of 2*pi phase cycles along the circle of the given radius
/// about the axis, counter-clockwise seen from +z positive.
///
/// Throws RangeError when the circle leaves the grid and LowMagnitude when
/// |E| on the path drops below 1e-8 of the grid maximum.
int winding_number(const FieldGrid& grid, double circle_radius,
                   int n_samples = kDefaultWindingSamples);

/// Frame t is Re{E * exp(+2*pi*i*t/n_frames)}, t = 0..n_frames-1.
std::vector<RealGrid> time_snapshots(const FieldGrid& grid, int n_frames);

/// Rotation (degrees, counter-clockwise positive) that best maps frame `a`
/// onto frame `b`, from the circular cross-correlation of both frames
/// resampled on a circle of the given radius. Sub-sample accuracy by a
/// parabola through the correlation peak.
double estimate_rotation_deg(const RealGrid& a, const RealGrid& b, double radius,
                             int n_angles = 360);

}  // namespace carray
