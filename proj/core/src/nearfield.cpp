// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#include "carray/nearfield.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "carray/error.hpp"
#include "carray/parallel.hpp"

namespace carray {
namespace {

void require_length(const ExcitationVector& excitation, const ArrayGeometry& geometry) {
  if (excitation.size() != static_cast<std::size_t>(geometry.n_elements())) {
    throw InvalidArgument("excitation has " + std::to_string(excitation.size()) +
                          " weights but the array has " +
                          std::to_string(geometry.n_elements()) + " elements");
  }
}

Complex field_unchecked(const ArrayGeometry& geometry, const ElementPatternModel& model,
                        const ExcitationVector& excitation, const Vec3& point) {
  const double k = geometry.wavenumber();
  const double min_distance = geometry.wavelength() / 100.0;
  const auto positions = geometry.element_positions();
  const auto boresights = geometry.element_boresights();
  Complex e{};
  for (int n = 0; n < geometry.n_elements(); ++n) {
    const Vec3 d = point - positions[n];
    const double r = norm(d);
    if (r < min_distance) {
      throw FieldSingularity("observation point lies within lambda/100 of element " +
                             std::to_string(n));
    }
    const double g = detail::element_gain_unchecked(model, boresights[n], (1.0 / r) * d);
    if (g == 0.0) continue;
    const double kr = k * r;
    e += excitation[n] * g * std::polar(1.0 / kr, -kr);
  }
  return e;
}

// Locates x in the ascending samples; returns the cell index and the
// fractional position within it.
std::pair<std::size_t, double> locate(std::span<const double> s, double x) {
  const auto upper = std::upper_bound(s.begin(), s.end(), x);
  std::size_t i = static_cast<std::size_t>(std::distance(s.begin(), upper));
  i = std::clamp<std::size_t>(i, 1, s.size() - 1) - 1;
  return {i, (x - s[i]) / (s[i + 1] - s[i])};
}

template <typename T>
T bilinear(std::span<const double> xs, std::span<const double> ys, std::span<const T> v,
           double x, double y) {
  if (xs.size() < 2 || ys.size() < 2) throw InvalidArgument("grid needs at least 2 x 2 samples");
  constexpr double slack = 1e-12;
  if (x < xs.front() - slack || x > xs.back() + slack || y < ys.front() - slack ||
      y > ys.back() + slack) {
    throw RangeError("interpolation point lies outside the grid");
  }
  const auto [i, tx] = locate(xs, x);
  const auto [j, ty] = locate(ys, y);
  const std::size_t ny = ys.size();
  auto at = [&](std::size_t a, std::size_t b) { return v[a * ny + b]; };
  return (1.0 - tx) * ((1.0 - ty) * at(i, j) + ty * at(i, j + 1)) +
         tx * ((1.0 - ty) * at(i + 1, j) + ty * at(i + 1, j + 1));
}

std::vector<double> resample_circle(const RealGrid& g, double radius, int n) {
  std::vector<double> out(n);
  for (int t = 0; t < n; ++t) {
    const double a = kTwoPi * t / n;
    out[t] = interpolate(g, radius * std::cos(a), radius * std::sin(a));
  }
  return out;
}

}  // namespace

double FieldGrid::max_magnitude() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

Complex efield_at(const ArrayGeometry& geometry, const ElementPatternModel& model,
                  const ExcitationVector& excitation, const Vec3& point) {
  require_length(excitation, geometry);
  return field_unchecked(geometry, model, excitation, point);
}

FieldGrid efield_on_plane(const ArrayGeometry& geometry, const ElementPatternModel& model,
                          const ExcitationVector& excitation, double z_height,
                          double half_extent, int samples_per_axis) {
  require_length(excitation, geometry);
  model.validate();
  if (!(z_height > 0.0) || !std::isfinite(z_height)) {
    throw InvalidArgument("z_height must be positive");
  }
  if (!(half_extent > 0.0) || !std::isfinite(half_extent)) {
    throw InvalidArgument("half_extent must be positive");
  }
  if (samples_per_axis < 2) throw InvalidArgument("samples_per_axis must be >= 2");

  FieldGrid grid;
  grid.z_height = z_height;
  grid.frequency = geometry.frequency();
  grid.x.resize(samples_per_axis);
  const double step = 2.0 * half_extent / (samples_per_axis - 1);
  for (int i = 0; i < samples_per_axis; ++i) {
    // symmetric construction keeps x[i] == -x[n-1-i] exactly
    const int mirrored = samples_per_axis - 1 - i;
    grid.x[i] = 0.5 * (i - mirrored) * step;
  }
  grid.y = grid.x;

  const std::size_t n = static_cast<std::size_t>(samples_per_axis);
  grid.values.resize(n * n);
  parallel_for(n * n, [&](std::size_t idx) {
    const Vec3 p{grid.x[idx / n], grid.y[idx % n], z_height};
    grid.values[idx] = field_unchecked(geometry, model, excitation, p);
  });
  return grid;
}

Complex interpolate(const FieldGrid& grid, double x, double y) {
  return bilinear<Complex>(grid.x, grid.y, grid.values, x, y);
}

double interpolate(const RealGrid& grid, double x, double y) {
  return bilinear<double>(grid.x, grid.y, grid.values, x, y);
}

int winding_number(const FieldGrid& grid, double circle_radius, int n_samples) {
  if (n_samples < 256) throw InvalidArgument("winding_number needs at least 256 samples");
  if (!(circle_radius > 0.0)) throw RangeError("circle radius must be positive");
  if (grid.x.size() < 2 || grid.y.size() < 2) throw InvalidArgument("grid too small");
  if (circle_radius > -grid.x.front() || circle_radius > grid.x.back() ||
      circle_radius > -grid.y.front() || circle_radius > grid.y.back()) {
    throw RangeError("circle of radius " + std::to_string(circle_radius) +
                     " m does not fit inside the grid");
  }
  const double floor = 1e-8 * grid.max_magnitude();

  double total = 0.0;
  double previous = 0.0;
  for (int t = 0; t <= n_samples; ++t) {
    const double a = kTwoPi * (t % n_samples) / n_samples;
    const Complex v = interpolate(grid, circle_radius * std::cos(a), circle_radius * std::sin(a));
    if (!(std::abs(v) > floor)) {
      throw LowMagnitude("field magnitude on the winding path falls below 1e-8 of the grid "
                         "maximum (phase singularity on the path)");
    }
    const double phase = std::arg(v);
    if (t > 0) total += std::remainder(phase - previous, kTwoPi);
    previous = phase;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

std::vector<RealGrid> time_snapshots(const FieldGrid& grid, int n_frames) {
  if (n_frames < 1) throw InvalidArgument("n_frames must be >= 1");
  std::vector<RealGrid> frames;
  frames.reserve(n_frames);
  for (int t = 0; t < n_frames; ++t) {
    const Complex rotor = root_of_unity(t, n_frames);
    RealGrid frame{grid.x, grid.y, std::vector<double>(grid.values.size())};
    for (std::size_t idx = 0; idx < grid.values.size(); ++idx) {
      frame.values[idx] = (grid.values[idx] * rotor).real();
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

double estimate_rotation_deg(const RealGrid& a, const RealGrid& b, double radius, int n_angles) {
  if (n_angles < 8) throw InvalidArgument("n_angles must be >= 8");
  const std::vector<double> ra = resample_circle(a, radius, n_angles);
  const std::vector<double> rb = resample_circle(b, radius, n_angles);

  // b(theta) ~ a(theta - shift): correlate b against a delayed by each lag
  std::vector<double> corr(n_angles);
  for (int lag = 0; lag < n_angles; ++lag) {
    double s = 0.0;
    for (int t = 0; t < n_angles; ++t) s += rb[t] * ra[(t - lag + n_angles) % n_angles];
    corr[lag] = s;
  }
  const int best =
      static_cast<int>(std::distance(corr.begin(), std::max_element(corr.begin(), corr.end())));
  const double c0 = corr[(best - 1 + n_angles) % n_angles];
  const double c1 = corr[best];
  const double c2 = corr[(best + 1) % n_angles];
  const double denom = c0 - 2.0 * c1 + c2;
  const double frac = denom < 0.0 ? 0.5 * (c0 - c2) / denom : 0.0;
  double deg = (best + frac) * 360.0 / n_angles;
  if (deg > 180.0) deg -= 360.0;
  return deg;
}

}  // namespace carray
