// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#include "carray/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "carray/error.hpp"

namespace carray {

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

double wrap_two_pi(double angle) {
  double w = std::fmod(angle, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod of a tiny negative number can round up to exactly 2*pi
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double angle_difference(double a, double b) {
  double d = std::remainder(a - b, kTwoPi);
  if (d <= -kPi) d += kTwoPi;
  return d;
}

Frequency::Frequency(double hertz) : hertz_(hertz) {
  if (!(hertz > 0.0) || !std::isfinite(hertz)) {
    throw InvalidArgument("frequency must be a positive finite number of hertz, got " +
                          std::to_string(hertz));
  }
}

double wavelength(Frequency frequency) { return frequency.wavelength(); }

Direction::Direction(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi)) {
    throw InvalidArgument("direction angles must be finite");
  }
  constexpr double slack = 1e-12;
  if (theta < -slack || theta > kPi + slack) {
    throw InvalidArgument("theta must lie in [0, pi], got " + std::to_string(theta));
  }
  theta_ = std::clamp(theta, 0.0, kPi);
  phi_ = wrap_two_pi(phi);
}

Vec3 Direction::unit_vector() const {
  const double st = std::sin(theta_);
  return {st * std::cos(phi_), st * std::sin(phi_), std::cos(theta_)};
}

ArrayGeometry build_uniform_circular_array(int n_elements, double diameter_mm,
                                           Frequency frequency) {
  if (n_elements < 1) {
    throw InvalidArgument("n_elements must be >= 1, got " + std::to_string(n_elements));
  }
  if (!(diameter_mm > 0.0) || !std::isfinite(diameter_mm)) {
    throw InvalidArgument("diameter must be positive, got " + std::to_string(diameter_mm));
  }
  ArrayGeometry g(0.5 * diameter_mm * 1e-3, frequency);
  g.angles_.reserve(n_elements);
  g.positions_.reserve(n_elements);
  g.boresights_.reserve(n_elements);
  for (int n = 0; n < n_elements; ++n) {
    const double phi = kTwoPi * n / n_elements;
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    g.angles_.push_back(phi);
    g.positions_.push_back({g.radius_ * c, g.radius_ * s, 0.0});
    g.boresights_.push_back({c, s, 0.0});
  }
  return g;
}

ArrayGeometry default_geometry() {
  return build_uniform_circular_array(kDefaultElements, kDefaultDiameterMm,
                                      Frequency::from_ghz(kDefaultFrequencyGhz));
}

}  // namespace carray
