// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#pragma once

#include <array>
#include <numbers>
#include <span>
#include <vector>

namespace carray {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s, exact SI value
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& a);

inline double deg2rad(double deg) { return deg * (kPi / 180.0); }
inline double rad2deg(double rad) { return rad * (180.0 / kPi); }

/// Wraps an angle into [0, 2*pi).
double wrap_two_pi(double angle);

/// Smallest signed difference a - b, in (-pi, pi].
double angle_difference(double a, double b);

/// Operating frequency in hertz; always strictly positive.
class Frequency {
 public:
  explicit Frequency(double hertz);
  static Frequency from_ghz(double ghz) { return Frequency(ghz * 1e9); }

  double hertz() const noexcept { return hertz_; }
  double wavelength() const noexcept { return kSpeedOfLight / hertz_; }
  double wavenumber() const noexcept { return kTwoPi / wavelength(); }

  friend bool operator==(const Frequency&, const Frequency&) = default;

 private:
  double hertz_;
};

/// Free-space wavelength c / f in metres.
double wavelength(Frequency frequency);

/// Spherical direction: theta from +z in [0, pi], phi from +x in [0, 2*pi).
class Direction {
 public:
  Direction(double theta, double phi);
  static Direction from_degrees(double theta_deg, double phi_deg) {
    return Direction(deg2rad(theta_deg), deg2rad(phi_deg));
  }

  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }
  Vec3 unit_vector() const;

 private:
  double theta_;
  double phi_;
};

/// Uniform circular array lying in the xy-plane, elements boresighted
/// radially outward. Immutable after construction.
class ArrayGeometry {
 public:
  int n_elements() const noexcept { return static_cast<int>(angles_.size()); }
  double radius() const noexcept { return radius_; }
  const Frequency& frequency() const noexcept { return frequency_; }
  double wavelength() const noexcept { return frequency_.wavelength(); }
  double wavenumber() const noexcept { return frequency_.wavenumber(); }
  double ka() const noexcept { return wavenumber() * radius_; }

  std::span<const double> element_angles() const noexcept { return angles_; }
  std::span<const Vec3> element_positions() const noexcept { return positions_; }
  std::span<const Vec3> element_boresights() const noexcept { return boresights_; }

  friend bool operator==(const ArrayGeometry&, const ArrayGeometry&) = default;

 private:
  friend ArrayGeometry build_uniform_circular_array(int, double, Frequency);
  ArrayGeometry(double radius, Frequency frequency)
      : radius_(radius), frequency_(frequency) {}

  double radius_;
  Frequency frequency_;
  std::vector<double> angles_;
  std::vector<Vec3> positions_;
  std::vector<Vec3> boresights_;
};

/// Builds an N-element ring of the given diameter (millimetres). Element n
/// sits at angle 2*pi*n/N. Throws InvalidArgument for non-positive inputs.
ArrayGeometry build_uniform_circular_array(int n_elements, double diameter_mm,
                                           Frequency frequency);

inline constexpr int kDefaultElements = 12;
inline constexpr double kDefaultDiameterMm = 19.38;
inline constexpr double kDefaultFrequencyGhz = 28.0;

/// 12 elements, 19.38 mm diameter, 28 GHz.
ArrayGeometry default_geometry();

}  // namespace carray
