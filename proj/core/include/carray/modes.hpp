// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "carray/geometry.hpp"

namespace carray {

using Complex = std::complex<double>;

/// Per-element complex feed weights, element-domain representation.
class ExcitationVector {
 public:
  ExcitationVector() = default;
  /// Throws InvalidArgument if any weight is not finite.
  explicit ExcitationVector(std::vector<Complex> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  const Complex& operator[](std::size_t n) const { return weights_[n]; }
  std::span<const Complex> weights() const noexcept { return weights_; }

  friend bool operator==(const ExcitationVector&, const ExcitationVector&) = default;

 private:
  std::vector<Complex> weights_;
};

/// Complex mode coefficients keyed by mode index m (or OAM order l).
/// Missing indices are zero.
class ModeSpectrum {
 public:
  using Map = std::map<int, Complex>;

  ModeSpectrum() = default;
  explicit ModeSpectrum(Map coefficients) : coefficients_(std::move(coefficients)) {}

  Complex operator[](int m) const;
  void set(int m, Complex c) { coefficients_[m] = c; }
  const Map& coefficients() const noexcept { return coefficients_; }
  bool empty() const noexcept { return coefficients_.empty(); }

  ModeSpectrum& operator+=(const ModeSpectrum& other);
  ModeSpectrum& operator*=(Complex s);
  friend ModeSpectrum operator+(ModeSpectrum a, const ModeSpectrum& b) { return a += b; }
  friend ModeSpectrum operator*(Complex s, ModeSpectrum a) { return a *= s; }

  friend bool operator==(const ModeSpectrum&, const ModeSpectrum&) = default;

 private:
  Map coefficients_;
};

/// True when -N/2 < m <= N/2.
bool mode_in_range(int m, int n_elements);
/// Human-readable admissible range, e.g. "(-6, 6]".
std::string mode_range_string(int n_elements);
/// Admissible indices in ascending order.
std::vector<int> mode_indices(int n_elements);

/// exp(2*pi*i*j/N), exact (+-1, +-i) on quarter turns.
Complex root_of_unity(long long j, int n);

/// w_n = exp(i*m*phi_n) / N. Any integer m is accepted; m and m+N alias.
ExcitationVector phase_mode_excitation(int m, const ArrayGeometry& geometry);

/// Same weights as phase_mode_excitation(l); named for the vortex use case.
ExcitationVector oam_excitation(int l, const ArrayGeometry& geometry);

/// Linear combination of phase modes. Throws ModeOutOfRange for any index
/// outside (-N/2, N/2].
ExcitationVector mix_modes(const ModeSpectrum& spectrum, const ArrayGeometry& geometry);

/// c_m = sum_n w_n exp(-i*m*phi_n) for every m in (-N/2, N/2]; inverse of
/// mix_modes.
ModeSpectrum mode_decompose(const ExcitationVector& excitation, const ArrayGeometry& geometry);

/// c_m -> c_m * exp(-i*m*phi0). Rotates the azimuth pattern by +phi0 when
/// phi0 is a multiple of the element spacing.
ModeSpectrum steer(const ModeSpectrum& spectrum, double phi0);

/// Cyclic shift: w'_n = w_{n - shift}.
ExcitationVector rotate_elements(const ExcitationVector& excitation, int shift);

}  // namespace carray
