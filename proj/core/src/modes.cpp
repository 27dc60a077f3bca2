// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#include "carray/modes.hpp"

#include <cmath>
#include <string>

#include "carray/error.hpp"

namespace carray {
namespace {

long long positive_mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

void require_length(const ExcitationVector& excitation, const ArrayGeometry& geometry) {
  if (excitation.size() != static_cast<std::size_t>(geometry.n_elements())) {
    throw InvalidArgument("excitation has " + std::to_string(excitation.size()) +
                          " weights but the array has " +
                          std::to_string(geometry.n_elements()) + " elements");
  }
}

}  // namespace

ExcitationVector::ExcitationVector(std::vector<Complex> weights) : weights_(std::move(weights)) {
  for (const auto& w : weights_) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
      throw InvalidArgument("excitation weights must be finite");
    }
  }
}

Complex ModeSpectrum::operator[](int m) const {
  auto it = coefficients_.find(m);
  return it == coefficients_.end() ? Complex{} : it->second;
}

ModeSpectrum& ModeSpectrum::operator+=(const ModeSpectrum& other) {
  for (const auto& [m, c] : other.coefficients_) coefficients_[m] += c;
  return *this;
}

ModeSpectrum& ModeSpectrum::operator*=(Complex s) {
  for (auto& [m, c] : coefficients_) c *= s;
  return *this;
}

bool mode_in_range(int m, int n_elements) {
  // -N/2 < m <= N/2, kept in integers: -N < 2m <= N
  return -n_elements < 2 * m && 2 * m <= n_elements;
}

std::string mode_range_string(int n_elements) {
  auto half = [&](int sign) {
    if (n_elements % 2 == 0) return std::to_string(sign * n_elements / 2);
    std::string s = std::to_string(n_elements / 2) + ".5";
    return sign < 0 ? "-" + s : s;
  };
  return "(" + half(-1) + ", " + half(+1) + "]";
}

std::vector<int> mode_indices(int n_elements) {
  std::vector<int> out;
  for (int m = -n_elements / 2; m <= n_elements / 2; ++m) {
    if (mode_in_range(m, n_elements)) out.push_back(m);
  }
  return out;
}

Complex root_of_unity(long long j, int n) {
  const long long r = positive_mod(j, n);
  if ((4 * r) % n == 0) {
    switch ((4 * r) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = kTwoPi * static_cast<double>(r) / n;
  return {std::cos(angle), std::sin(angle)};
}

ExcitationVector phase_mode_excitation(int m, const ArrayGeometry& geometry) {
  const int n_el = geometry.n_elements();
  std::vector<Complex> w(n_el);
  for (int n = 0; n < n_el; ++n) {
    w[n] = root_of_unity(static_cast<long long>(m) * n, n_el) / static_cast<double>(n_el);
  }
  return ExcitationVector(std::move(w));
}

ExcitationVector oam_excitation(int l, const ArrayGeometry& geometry) {
  return phase_mode_excitation(l, geometry);
}

ExcitationVector mix_modes(const ModeSpectrum& spectrum, const ArrayGeometry& geometry) {
  const int n_el = geometry.n_elements();
  std::vector<Complex> w(n_el);
  for (const auto& [m, c] : spectrum.coefficients()) {
    if (!mode_in_range(m, n_el)) {
      throw ModeOutOfRange(m, "mode " + std::to_string(m) + " is outside " +
                                  mode_range_string(n_el) + " for a " +
                                  std::to_string(n_el) + "-element array");
    }
    for (int n = 0; n < n_el; ++n) {
      w[n] += c * root_of_unity(static_cast<long long>(m) * n, n_el);
    }
  }
  for (auto& x : w) x /= static_cast<double>(n_el);
  return ExcitationVector(std::move(w));
}

ModeSpectrum mode_decompose(const ExcitationVector& excitation, const ArrayGeometry& geometry) {
  require_length(excitation, geometry);
  const int n_el = geometry.n_elements();
  ModeSpectrum::Map out;
  for (int m : mode_indices(n_el)) {
    Complex acc{};
    for (int n = 0; n < n_el; ++n) {
      acc += excitation[n] * root_of_unity(-static_cast<long long>(m) * n, n_el);
    }
    out.emplace(m, acc);
  }
  return ModeSpectrum(std::move(out));
}

ModeSpectrum steer(const ModeSpectrum& spectrum, double phi0) {
  ModeSpectrum::Map out;
  for (const auto& [m, c] : spectrum.coefficients()) {
    out.emplace(m, c * std::polar(1.0, -m * phi0));
  }
  return ModeSpectrum(std::move(out));
}

ExcitationVector rotate_elements(const ExcitationVector& excitation, int shift) {
  const long long n_el = static_cast<long long>(excitation.size());
  std::vector<Complex> w(excitation.size());
  for (long long n = 0; n < n_el; ++n) {
    w[positive_mod(n + shift, n_el)] = excitation[n];
  }
  return ExcitationVector(std::move(w));
}

}  // namespace carray
