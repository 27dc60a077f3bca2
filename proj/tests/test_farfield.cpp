// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>

#include "carray/bessel.hpp"
#include "carray/error.hpp"
#include "carray/farfield.hpp"
#include "carray/synthesis.hpp"
#include "support.hpp"

using namespace carray;

namespace {

const ArrayGeometry kGeom = default_geometry();
const ElementPatternModel kIso = ElementPatternModel::isotropic();
const ElementPatternModel kDefault = ElementPatternModel::default_model();

RadiationPattern preset_pattern(const std::string& name, const ElementPatternModel& model,
                                const SphereGrid& grid) {
  return sample_pattern(kGeom, model, mix_modes(preset(name, kGeom, model), kGeom), grid);
}

}  // namespace

TEST(TotalField, SingleIsotropicElementIsUnitEverywhere) {
  const ArrayGeometry one = build_uniform_circular_array(1, 10.0, Frequency::from_ghz(28.0));
  const ExcitationVector w({Complex{1.0, 0.0}});
  for (double th = 0.0; th <= 180.0; th += 15.0) {
    for (double ph = 0.0; ph < 360.0; ph += 25.0) {
      EXPECT_NEAR(std::abs(total_field(one, kIso, w, Direction::from_degrees(th, ph))), 1.0, 1e-15);
    }
  }
}

TEST(TotalField, RejectsLengthMismatch) {
  EXPECT_THROW(total_field(kGeom, kIso, ExcitationVector(std::vector<Complex>(3)),
                           Direction(0.0, 0.0)),
               InvalidArgument);
}

// m = 0 on the horizon is J_0(ka) + 2 J_12(ka) cos(12 phi) + ...: constant
// up to the aliased harmonics, and exactly periodic with the element spacing.
TEST(TotalField, UniformRingOnHorizonMatchesAliasedBesselSeries) {
  const auto w = phase_mode_excitation(0, kGeom);
  const double ka = kGeom.ka();
  for (int j = 0; j < 360; ++j) {
    const double phi = deg2rad(j + 0.25);
    const Complex f = total_field(kGeom, kIso, w, Direction(0.5 * kPi, phi));
    const double series = bessel_j(0, ka) + 2.0 * bessel_j(12, ka) * std::cos(12.0 * phi);
    EXPECT_NEAR(std::abs(f - series), 0.0, 2.0 * std::abs(bessel_j(24, ka)) + 1e-12) << j;
    const Complex shifted = total_field(kGeom, kIso, w, Direction(0.5 * kPi, phi + kTwoPi / 12));
    EXPECT_NEAR(std::abs(f - shifted), 0.0, 1e-14);
  }
}

TEST(SamplePattern, SingleSampleGrid) {
  const auto w = phase_mode_excitation(2, kGeom);
  const std::vector<double> th{1.1};
  const std::vector<double> ph{0.7};
  const RadiationPattern p = sample_pattern(kGeom, kDefault, w, th, ph);
  ASSERT_EQ(p.values().size(), 1u);
  EXPECT_EQ(p.at(0, 0), total_field(kGeom, kDefault, w, Direction(1.1, 0.7)));
}

TEST(SamplePattern, DefaultGridIsThetaMajor) {
  const auto w = phase_mode_excitation(1, kGeom);
  const RadiationPattern p = sample_default_pattern(kGeom, kDefault, w);
  ASSERT_EQ(p.n_theta(), 181u);
  ASSERT_EQ(p.n_phi(), 360u);
  for (std::size_t i : {0u, 45u, 90u, 180u}) {
    for (std::size_t j : {0u, 17u, 359u}) {
      EXPECT_EQ(p.at(i, j), total_field(kGeom, kDefault, w, Direction(p.theta()[i], p.phi()[j])));
    }
  }
}

// Rows of the broadcast pattern repeat every 30 deg (the ring's symmetry);
// they are constant only up to the aliased J_{+-12} ripple.
TEST(SamplePattern, BroadcastRowsHaveTwelveFoldSymmetry) {
  const RadiationPattern p = sample_default_pattern(kGeom, kDefault, phase_mode_excitation(0, kGeom));
  for (std::size_t i = 0; i < p.n_theta(); ++i) {
    double row_max = 0.0;
    for (std::size_t j = 0; j < p.n_phi(); ++j) row_max = std::max(row_max, std::abs(p.at(i, j)));
    for (std::size_t j = 0; j < p.n_phi(); ++j) {
      EXPECT_NEAR(std::abs(p.at(i, j)), std::abs(p.at(i, (j + 30) % 360)), 1e-13 * row_max + 1e-16);
    }
  }
}

TEST(Directivity, SingleIsotropicElementIsZeroDbi) {
  const ArrayGeometry one = build_uniform_circular_array(1, 10.0, Frequency::from_ghz(28.0));
  const ExcitationVector w({Complex{1.0, 0.0}});
  const RadiationPattern p = sample_default_pattern(one, kIso, w);
  EXPECT_NEAR(directivity(p).peak_dbi, 0.0, 0.01);
  EXPECT_NEAR(directivity(p, Direction::from_degrees(37.0, 211.0)).peak_dbi, 0.0, 0.01);
  EXPECT_NEAR(total_radiated_power(p), 4.0 * kPi, 1e-10);
}

TEST(Directivity, BroadcastBand) {
  const auto p = preset_pattern("broadcast", kDefault, SphereGrid::gauss_legendre(181, 360));
  const auto r = directivity(p);
  EXPECT_NEAR(r.peak_dbi, 4.0, 1.5);
}

TEST(Directivity, UnicastBandsAndAzimuth) {
  for (const char* name : {"unicast-a", "unicast-b"}) {
    const auto p = preset_pattern(name, kDefault, SphereGrid::gauss_legendre(181, 360));
    const auto r = directivity(p);
    EXPECT_NEAR(r.peak_dbi, 8.75, 1.75) << name;
    EXPECT_LT(std::abs(rad2deg(angle_difference(r.peak_direction.phi(), 0.0))), 1.0) << name;
  }
}

TEST(Directivity, ScaleInvariant) {
  std::mt19937_64 rng(5);
  const auto w = carray::test::random_excitation(rng, 12);
  const double base = directivity(sample_default_pattern(kGeom, kDefault, w)).peak_dbi;
  for (Complex s : {Complex{3.0, 0.0}, Complex{-1e-3, 2e-3}, Complex{0.0, 1e5}}) {
    std::vector<Complex> scaled(w.weights().begin(), w.weights().end());
    for (auto& v : scaled) v *= s;
    const double d = directivity(sample_default_pattern(kGeom, kDefault, ExcitationVector(scaled))).peak_dbi;
    EXPECT_NEAR(d, base, 1e-10);
  }
}

TEST(Directivity, Errors) {
  const RadiationPattern zero =
      sample_default_pattern(kGeom, kDefault, ExcitationVector(std::vector<Complex>(12)));
  EXPECT_THROW(directivity(zero), DegeneratePattern);
  const RadiationPattern coarse = sample_pattern(kGeom, kDefault, phase_mode_excitation(0, kGeom),
                                                 SphereGrid::gauss_legendre(45, 90));
  EXPECT_THROW(directivity(coarse), InvalidArgument);
}

TEST(Directivity, ConvergesUnderGridDoubling) {
  for (auto name : preset_names()) {
    const std::string n(name);
    const double coarse = directivity(preset_pattern(n, kDefault, SphereGrid::gauss_legendre(181, 360))).peak_dbi;
    const double fine = directivity(preset_pattern(n, kDefault, SphereGrid::gauss_legendre(361, 720))).peak_dbi;
    EXPECT_LT(std::abs(fine - coarse), 0.01) << n;
  }
}

TEST(BeamPeaks, UnicastHasOneBeamAtZero) {
  for (const char* name : {"unicast-a", "unicast-b"}) {
    const auto peaks = find_beam_peaks(preset_pattern(name, kDefault, SphereGrid::gauss_legendre(181, 360)), 3.0);
    ASSERT_EQ(peaks.size(), 1u) << name;
    EXPECT_LE(std::abs(rad2deg(angle_difference(peaks[0].direction.phi(), 0.0))), 1.0) << name;
    EXPECT_EQ(peaks[0].direction.theta(), 0.5 * kPi);
  }
}

TEST(BeamPeaks, MulticastHasThreeBeams) {
  const auto p = preset_pattern("multicast-120", kDefault, SphereGrid::gauss_legendre(181, 360));
  const auto peaks = find_beam_peaks(p, 3.0);
  ASSERT_EQ(peaks.size(), 3u);
  for (double target : {0.0, 120.0, 240.0}) {
    double best = 360.0;
    for (const auto& pk : peaks) {
      best = std::min(best, std::abs(rad2deg(angle_difference(pk.direction.phi(), deg2rad(target)))));
    }
    EXPECT_LE(best, 2.0) << target;
  }
  for (std::size_t k = 1; k < peaks.size(); ++k) EXPECT_GE(peaks[k - 1].level_dbi, peaks[k].level_dbi);
}

TEST(BeamPeaks, BroadcastHasNone) {
  const auto p = preset_pattern("broadcast", kDefault, SphereGrid::gauss_legendre(181, 360));
  EXPECT_TRUE(find_beam_peaks(p, 3.0).empty());
}

TEST(BeamPeaks, NeedsEquatorRowAndPositiveProminence) {
  const auto w = phase_mode_excitation(0, kGeom);
  const auto even = sample_pattern(kGeom, kDefault, w, SphereGrid::gauss_legendre(180, 360));
  EXPECT_THROW(find_beam_peaks(even, 3.0), InvalidArgument);
  const auto odd = sample_default_pattern(kGeom, kDefault, w);
  EXPECT_THROW(find_beam_peaks(odd, 0.0), InvalidArgument);
}

TEST(BesselReference, Examples) {
  const Complex small = bessel_mode_reference(0, 1e-9, 0.3);
  EXPECT_NEAR(small.real(), 1.0, 1e-15);
  EXPECT_EQ(small.imag(), 0.0);
  const Complex r = bessel_mode_reference(1, 5.686, 0.0);
  EXPECT_NEAR(r.real(), 0.0, 1e-16);
  EXPECT_NEAR(r.imag(), std::cyl_bessel_j(1.0, 5.686), 1e-13);
  EXPECT_THROW(bessel_mode_reference(17, 5.0, 0.0), RangeError);
  EXPECT_THROW(bessel_mode_reference(0, 0.0, 0.0), RangeError);
  EXPECT_THROW(bessel_mode_reference(0, 20.5, 0.0), RangeError);
}

TEST(BesselReference, IsotropicSingleModesOnHorizon) {
  const double ka = kGeom.ka();
  for (int m = -5; m <= 5; ++m) {
    const auto w = phase_mode_excitation(m, kGeom);
    for (double phi : carray::test::uniform_azimuths(360)) {
      const Complex f = total_field(kGeom, kIso, w, Direction(0.5 * kPi, phi));
      Complex aliases{};
      for (int k : {-3, -2, -1, 1, 2, 3}) {
        const int n = m + 12 * k;
        aliases += std::pow(Complex(0.0, 1.0), n) * bessel_j(n, ka) * std::exp(Complex(0.0, n * phi));
      }
      EXPECT_LT(std::abs(f - bessel_mode_reference(m, ka, phi) - aliases), 1e-12) << m;
    }
  }
}

TEST(FarField, PhaseModePurityOnHorizon) {
  const double ka = kGeom.ka();
  const int n_phi = 360;
  for (int m = -6; m <= 6; ++m) {
    const double jm = bessel_j(m, ka);
    const double alias = std::max(std::pow(bessel_j(m - 12, ka), 2), std::pow(bessel_j(m + 12, ka), 2));
    if (!(alias / (jm * jm) < 0.01)) continue;
    const auto w = phase_mode_excitation(m, kGeom);
    std::vector<Complex> cut(n_phi);
    const auto phis = carray::test::uniform_azimuths(n_phi);
    for (int j = 0; j < n_phi; ++j) cut[j] = total_field(kGeom, kIso, w, Direction(0.5 * kPi, phis[j]));
    double total = 0.0;
    for (const auto& v : cut) total += std::norm(v);
    Complex cm{};
    for (int j = 0; j < n_phi; ++j) cm += cut[j] * std::polar(1.0, -m * phis[j]);
    cm /= n_phi;
    EXPECT_GE(std::norm(cm) / (total / n_phi), 0.99) << m;
  }
}

TEST(FarField, RealSymmetricSpectrumIsMirrorSymmetric) {
  const ModeSpectrum s({{-3, 0.4}, {-1, 1.3}, {0, -0.7}, {1, 1.3}, {3, 0.4}});
  const auto w = mix_modes(s, kGeom);
  for (const auto& model : {kIso, kDefault}) {
    for (double th = 5.0; th < 180.0; th += 17.0) {
      for (double ph = 3.0; ph < 360.0; ph += 11.0) {
        const double a = std::abs(total_field(kGeom, model, w, Direction::from_degrees(th, ph)));
        const double b = std::abs(total_field(kGeom, model, w, Direction::from_degrees(th, -ph)));
        EXPECT_NEAR(a, b, 1e-10);
      }
    }
  }
}

// steer(s, phi0) rotates the pattern by phi0 exactly when phi0 is a
// multiple of the element spacing.
TEST(FarField, RotationTheoremOnSymmetryAngles) {
  std::mt19937_64 rng(99);
  ModeSpectrum s;
  for (int m = -5; m <= 6; ++m) s.set(m, carray::test::random_weights(rng, 1)[0]);
  const SphereGrid grid = SphereGrid::gauss_legendre(91, 360);
  for (const auto& model : {kIso, kDefault}) {
    const auto base = sample_pattern(kGeom, model, mix_modes(s, kGeom), grid);
    for (int shift_deg : {30, 180, 270}) {
      const auto rot = sample_pattern(kGeom, model, mix_modes(steer(s, deg2rad(shift_deg)), kGeom), grid);
      double err = 0.0;
      for (std::size_t i = 0; i < grid.theta.size(); ++i) {
        for (std::size_t j = 0; j < 360; ++j) {
          err = std::max(err, std::abs(rot.at(i, (j + shift_deg) % 360) - base.at(i, j)));
        }
      }
      EXPECT_LT(err, 1e-9) << shift_deg;
    }
  }
}
