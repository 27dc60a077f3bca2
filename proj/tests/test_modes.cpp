// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "carray/error.hpp"
#include "carray/farfield.hpp"
#include "carray/modes.hpp"
#include "support.hpp"

using namespace carray;
using carray::test::max_abs_diff;

namespace {
const ArrayGeometry kGeom = default_geometry();
constexpr Complex kI{0.0, 1.0};
}  // namespace

TEST(PhaseMode, ZeroIsUniform) {
  const auto w = phase_mode_excitation(0, kGeom);
  ASSERT_EQ(w.size(), 12u);
  for (std::size_t n = 0; n < 12; ++n) EXPECT_EQ(w[n], Complex(1.0 / 12.0, 0.0));
}

TEST(PhaseMode, FirstModeAdvancesThirtyDegrees) {
  const auto w = phase_mode_excitation(1, kGeom);
  for (int n = 0; n < 12; ++n) {
    EXPECT_LT(std::abs(w[n] - std::exp(kI * (n * kPi / 6.0)) / 12.0), 1e-16) << n;
  }
}

TEST(PhaseMode, NyquistModeAliases) {
  const auto w6 = phase_mode_excitation(6, kGeom);
  const auto wm6 = phase_mode_excitation(-6, kGeom);
  for (int n = 0; n < 12; ++n) EXPECT_EQ(w6[n], Complex((n % 2 ? -1.0 : 1.0) / 12.0, 0.0));
  EXPECT_EQ(w6, wm6);
}

TEST(PhaseMode, AliasingIsExact) {
  for (int m = -5; m <= 6; ++m) {
    EXPECT_EQ(phase_mode_excitation(m, kGeom), phase_mode_excitation(m + 12, kGeom)) << m;
    EXPECT_EQ(phase_mode_excitation(m, kGeom), phase_mode_excitation(m - 24, kGeom)) << m;
  }
}

TEST(Oam, Definition) {
  EXPECT_EQ(oam_excitation(0, kGeom), phase_mode_excitation(0, kGeom));
  const auto w = oam_excitation(2, kGeom);
  for (int n = 0; n < 12; ++n) {
    EXPECT_LT(std::abs(w[n] - std::exp(kI * (n * kPi / 3.0)) / 12.0), 1e-16) << n;
  }
}

TEST(Oam, WeightsSumToZero) {
  for (int l = 1; l <= 11; ++l) {
    const auto w = oam_excitation(l, kGeom);
    Complex s{};
    for (auto v : w.weights()) s += v;
    EXPECT_LT(std::abs(s), 1e-15) << l;
  }
}

TEST(MixModes, Examples) {
  EXPECT_EQ(mix_modes(ModeSpectrum({{0, 1.0}}), kGeom), phase_mode_excitation(0, kGeom));
  const auto w = mix_modes(ModeSpectrum({{1, 0.5}, {-1, 0.5}}), kGeom);
  for (int n = 0; n < 12; ++n) {
    EXPECT_LT(std::abs(w[n] - std::cos(kGeom.element_angles()[n]) / 12.0), 1e-16) << n;
  }
}

TEST(MixModes, CophasalBeamPeaksAtZero) {
  ModeSpectrum s;
  for (int m = -5; m <= 5; ++m) s.set(m, 1.0);
  const auto pattern = sample_default_pattern(kGeom, ElementPatternModel::default_model(),
                                              mix_modes(s, kGeom));
  const auto peaks = find_beam_peaks(pattern, 3.0);
  ASSERT_EQ(peaks.size(), 1u);
  EXPECT_LT(std::abs(rad2deg(angle_difference(peaks[0].direction.phi(), 0.0))), 1.0);
}

TEST(MixModes, RejectsOutOfRangeModes) {
  EXPECT_THROW(mix_modes(ModeSpectrum({{7, 1.0}}), kGeom), ModeOutOfRange);
  EXPECT_THROW(mix_modes(ModeSpectrum({{-6, 1.0}}), kGeom), ModeOutOfRange);
  try {
    mix_modes(ModeSpectrum({{-6, 1.0}}), kGeom);
  } catch (const ModeOutOfRange& e) {
    EXPECT_EQ(e.index(), -6);
  }
  EXPECT_NO_THROW(mix_modes(ModeSpectrum({{6, 1.0}}), kGeom));
}

TEST(ModeRange, HalfOpenInterval) {
  EXPECT_EQ(mode_range_string(12), "(-6, 6]");
  const auto idx = mode_indices(12);
  ASSERT_EQ(idx.size(), 12u);
  EXPECT_EQ(idx.front(), -5);
  EXPECT_EQ(idx.back(), 6);
  EXPECT_TRUE(mode_in_range(6, 12));
  EXPECT_FALSE(mode_in_range(-6, 12));
  EXPECT_EQ(mode_indices(5).front(), -2);
  EXPECT_EQ(mode_indices(5).back(), 2);
}

TEST(Decompose, SingleModesAndUniform) {
  const auto s = mode_decompose(phase_mode_excitation(3, kGeom), kGeom);
  for (int m = -5; m <= 6; ++m) {
    const Complex expected = m == 3 ? Complex{1.0, 0.0} : Complex{};
    EXPECT_LT(std::abs(s[m] - expected), 1e-12) << m;
  }
  std::vector<Complex> uniform(12, Complex{1.0 / 12.0, 0.0});
  const auto u = mode_decompose(ExcitationVector(uniform), kGeom);
  EXPECT_LT(std::abs(u[0] - 1.0), 1e-15);
  for (int m = -5; m <= 6; ++m) {
    if (m != 0) EXPECT_LT(std::abs(u[m]), 1e-15) << m;
  }
  EXPECT_THROW(mode_decompose(ExcitationVector(std::vector<Complex>(5)), kGeom), InvalidArgument);
}

TEST(Decompose, OrthogonalityOfDiscreteExponentials) {
  for (int m = -5; m <= 6; ++m) {
    for (int mp = -5; mp <= 6; ++mp) {
      Complex s{};
      for (double phi : kGeom.element_angles()) s += std::exp(kI * (double(m - mp) * phi));
      EXPECT_LT(std::abs(s - (m == mp ? 12.0 : 0.0)), 1e-10) << m << "," << mp;
    }
  }
}

TEST(Decompose, RandomRoundTrips) {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = carray::test::random_excitation(rng, 12);
    const auto back = mix_modes(mode_decompose(w, kGeom), kGeom);
    EXPECT_LT(max_abs_diff(back.weights(), w.weights()), 1e-12);

    ModeSpectrum s;
    for (int m = -5; m <= 6; ++m) s.set(m, carray::test::random_weights(rng, 1)[0]);
    const auto s2 = mode_decompose(mix_modes(s, kGeom), kGeom);
    for (int m = -5; m <= 6; ++m) EXPECT_LT(std::abs(s2[m] - s[m]), 1e-12);
  }
}

TEST(MixModes, Linearity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    ModeSpectrum s1, s2;
    for (int m = -5; m <= 6; ++m) {
      s1.set(m, carray::test::random_weights(rng, 1)[0]);
      s2.set(m, carray::test::random_weights(rng, 1)[0]);
    }
    const auto ab = carray::test::random_weights(rng, 2);
    const auto lhs = mix_modes(ab[0] * s1 + ab[1] * s2, kGeom);
    const auto w1 = mix_modes(s1, kGeom);
    const auto w2 = mix_modes(s2, kGeom);
    for (int n = 0; n < 12; ++n) {
      EXPECT_LT(std::abs(lhs[n] - (ab[0] * w1[n] + ab[1] * w2[n])), 1e-13);
    }
  }
}

TEST(Steer, Examples) {
  const ModeSpectrum s({{-2, {0.3, 0.1}}, {0, 1.0}, {4, {0.0, -2.0}}});
  EXPECT_EQ(steer(s, 0.0), s);
  const auto r = steer(ModeSpectrum({{1, 1.0}}), 0.5 * kPi);
  EXPECT_LT(std::abs(r[1] - Complex(0.0, -1.0)), 1e-16);
}

TEST(Steer, CophasalPeakMovesToThirtySevenDegrees) {
  ModeSpectrum s;
  for (int m = -5; m <= 5; ++m) s.set(m, 1.0);
  const auto model = ElementPatternModel::default_model();
  const auto pattern =
      sample_default_pattern(kGeom, model, mix_modes(steer(s, deg2rad(37.0)), kGeom));
  const auto peaks = find_beam_peaks(pattern, 3.0);
  ASSERT_EQ(peaks.size(), 1u);
  EXPECT_LT(std::abs(rad2deg(angle_difference(peaks[0].direction.phi(), deg2rad(37.0)))), 1.0);
}

TEST(RotateElements, CyclicShift) {
  std::mt19937_64 rng(3);
  const auto w = carray::test::random_excitation(rng, 12);
  const auto r = rotate_elements(w, 1);
  for (int n = 0; n < 12; ++n) EXPECT_EQ(r[(n + 1) % 12], w[n]);
  EXPECT_EQ(rotate_elements(w, -13), rotate_elements(w, -1));
  EXPECT_EQ(rotate_elements(rotate_elements(w, 5), -5), w);
}

TEST(RotateElements, EqualsSteeringByElementSpacing) {
  std::mt19937_64 rng(11);
  const auto w = carray::test::random_excitation(rng, 12);
  const auto a = mode_decompose(rotate_elements(w, 1), kGeom);
  const auto b = steer(mode_decompose(w, kGeom), kTwoPi / 12.0);
  for (int m = -5; m <= 6; ++m) EXPECT_LT(std::abs(a[m] - b[m]), 1e-12) << m;
}

TEST(ExcitationVector, RejectsNonFinite) {
  EXPECT_THROW(ExcitationVector({Complex{NAN, 0.0}}), InvalidArgument);
  EXPECT_THROW(ExcitationVector({Complex{0.0, INFINITY}}), InvalidArgument);
}

TEST(RootOfUnity, ExactQuarterTurns) {
  EXPECT_EQ(root_of_unity(0, 12), Complex(1.0, 0.0));
  EXPECT_EQ(root_of_unity(3, 12), Complex(0.0, 1.0));
  EXPECT_EQ(root_of_unity(6, 12), Complex(-1.0, 0.0));
  EXPECT_EQ(root_of_unity(-3, 12), Complex(0.0, -1.0));
  EXPECT_EQ(root_of_unity(15, 12), root_of_unity(3, 12));
}
