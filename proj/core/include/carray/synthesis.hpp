// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "carray/elements.hpp"
#include "carray/farfield.hpp"
#include "carray/geometry.hpp"
#include "carray/modes.hpp"

namespace carray {

struct BeamTarget {
  double azimuth;      // rad, [0, 2*pi)
  double level = 1.0;  // desired field level, linear
};

inline constexpr double kDefaultRidge = 1e-6;

/// Least-squares placement of azimuth beams with a restricted mode set.
struct SynthesisProblem {
  std::vector<BeamTarget> targets;
  std::vector<int> mode_set;
  double ridge = kDefaultRidge;
  ArrayGeometry geometry = default_geometry();
  ElementPatternModel model = ElementPatternModel::default_model();

  /// Throws InvalidArgument (or ModeOutOfRange) when the invariants fail:
  /// non-empty pairwise-distinct targets in [0, 2*pi), in-range unique modes,
  /// ridge >= 0.
  void validate() const;
};

struct SynthesisResult {
  ModeSpectrum spectrum;
  double misfit = 0.0;  // sum_k |F(phi_k) - t_k|^2
  std::vector<std::string> warnings;
};

/// Solves min_c sum_k |sum_m c_m B_m(phi_k) - t_k|^2 + ridge * |c|^2 by a
/// dense Hermitian solve of the normal equations. B_m is the horizon field
/// of unit mode m including the element pattern.
///
/// Throws SingularSystem when ridge == 0 and the system is rank deficient.
/// More targets than modes is reported as a warning, not an error.
SynthesisResult synthesize(const SynthesisProblem& problem);

/// Horizon field of each mode in `mode_set` at each target azimuth; row k,
/// column m. Row-major.
std::vector<Complex> mode_response_matrix(const SynthesisProblem& problem);

/// Data misfit sum_k |F(phi_k) - t_k|^2 of a spectrum for the problem.
double synthesis_misfit(const SynthesisProblem& problem, const ModeSpectrum& spectrum);

/// "broadcast", "unicast-a", "unicast-b", "multicast-120".
std::span<const std::string_view> preset_names();

/// Named excitation spectra:
///   broadcast      {0: 1}
///   unicast-a      unit coefficients on m = -5..5 (co-phased beam at phi = 0)
///   unicast-b      raised-cosine taper 0.5 * (1 + cos(pi m / 6)) on m = -5..5
///   multicast-120  synthesize() for equal beams at 0, 120 and 240 deg
/// Throws UnknownPreset listing the valid names.
ModeSpectrum preset(std::string_view name, const ArrayGeometry& geometry,
                    const ElementPatternModel& model);

struct BeamCheck {
  double target_azimuth;        // rad
  bool found = false;
  double peak_azimuth = 0.0;    // rad, nearest detected peak
  double offset = 0.0;          // rad, signed peak - target
  double level_dbi = 0.0;
};

struct BeamVerification {
  std::vector<BeamPeak> peaks;
  std::vector<BeamCheck> checks;
  bool all_within_tolerance = false;
};

inline constexpr double kBeamPeakProminenceDb = 3.0;

/// Samples the default pattern of `spectrum`, runs find_beam_peaks and
/// matches every target to its nearest peak.
BeamVerification verify_beams(const SynthesisProblem& problem, const ModeSpectrum& spectrum,
                              double tolerance_rad);

}  // namespace carray
