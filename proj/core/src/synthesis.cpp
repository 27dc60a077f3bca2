// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#include "carray/synthesis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <string>

#include "carray/error.hpp"

namespace carray {
namespace {

using MatrixXc = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXc = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

constexpr std::array<std::string_view, 4> kPresetNames = {"broadcast", "unicast-a", "unicast-b",
                                                          "multicast-120"};

MatrixXc response(const SynthesisProblem& p) {
  const auto k = static_cast<Eigen::Index>(p.targets.size());
  const auto m = static_cast<Eigen::Index>(p.mode_set.size());
  MatrixXc b(k, m);
  for (Eigen::Index c = 0; c < m; ++c) {
    const ExcitationVector unit = phase_mode_excitation(p.mode_set[c], p.geometry);
    for (Eigen::Index r = 0; r < k; ++r) {
      b(r, c) = total_field(p.geometry, p.model, unit, Direction(0.5 * kPi, p.targets[r].azimuth));
    }
  }
  return b;
}

VectorXc target_vector(const SynthesisProblem& p) {
  VectorXc t(static_cast<Eigen::Index>(p.targets.size()));
  for (std::size_t k = 0; k < p.targets.size(); ++k) t(k) = p.targets[k].level;
  return t;
}

}  // namespace

void SynthesisProblem::validate() const {
  if (targets.empty()) throw InvalidArgument("synthesis needs at least one target");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double a = targets[i].azimuth;
    if (!std::isfinite(a) || a < 0.0 || a >= kTwoPi) {
      throw InvalidArgument("target azimuths must lie in [0, 360) deg");
    }
    if (!std::isfinite(targets[i].level)) throw InvalidArgument("target levels must be finite");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(angle_difference(a, targets[j].azimuth)) < 1e-12) {
        throw InvalidArgument("target azimuths must be pairwise distinct");
      }
    }
  }
  if (mode_set.empty()) throw InvalidArgument("synthesis needs a non-empty mode set");
  std::set<int> seen;
  for (int m : mode_set) {
    if (!mode_in_range(m, geometry.n_elements())) {
      throw ModeOutOfRange(m, "mode " + std::to_string(m) + " is outside " +
                                  mode_range_string(geometry.n_elements()));
    }
    if (!seen.insert(m).second) {
      throw InvalidArgument("mode " + std::to_string(m) + " appears twice in the mode set");
    }
  }
  if (!std::isfinite(ridge) || ridge < 0.0) throw InvalidArgument("ridge must be >= 0");
  model.validate();
}

std::vector<Complex> mode_response_matrix(const SynthesisProblem& problem) {
  problem.validate();
  const MatrixXc b = response(problem);
  std::vector<Complex> out(static_cast<std::size_t>(b.size()));
  for (Eigen::Index r = 0; r < b.rows(); ++r) {
    for (Eigen::Index c = 0; c < b.cols(); ++c) out[r * b.cols() + c] = b(r, c);
  }
  return out;
}

SynthesisResult synthesize(const SynthesisProblem& problem) {
  problem.validate();
  const MatrixXc b = response(problem);
  const VectorXc t = target_vector(problem);
  const Eigen::Index n_modes = b.cols();

  MatrixXc normal = b.adjoint() * b;
  const VectorXc rhs = b.adjoint() * t;

  if (problem.ridge == 0.0) {
    const Eigen::SelfAdjointEigenSolver<MatrixXc> eig(normal, Eigen::EigenvaluesOnly);
    const auto& ev = eig.eigenvalues();
    const double largest = std::max(ev.maxCoeff(), 0.0);
    if (!(ev.minCoeff() > 1e-12 * largest)) {
      throw SingularSystem("least-squares system is rank deficient (" +
                           std::to_string(b.rows()) + " targets, " + std::to_string(n_modes) +
                           " modes); use a ridge > 0");
    }
  }
  VectorXc c;
  if (problem.ridge > 0.0 && b.rows() < n_modes) {
    // Same minimiser through the smaller, better conditioned target-space system.
    MatrixXc gram = b * b.adjoint();
    gram.diagonal().array() += problem.ridge;
    c = b.adjoint() * gram.ldlt().solve(t);
  } else {
    normal.diagonal().array() += problem.ridge;
    c = normal.ldlt().solve(rhs);
  }

  SynthesisResult result;
  ModeSpectrum::Map coefficients;
  for (Eigen::Index i = 0; i < n_modes; ++i) coefficients.emplace(problem.mode_set[i], c(i));
  result.spectrum = ModeSpectrum(std::move(coefficients));
  result.misfit = (b * c - t).squaredNorm();
  if (b.rows() > n_modes) {
    result.warnings.push_back("underdetermined fit: " + std::to_string(b.rows()) +
                              " targets exceed " + std::to_string(n_modes) +
                              " modes, targets are matched in the least-squares sense only");
  }
  return result;
}

double synthesis_misfit(const SynthesisProblem& problem, const ModeSpectrum& spectrum) {
  problem.validate();
  const MatrixXc b = response(problem);
  VectorXc c(b.cols());
  for (Eigen::Index i = 0; i < b.cols(); ++i) c(i) = spectrum[problem.mode_set[i]];
  return (b * c - target_vector(problem)).squaredNorm();
}

std::span<const std::string_view> preset_names() { return kPresetNames; }

ModeSpectrum preset(std::string_view name, const ArrayGeometry& geometry,
                    const ElementPatternModel& model) {
  if (name == "broadcast") return ModeSpectrum({{0, Complex{1.0, 0.0}}});
  if (name == "unicast-a" || name == "unicast-b") {
    ModeSpectrum::Map c;
    for (int m = -5; m <= 5; ++m) {
      const double w = (name == "unicast-a") ? 1.0 : 0.5 * (1.0 + std::cos(kPi * m / 6.0));
      c.emplace(m, Complex{w, 0.0});
    }
    return ModeSpectrum(std::move(c));
  }
  if (name == "multicast-120") {
    SynthesisProblem p;
    p.targets = {{0.0, 1.0}, {deg2rad(120.0), 1.0}, {deg2rad(240.0), 1.0}};
    for (int m = -5; m <= 5; ++m) p.mode_set.push_back(m);
    p.geometry = geometry;
    p.model = model;
    return synthesize(p).spectrum;
  }
  std::string valid;
  for (auto n : kPresetNames) valid += (valid.empty() ? "" : ", ") + std::string(n);
  throw UnknownPreset("unknown preset \"" + std::string(name) + "\"; valid presets: " + valid);
}

BeamVerification verify_beams(const SynthesisProblem& problem, const ModeSpectrum& spectrum,
                              double tolerance_rad) {
  problem.validate();
  const RadiationPattern pattern =
      sample_default_pattern(problem.geometry, problem.model, mix_modes(spectrum, problem.geometry));
  BeamVerification out;
  out.peaks = find_beam_peaks(pattern, kBeamPeakProminenceDb);
  out.all_within_tolerance = true;
  for (const auto& target : problem.targets) {
    BeamCheck check{target.azimuth};
    double best = kTwoPi;
    for (const auto& peak : out.peaks) {
      const double d = angle_difference(peak.direction.phi(), target.azimuth);
      if (std::abs(d) < std::abs(best)) {
        best = d;
        check.found = true;
        check.peak_azimuth = peak.direction.phi();
        check.offset = d;
        check.level_dbi = peak.level_dbi;
      }
    }
    if (!check.found || std::abs(check.offset) > tolerance_rad) out.all_within_tolerance = false;
    out.checks.push_back(check);
  }
  return out;
}

}  // namespace carray
