// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "carray/farfield.hpp"
#include "carray/modes.hpp"
#include "carray/nearfield.hpp"
#include "carray/synthesis.hpp"

// Text formats. JSON numerics use 17 significant digits, CSV 9. Parse
// failures throw InvalidArgument with the line and column when known.
namespace carray::io {

std::string format_double(double v, int digits);

// {"modes": [{"m": int, "re": num, "im": num}, ...]}
std::string spectrum_to_json(const ModeSpectrum& spectrum);
ModeSpectrum spectrum_from_json(std::string_view text);

// {"n_elements": int, "weights": [{"re": num, "im": num}, ...]}
std::string excitation_to_json(const ExcitationVector& excitation);
ExcitationVector excitation_from_json(std::string_view text);

// theta_deg,phi_deg,re,im,mag_db,phase_deg ; theta outer, mag_db relative to the maximum
std::string pattern_to_csv(const RadiationPattern& pattern);

// {"peak_dbi": num, "theta_deg": num, "phi_deg": num}
std::string directivity_to_json(const DirectivityReport& report);

// x_mm,y_mm,re,im,mag_norm,phase_deg ; x outer, mag_norm relative to the maximum
std::string field_grid_to_csv(const FieldGrid& grid);

// x_mm,y_mm,value
std::string snapshot_to_csv(const RealGrid& frame);

// "<stem>_tNNN.csv"
std::string snapshot_file_name(std::string_view stem, int frame);

// {"targets_deg": [...], "levels": [...], "modes": [...], "ridge": num}
// levels default to 1, modes to the full admissible range, ridge to 1e-6.
// Geometry and model are taken from the arguments.
SynthesisProblem problem_from_json(std::string_view text, const ArrayGeometry& geometry,
                                   const ElementPatternModel& model);

std::string peaks_to_json(const std::vector<BeamPeak>& peaks);
std::string verification_to_json(const SynthesisResult& result,
                                 const BeamVerification& verification);

std::string read_file(const std::filesystem::path& path);
// Writes through a temporary file and renames, LF line endings as given.
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace carray::io
