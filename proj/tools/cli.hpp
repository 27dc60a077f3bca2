// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "carray/elements.hpp"
#include "carray/geometry.hpp"
#include "carray/quadrature.hpp"

namespace carray::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kNumerical = 3 };

struct RunConfig {
  ArrayGeometry geometry = default_geometry();
  ElementPatternModel model = ElementPatternModel::default_model();
  std::filesystem::path output_dir = ".";
  int n_theta = kDefaultThetaSamples;
  int n_phi = kDefaultPhiSamples;
};

// Strict: unknown keys at any level throw InvalidArgument. Missing keys
// keep their defaults.
//
// {"geometry": {"n_elements", "diameter_mm", "frequency_ghz"},
//  "element_model": {"type", "q_radial", "q_zenith", "beta"},
//  "output_dir": "path",
//  "grid": {"n_theta", "n_phi"}}
RunConfig parse_run_config(std::string_view text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace carray::cli
