// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#include "carray/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <system_error>

#include <json.hpp>

#include "carray/error.hpp"

namespace carray::io {
namespace {

using nlohmann::json;

constexpr int kJsonDigits = 17;
constexpr int kCsvDigits = 9;
constexpr double kDbFloor = -300.0;

std::string j17(double v) { return format_double(v, kJsonDigits); }
std::string c9(double v) { return format_double(v, kCsvDigits); }

json parse(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based offset just past the failure
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InvalidArgument(std::string(what) + ": malformed JSON at line " + std::to_string(line) +
                          ", column " + std::to_string(column) + ": " + e.what());
  }
}

void require_keys(const json& j, std::string_view what, std::initializer_list<std::string_view> allowed,
                  std::initializer_list<std::string_view> required) {
  if (!j.is_object()) throw InvalidArgument(std::string(what) + ": expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw InvalidArgument(std::string(what) + ": unknown key \"" + key + "\"");
    }
  }
  for (auto key : required) {
    if (!j.contains(key)) {
      throw InvalidArgument(std::string(what) + ": missing key \"" + std::string(key) + "\"");
    }
  }
}

double number(const json& j, std::string_view what) {
  if (!j.is_number()) throw InvalidArgument(std::string(what) + " must be a number");
  return j.get<double>();
}

int integer(const json& j, std::string_view what) {
  if (!j.is_number_integer()) throw InvalidArgument(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1'000'000'000LL || v > 1'000'000'000LL) {
    throw InvalidArgument(std::string(what) + " is out of range");
  }
  return static_cast<int>(v);
}

const json& array(const json& j, std::string_view what) {
  if (!j.is_array()) throw InvalidArgument(std::string(what) + " must be an array");
  return j;
}

double magnitude_db(double mag, double max_mag) {
  if (!(max_mag > 0.0) || !(mag > 0.0)) return kDbFloor;
  return std::max(kDbFloor, 20.0 * std::log10(mag / max_mag));
}

}  // namespace

std::string format_double(double v, int digits) {
  if (v == 0.0) v = 0.0;  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string spectrum_to_json(const ModeSpectrum& spectrum) {
  std::string out = "{\"modes\": [";
  bool first = true;
  for (const auto& [m, c] : spectrum.coefficients()) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "  {\"m\": " + std::to_string(m) + ", \"re\": " + j17(c.real()) +
           ", \"im\": " + j17(c.imag()) + "}";
  }
  out += first ? "]}\n" : "\n]}\n";
  return out;
}

ModeSpectrum spectrum_from_json(std::string_view text) {
  const json j = parse(text, "spectrum");
  require_keys(j, "spectrum", {"modes"}, {"modes"});
  ModeSpectrum::Map c;
  for (const auto& entry : array(j["modes"], "spectrum.modes")) {
    require_keys(entry, "spectrum mode entry", {"m", "re", "im"}, {"m", "re", "im"});
    const int m = integer(entry["m"], "m");
    const Complex v{number(entry["re"], "re"), number(entry["im"], "im")};
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvalidArgument("spectrum coefficients must be finite");
    }
    if (!c.emplace(m, v).second) {
      throw InvalidArgument("spectrum lists mode " + std::to_string(m) + " twice");
    }
  }
  return ModeSpectrum(std::move(c));
}

std::string excitation_to_json(const ExcitationVector& excitation) {
  std::string out = "{\"n_elements\": " + std::to_string(excitation.size()) + ", \"weights\": [";
  for (std::size_t n = 0; n < excitation.size(); ++n) {
    out += n == 0 ? "\n" : ",\n";
    out += "  {\"re\": " + j17(excitation[n].real()) + ", \"im\": " + j17(excitation[n].imag()) +
           "}";
  }
  out += excitation.size() == 0 ? "]}\n" : "\n]}\n";
  return out;
}

ExcitationVector excitation_from_json(std::string_view text) {
  const json j = parse(text, "excitation");
  require_keys(j, "excitation", {"n_elements", "weights"}, {"n_elements", "weights"});
  const int n = integer(j["n_elements"], "n_elements");
  std::vector<Complex> w;
  for (const auto& entry : array(j["weights"], "excitation.weights")) {
    require_keys(entry, "excitation weight", {"re", "im"}, {"re", "im"});
    w.emplace_back(number(entry["re"], "re"), number(entry["im"], "im"));
  }
  if (n < 0 || static_cast<std::size_t>(n) != w.size()) {
    throw InvalidArgument("excitation: n_elements = " + std::to_string(n) + " but " +
                          std::to_string(w.size()) + " weights given");
  }
  return ExcitationVector(std::move(w));
}

std::string pattern_to_csv(const RadiationPattern& pattern) {
  double max_mag = 0.0;
  for (const auto& v : pattern.values()) max_mag = std::max(max_mag, std::abs(v));
  std::string out = "theta_deg,phi_deg,re,im,mag_db,phase_deg\n";
  out.reserve(out.size() + pattern.values().size() * 80);
  for (std::size_t i = 0; i < pattern.n_theta(); ++i) {
    const std::string theta = c9(rad2deg(pattern.theta()[i]));
    for (std::size_t j = 0; j < pattern.n_phi(); ++j) {
      const Complex v = pattern.at(i, j);
      out += theta;
      out += ',' + c9(rad2deg(pattern.phi()[j])) + ',' + c9(v.real()) + ',' + c9(v.imag()) + ',' +
             c9(magnitude_db(std::abs(v), max_mag)) + ',' + c9(rad2deg(std::arg(v))) + '\n';
    }
  }
  return out;
}

std::string directivity_to_json(const DirectivityReport& report) {
  return "{\"peak_dbi\": " + j17(report.peak_dbi) +
         ", \"theta_deg\": " + j17(rad2deg(report.peak_direction.theta())) +
         ", \"phi_deg\": " + j17(rad2deg(report.peak_direction.phi())) + "}\n";
}

std::string field_grid_to_csv(const FieldGrid& grid) {
  const double max_mag = grid.max_magnitude();
  std::string out = "x_mm,y_mm,re,im,mag_norm,phase_deg\n";
  out.reserve(out.size() + grid.values.size() * 80);
  for (std::size_t i = 0; i < grid.x.size(); ++i) {
    const std::string x = c9(grid.x[i] * 1e3);
    for (std::size_t j = 0; j < grid.y.size(); ++j) {
      const Complex v = grid.at(i, j);
      const double norm_mag = max_mag > 0.0 ? std::abs(v) / max_mag : 0.0;
      out += x;
      out += ',' + c9(grid.y[j] * 1e3) + ',' + c9(v.real()) + ',' + c9(v.imag()) + ',' +
             c9(norm_mag) + ',' + c9(rad2deg(std::arg(v))) + '\n';
    }
  }
  return out;
}

std::string snapshot_to_csv(const RealGrid& frame) {
  std::string out = "x_mm,y_mm,value\n";
  for (std::size_t i = 0; i < frame.x.size(); ++i) {
    const std::string x = c9(frame.x[i] * 1e3);
    for (std::size_t j = 0; j < frame.y.size(); ++j) {
      out += x;
      out += ',' + c9(frame.y[j] * 1e3) + ',' + c9(frame.at(i, j)) + '\n';
    }
  }
  return out;
}

std::string snapshot_file_name(std::string_view stem, int frame) {
  char suffix[16];
  std::snprintf(suffix, sizeof suffix, "_t%03d.csv", frame);
  return std::string(stem) + suffix;
}

SynthesisProblem problem_from_json(std::string_view text, const ArrayGeometry& geometry,
                                   const ElementPatternModel& model) {
  const json j = parse(text, "problem");
  require_keys(j, "problem", {"targets_deg", "levels", "modes", "ridge"}, {"targets_deg"});
  SynthesisProblem p;
  p.geometry = geometry;
  p.model = model;
  for (const auto& t : array(j["targets_deg"], "targets_deg")) {
    p.targets.push_back({deg2rad(number(t, "targets_deg entry")), 1.0});
  }
  if (j.contains("levels")) {
    const auto& levels = array(j["levels"], "levels");
    if (levels.size() != p.targets.size()) {
      throw InvalidArgument("problem: levels must have one entry per target");
    }
    for (std::size_t k = 0; k < levels.size(); ++k) p.targets[k].level = number(levels[k], "level");
  }
  if (j.contains("modes")) {
    for (const auto& m : array(j["modes"], "modes")) p.mode_set.push_back(integer(m, "mode"));
  } else {
    p.mode_set = mode_indices(geometry.n_elements());
  }
  if (j.contains("ridge")) p.ridge = number(j["ridge"], "ridge");
  p.validate();
  return p;
}

std::string peaks_to_json(const std::vector<BeamPeak>& peaks) {
  std::string out = "{\"peaks\": [";
  for (std::size_t k = 0; k < peaks.size(); ++k) {
    out += k == 0 ? "\n" : ",\n";
    out += "  {\"theta_deg\": " + j17(rad2deg(peaks[k].direction.theta())) +
           ", \"phi_deg\": " + j17(rad2deg(peaks[k].direction.phi())) +
           ", \"level_dbi\": " + j17(peaks[k].level_dbi) +
           ", \"prominence_db\": " + j17(peaks[k].prominence_db) + "}";
  }
  out += peaks.empty() ? "]}\n" : "\n]}\n";
  return out;
}

std::string verification_to_json(const SynthesisResult& result,
                                 const BeamVerification& verification) {
  std::string out = "{\"misfit\": " + j17(result.misfit) + ",\n \"warnings\": [";
  for (std::size_t k = 0; k < result.warnings.size(); ++k) {
    out += (k == 0 ? "" : ", ") + json(result.warnings[k]).dump();
  }
  out += "],\n \"peaks\": [";
  for (std::size_t k = 0; k < verification.peaks.size(); ++k) {
    const auto& p = verification.peaks[k];
    out += k == 0 ? "\n" : ",\n";
    out += "  {\"phi_deg\": " + j17(rad2deg(p.direction.phi())) +
           ", \"level_dbi\": " + j17(p.level_dbi) + "}";
  }
  out += verification.peaks.empty() ? "],\n" : "\n ],\n";
  out += " \"targets\": [";
  for (std::size_t k = 0; k < verification.checks.size(); ++k) {
    const auto& c = verification.checks[k];
    out += k == 0 ? "\n" : ",\n";
    out += "  {\"target_deg\": " + j17(rad2deg(c.target_azimuth)) +
           ", \"found\": " + (c.found ? "true" : "false");
    if (c.found) {
      out += ", \"peak_deg\": " + j17(rad2deg(c.peak_azimuth)) +
             ", \"offset_deg\": " + j17(rad2deg(c.offset)) + ", \"level_dbi\": " + j17(c.level_dbi);
    }
    out += "}";
  }
  out += verification.checks.empty() ? "],\n" : "\n ],\n";
  out += std::string(" \"all_within_tolerance\": ") +
         (verification.all_within_tolerance ? "true" : "false") + "}\n";
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw Error("cannot create directory " + path.parent_path().string());
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace carray::io
