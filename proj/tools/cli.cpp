// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <algorithm>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "carray/error.hpp"
#include "carray/farfield.hpp"
#include "carray/io.hpp"
#include "carray/modes.hpp"
#include "carray/nearfield.hpp"
#include "carray/parallel.hpp"
#include "carray/synthesis.hpp"

namespace carray::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

void reject_unknown(const json& j, std::string_view where,
                    std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw InvalidArgument("config: " + std::string(where) + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw InvalidArgument("config: unknown key \"" + key + "\" in " + std::string(where));
    }
  }
}

double get_number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw InvalidArgument(std::string("config: ") + key + " must be a number");
  return j[key].get<double>();
}

int get_int(const json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) {
    throw InvalidArgument(std::string("config: ") + key + " must be an integer");
  }
  const auto v = j[key].get<long long>();
  if (v < 0 || v > 1'000'000) throw InvalidArgument(std::string("config: ") + key + " out of range");
  return static_cast<int>(v);
}

struct Context {
  RunConfig config;
  std::ostream& out;
  std::ostream& err;

  fs::path path(const std::string& name) const { return config.output_dir / name; }
  void write(const std::string& name, std::string_view contents) const {
    io::write_file(path(name), contents);
    out << path(name).string() << '\n';
  }
};

ExcitationVector load_excitation(const Context& ctx, const std::string& file) {
  ExcitationVector e = io::excitation_from_json(io::read_file(file));
  const auto n = static_cast<std::size_t>(ctx.config.geometry.n_elements());
  if (e.size() != n) {
    throw InvalidArgument("excitation has " + std::to_string(e.size()) +
                          " weights but the array has " + std::to_string(n) + " elements");
  }
  return e;
}

RadiationPattern sample(const Context& ctx, const ExcitationVector& e) {
  return sample_pattern(ctx.config.geometry, ctx.config.model, e,
                        SphereGrid::gauss_legendre(ctx.config.n_theta, ctx.config.n_phi));
}

void require_in_range(int index, const char* what, const ArrayGeometry& g) {
  if (!mode_in_range(index, g.n_elements())) {
    throw ModeOutOfRange(index, std::string(what) + " must lie in " +
                                    mode_range_string(g.n_elements()));
  }
}

}  // namespace

RunConfig parse_run_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  reject_unknown(j, "config", {"geometry", "element_model", "output_dir", "grid"});
  RunConfig c;

  if (j.contains("geometry")) {
    const json& g = j["geometry"];
    reject_unknown(g, "geometry", {"n_elements", "diameter_mm", "frequency_ghz"});
    c.geometry = build_uniform_circular_array(
        get_int(g, "n_elements", kDefaultElements), get_number(g, "diameter_mm", kDefaultDiameterMm),
        Frequency::from_ghz(get_number(g, "frequency_ghz", kDefaultFrequencyGhz)));
  }
  if (j.contains("element_model")) {
    const json& m = j["element_model"];
    reject_unknown(m, "element_model", {"type", "q_radial", "q_zenith", "beta"});
    ElementPatternModel model = ElementPatternModel::default_model();
    if (m.contains("type")) {
      if (!m["type"].is_string()) throw InvalidArgument("config: element_model.type must be a string");
      model.kind = parse_element_kind(m["type"].get<std::string>());
      if (model.kind == ElementKind::isotropic) model = ElementPatternModel::isotropic();
      if (model.kind == ElementKind::cosine_boresight) model = ElementPatternModel::cosine(1.0);
    }
    model.q_radial = get_number(m, "q_radial", model.q_radial);
    model.q_zenith = get_number(m, "q_zenith", model.q_zenith);
    model.beta = get_number(m, "beta", model.beta);
    model.validate();
    c.model = model;
  }
  if (j.contains("output_dir")) {
    if (!j["output_dir"].is_string()) throw InvalidArgument("config: output_dir must be a string");
    c.output_dir = j["output_dir"].get<std::string>();
  }
  if (j.contains("grid")) {
    const json& g = j["grid"];
    reject_unknown(g, "grid", {"n_theta", "n_phi"});
    c.n_theta = get_int(g, "n_theta", c.n_theta);
    c.n_phi = get_int(g, "n_phi", c.n_phi);
    if (c.n_theta < static_cast<int>(kMinDirectivityTheta) || c.n_theta % 2 == 0) {
      throw InvalidArgument("config: grid.n_theta must be odd and >= 91");
    }
    if (c.n_phi < static_cast<int>(kMinDirectivityPhi)) {
      throw InvalidArgument("config: grid.n_phi must be >= 180");
    }
  }
  return c;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multimode circular array: excitations, patterns, near fields, beam synthesis",
               "carray"};
  app.require_subcommand(1);
  std::string config_file;
  std::string out_dir;
  app.add_option("--config", config_file, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "output directory (overrides output_dir)");

  // excite
  auto* excite = app.add_subcommand("excite", "write an excitation vector");
  bool phase = false;
  bool oam = false;
  std::optional<int> mode_index;
  std::optional<int> oam_order;
  std::string spectrum_file;
  std::string preset_name;
  std::string excite_name = "excitation.json";
  excite->add_flag("--phase", phase, "phase-mode excitation, needs -m");
  excite->add_flag("--oam", oam, "OAM excitation, needs -l");
  excite->add_option("-m,--mode", mode_index, "phase-mode index");
  excite->add_option("-l,--order", oam_order, "OAM order");
  excite->add_option("--spectrum", spectrum_file, "mode spectrum JSON to mix");
  excite->add_option("--preset", preset_name, "named beam preset");
  excite->add_option("-o,--output", excite_name, "output file name");

  // commands reading an excitation
  std::string excitation_file;
  auto* pattern = app.add_subcommand("pattern", "far-field pattern CSV and directivity report");
  pattern->add_option("excitation", excitation_file)->required()->check(CLI::ExistingFile);

  auto* direct = app.add_subcommand("directivity", "directivity report only");
  direct->add_option("excitation", excitation_file)->required()->check(CLI::ExistingFile);
  std::optional<double> toward_theta;
  std::optional<double> toward_phi;
  direct->add_option("--theta-deg", toward_theta, "report toward this direction");
  direct->add_option("--phi-deg", toward_phi, "azimuth of that direction");

  auto* peaks = app.add_subcommand("peaks", "beam peaks on the horizon cut");
  peaks->add_option("excitation", excitation_file)->required()->check(CLI::ExistingFile);
  double min_prominence = kBeamPeakProminenceDb;
  double max_below = 6.0;
  peaks->add_option("--min-prominence-db", min_prominence, "minimum topographic prominence")->capture_default_str();
  peaks->add_option("--max-below-db", max_below, "maximum level below the strongest beam")->capture_default_str();

  auto* near = app.add_subcommand("nearfield", "field on a plane above the array");
  near->add_option("excitation", excitation_file)->required()->check(CLI::ExistingFile);
  double z_lambda = 2.0;
  double half_extent_lambda = 2.0;
  int samples = 201;
  int frames = 0;
  near->add_option("--z-lambda", z_lambda, "plane height in wavelengths")->capture_default_str();
  near->add_option("--half-extent-lambda", half_extent_lambda, "grid half-width in wavelengths")->capture_default_str();
  near->add_option("--samples", samples, "samples per axis")->capture_default_str();
  near->add_option("--frames", frames, "number of time snapshots")->capture_default_str();

  auto* synth = app.add_subcommand("synth", "synthesize a mode spectrum for azimuth targets");
  std::string problem_file;
  double tolerance_deg = 2.0;
  synth->add_option("problem", problem_file)->required()->check(CLI::ExistingFile);
  synth->add_option("--tolerance-deg", tolerance_deg, "beam placement tolerance")->capture_default_str();

  auto* decompose = app.add_subcommand("decompose", "mode spectrum of an excitation");
  decompose->add_option("excitation", excitation_file)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    thread_count();
    Context ctx{config_file.empty() ? RunConfig{} : parse_run_config(io::read_file(config_file)),
                out, err};
    if (!out_dir.empty()) ctx.config.output_dir = out_dir;
    const ArrayGeometry& geom = ctx.config.geometry;
    const ElementPatternModel& model = ctx.config.model;

    if (*excite) {
      const int sources = int(phase) + int(oam) + int(!spectrum_file.empty()) +
                          int(!preset_name.empty());
      if (sources != 1) {
        throw InvalidArgument("excite needs exactly one of --phase, --oam, --spectrum, --preset");
      }
      ExcitationVector e;
      if (phase) {
        if (!mode_index || oam_order) throw InvalidArgument("--phase needs -m and no -l");
        require_in_range(*mode_index, "mode", geom);
        e = phase_mode_excitation(*mode_index, geom);
      } else if (oam) {
        if (!oam_order || mode_index) throw InvalidArgument("--oam needs -l and no -m");
        require_in_range(*oam_order, "OAM order", geom);
        e = oam_excitation(*oam_order, geom);
      } else {
        if (mode_index || oam_order) throw InvalidArgument("-m and -l need --phase or --oam");
        const ModeSpectrum s = spectrum_file.empty()
                                   ? preset(preset_name, geom, model)
                                   : io::spectrum_from_json(io::read_file(spectrum_file));
        e = mix_modes(s, geom);
      }
      ctx.write(excite_name, io::excitation_to_json(e));
    } else if (*pattern) {
      const ExcitationVector e = load_excitation(ctx, excitation_file);
      const RadiationPattern p = sample(ctx, e);
      const DirectivityReport report = directivity(p);
      ctx.write("pattern.csv", io::pattern_to_csv(p));
      ctx.write("directivity.json", io::directivity_to_json(report));
    } else if (*direct) {
      if (toward_theta.has_value() != toward_phi.has_value()) {
        throw InvalidArgument("--theta-deg and --phi-deg go together");
      }
      const ExcitationVector e = load_excitation(ctx, excitation_file);
      std::optional<Direction> toward;
      if (toward_theta) toward = Direction::from_degrees(*toward_theta, *toward_phi);
      const RadiationPattern p = sample(ctx, e);
      const DirectivityReport report = toward ? directivity(p, *toward) : directivity(p);
      ctx.write("directivity.json", io::directivity_to_json(report));
    } else if (*peaks) {
      if (!(min_prominence > 0.0) || !(max_below >= 0.0)) {
        throw InvalidArgument("--min-prominence-db must be positive and --max-below-db non-negative");
      }
      const ExcitationVector e = load_excitation(ctx, excitation_file);
      const RadiationPattern p = sample(ctx, e);
      directivity(p);  // rejects all-zero excitations
      ctx.write("peaks.json", io::peaks_to_json(find_beam_peaks(p, min_prominence, max_below)));
    } else if (*near) {
      if (!(z_lambda > 0.0)) throw InvalidArgument("--z-lambda must be positive");
      if (!(half_extent_lambda > 0.0)) throw InvalidArgument("--half-extent-lambda must be positive");
      if (samples < 2) throw InvalidArgument("--samples must be >= 2");
      if (frames < 0 || frames > 999) throw InvalidArgument("--frames must lie in [0, 999]");
      const ExcitationVector e = load_excitation(ctx, excitation_file);
      const double lambda = geom.wavelength();
      const FieldGrid grid =
          efield_on_plane(geom, model, e, z_lambda * lambda, half_extent_lambda * lambda, samples);
      ctx.write("nearfield.csv", io::field_grid_to_csv(grid));
      if (frames > 0) {
        const auto snaps = time_snapshots(grid, frames);
        for (int t = 0; t < frames; ++t) {
          ctx.write(io::snapshot_file_name("nearfield", t), io::snapshot_to_csv(snaps[t]));
        }
      }
    } else if (*synth) {
      if (!(tolerance_deg > 0.0)) throw InvalidArgument("--tolerance-deg must be positive");
      const SynthesisProblem problem =
          io::problem_from_json(io::read_file(problem_file), geom, model);
      const SynthesisResult result = synthesize(problem);
      const BeamVerification check = verify_beams(problem, result.spectrum, deg2rad(tolerance_deg));
      for (const auto& w : result.warnings) err << "warning: " << w << '\n';
      ctx.write("spectrum.json", io::spectrum_to_json(result.spectrum));
      ctx.write("verification.json", io::verification_to_json(result, check));
    } else if (*decompose) {
      const ExcitationVector e = load_excitation(ctx, excitation_file);
      ctx.write("spectrum.json", io::spectrum_to_json(mode_decompose(e, geom)));
    }
    return kOk;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace carray::cli
