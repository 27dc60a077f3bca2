// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#include "carray/farfield.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "carray/bessel.hpp"
#include "carray/error.hpp"
#include "carray/parallel.hpp"

namespace carray {
namespace {

constexpr double kFloorDbi = -300.0;

void require_length(const ExcitationVector& excitation, const ArrayGeometry& geometry) {
  if (excitation.size() != static_cast<std::size_t>(geometry.n_elements())) {
    throw InvalidArgument("excitation has " + std::to_string(excitation.size()) +
                          " weights but the array has " +
                          std::to_string(geometry.n_elements()) + " elements");
  }
}

Complex field_unchecked(const ArrayGeometry& geometry, const ElementPatternModel& model,
                        const ExcitationVector& excitation, const Vec3& u) {
  const double k = geometry.wavenumber();
  const auto positions = geometry.element_positions();
  const auto boresights = geometry.element_boresights();
  Complex f{};
  for (int n = 0; n < geometry.n_elements(); ++n) {
    const double g = detail::element_gain_unchecked(model, boresights[n], u);
    if (g == 0.0) continue;
    f += excitation[n] * g * std::polar(1.0, k * dot(positions[n], u));
  }
  return f;
}

double to_dbi(double intensity, double total) {
  const double d = 4.0 * kPi * intensity / total;
  return d > 0.0 ? std::max(kFloorDbi, 10.0 * std::log10(d)) : kFloorDbi;
}

void require_directivity_grid(const RadiationPattern& pattern) {
  if (pattern.n_theta() < kMinDirectivityTheta || pattern.n_phi() < kMinDirectivityPhi) {
    throw InvalidArgument("directivity needs at least " + std::to_string(kMinDirectivityTheta) +
                          " x " + std::to_string(kMinDirectivityPhi) + " samples, got " +
                          std::to_string(pattern.n_theta()) + " x " +
                          std::to_string(pattern.n_phi()));
  }
}

double checked_total(const RadiationPattern& pattern) {
  const double total = total_radiated_power(pattern);
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw DegeneratePattern("pattern radiates no power (all-zero excitation?)");
  }
  return total;
}

// Vertex of the parabola through (x0,y0), (x1,y1), (x2,y2); x1 is the
// middle sample. Returns x1 when the three points are not strictly concave.
std::pair<double, double> parabola_vertex(double x0, double y0, double x1, double y1, double x2,
                                          double y2) {
  const double d0 = x0 - x1;
  const double d2 = x2 - x1;
  // y = y1 + b t + a t^2 with t = x - x1
  const double denom = d0 * d2 * (d0 - d2);
  if (denom == 0.0) return {x1, y1};
  const double a = (d2 * (y0 - y1) - d0 * (y2 - y1)) / denom;
  const double b = (d0 * d0 * (y2 - y1) - d2 * d2 * (y0 - y1)) / denom;
  if (!(a < 0.0)) return {x1, y1};
  const double t = std::clamp(-b / (2.0 * a), std::min(d0, d2), std::max(d0, d2));
  return {x1 + t, y1 + b * t + a * t * t};
}

struct RefinedPeak {
  double theta;
  double phi;
  double intensity;
};

// Quadratic surface fit of |F|^2 over the 3 x 3 neighbourhood of (i, j).
// Falls back to a phi-only parabola on the first/last theta row.
RefinedPeak refine_peak(const RadiationPattern& p, std::size_t i, std::size_t j) {
  const std::size_t nt = p.n_theta();
  const std::size_t np = p.n_phi();
  const auto& theta = p.theta();
  const auto& phi = p.phi();
  auto intensity = [&](std::size_t a, std::size_t b) { return std::norm(p.at(a, b)); };
  auto phi_offset = [&](std::ptrdiff_t dj) {
    const std::size_t jj = (j + np + dj) % np;
    return angle_difference(phi[jj], phi[j]);
  };

  const RefinedPeak grid_peak{theta[i], phi[j], intensity(i, j)};
  if (np < 3) return grid_peak;

  RefinedPeak candidate = grid_peak;
  if (i == 0 || i + 1 == nt) {
    const auto [t, v] = parabola_vertex(phi_offset(-1), intensity(i, (j + np - 1) % np), 0.0,
                                        intensity(i, j), phi_offset(1), intensity(i, (j + 1) % np));
    candidate = {theta[i], phi[j] + t, v};
  } else {
    Eigen::Matrix<double, 9, 6> a;
    Eigen::Matrix<double, 9, 1> y;
    int row = 0;
    for (int di = -1; di <= 1; ++di) {
      for (int dj = -1; dj <= 1; ++dj, ++row) {
        const double x = theta[i + di] - theta[i];
        const double z = phi_offset(dj);
        a.row(row) << 1.0, x, z, x * x, x * z, z * z;
        y(row) = intensity(i + di, (j + np + dj) % np);
      }
    }
    const Eigen::Matrix<double, 6, 1> c = a.colPivHouseholderQr().solve(y);
    Eigen::Matrix2d hessian;
    hessian << 2.0 * c(3), c(4), c(4), 2.0 * c(5);
    const double det = hessian.determinant();
    if (hessian(0, 0) < 0.0 && det > 0.0) {
      const Eigen::Vector2d step = hessian.ldlt().solve(Eigen::Vector2d(-c(1), -c(2)));
      const double dt_max = std::max(theta[i + 1] - theta[i], theta[i] - theta[i - 1]);
      const double dp_max = std::max(std::abs(phi_offset(1)), std::abs(phi_offset(-1)));
      if (std::abs(step(0)) <= dt_max && std::abs(step(1)) <= dp_max) {
        const double x = step(0);
        const double z = step(1);
        const double v = c(0) + c(1) * x + c(2) * z + c(3) * x * x + c(4) * x * z + c(5) * z * z;
        candidate = {theta[i] + x, phi[j] + z, v};
      }
    }
  }
  if (candidate.theta < 0.0 || candidate.theta > kPi) return grid_peak;

  if (p.source()) {
    const Direction d(candidate.theta, candidate.phi);
    candidate.intensity = std::norm((*p.source())(d));
  }
  return candidate.intensity >= grid_peak.intensity ? candidate : grid_peak;
}

std::size_t equator_row(const RadiationPattern& p) {
  const auto theta = p.theta();
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (std::abs(theta[i] - 0.5 * kPi) < 1e-9) return i;
  }
  throw InvalidArgument("pattern grid has no theta = 90 deg row for azimuth-cut analysis");
}

}  // namespace

Complex total_field(const ArrayGeometry& geometry, const ElementPatternModel& model,
                    const ExcitationVector& excitation, const Direction& direction) {
  require_length(excitation, geometry);
  return field_unchecked(geometry, model, excitation, direction.unit_vector());
}

RadiationPattern::RadiationPattern(SphereGrid grid, std::vector<Complex> values,
                                   std::optional<FieldSource> source)
    : grid_(std::move(grid)), values_(std::move(values)), source_(std::move(source)) {
  if (grid_.theta_weights.size() != grid_.theta.size() ||
      grid_.phi_weights.size() != grid_.phi.size()) {
    throw InvalidArgument("sphere grid weights do not match its samples");
  }
  if (values_.size() != grid_.theta.size() * grid_.phi.size()) {
    throw InvalidArgument("pattern values do not match the grid dimensions");
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvalidArgument("pattern values must be finite");
    }
  }
}

RadiationPattern sample_pattern(const ArrayGeometry& geometry, const ElementPatternModel& model,
                                const ExcitationVector& excitation, const SphereGrid& grid) {
  require_length(excitation, geometry);
  model.validate();
  const std::size_t nt = grid.theta.size();
  const std::size_t np = grid.phi.size();
  if (nt == 0 || np == 0) throw InvalidArgument("pattern grid is empty");

  std::vector<Complex> values(nt * np);
  parallel_for(nt * np, [&](std::size_t idx) {
    const Direction d(grid.theta[idx / np], grid.phi[idx % np]);
    values[idx] = field_unchecked(geometry, model, excitation, d.unit_vector());
  });
  return RadiationPattern(grid, std::move(values), FieldSource{geometry, model, excitation});
}

RadiationPattern sample_pattern(const ArrayGeometry& geometry, const ElementPatternModel& model,
                                const ExcitationVector& excitation,
                                std::span<const double> theta_grid,
                                std::span<const double> phi_grid) {
  return sample_pattern(geometry, model, excitation,
                        SphereGrid::from_samples(theta_grid, phi_grid));
}

RadiationPattern sample_default_pattern(const ArrayGeometry& geometry,
                                        const ElementPatternModel& model,
                                        const ExcitationVector& excitation) {
  return sample_pattern(geometry, model, excitation,
                        SphereGrid::gauss_legendre(kDefaultThetaSamples, kDefaultPhiSamples));
}

double total_radiated_power(const RadiationPattern& pattern) {
  const auto& g = pattern.grid();
  double total = 0.0;
  for (std::size_t i = 0; i < pattern.n_theta(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < pattern.n_phi(); ++j) {
      row += std::norm(pattern.at(i, j)) * g.phi_weights[j];
    }
    total += row * g.theta_weights[i];
  }
  return total;
}

DirectivityReport directivity(const RadiationPattern& pattern) {
  require_directivity_grid(pattern);
  const double total = checked_total(pattern);

  std::size_t best = 0;
  double best_value = -1.0;
  const auto values = pattern.values();
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    const double v = std::norm(values[idx]);
    if (v > best_value) {
      best_value = v;
      best = idx;
    }
  }
  const RefinedPeak peak = refine_peak(pattern, best / pattern.n_phi(), best % pattern.n_phi());
  return {to_dbi(peak.intensity, total), Direction(peak.theta, peak.phi), total};
}

DirectivityReport directivity(const RadiationPattern& pattern, const Direction& direction) {
  require_directivity_grid(pattern);
  const double total = checked_total(pattern);
  if (pattern.source()) {
    return {to_dbi(std::norm((*pattern.source())(direction)), total), direction, total};
  }
  const auto theta = pattern.theta();
  const auto phi = pattern.phi();
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (std::abs(theta[i] - direction.theta()) > 1e-9) continue;
    for (std::size_t j = 0; j < phi.size(); ++j) {
      if (std::abs(angle_difference(phi[j], direction.phi())) <= 1e-9) {
        return {to_dbi(std::norm(pattern.at(i, j)), total), direction, total};
      }
    }
  }
  throw InvalidArgument("direction is not a grid node and the pattern has no field source");
}

std::vector<BeamPeak> find_beam_peaks(const RadiationPattern& pattern, double min_prominence_db,
                                      double max_below_strongest_db) {
  if (!(min_prominence_db > 0.0)) throw InvalidArgument("min_prominence_dB must be positive");
  if (!(max_below_strongest_db > 0.0)) {
    throw InvalidArgument("max_below_strongest_dB must be positive");
  }
  const std::size_t row = equator_row(pattern);
  const double total = total_radiated_power(pattern);
  if (!(total > 0.0)) return {};

  const std::size_t np = pattern.n_phi();
  if (np < 3) return {};
  const auto phi = pattern.phi();
  std::vector<double> level(np);
  for (std::size_t j = 0; j < np; ++j) level[j] = to_dbi(std::norm(pattern.at(row, j)), total);
  const double strongest = *std::max_element(level.begin(), level.end());

  auto at = [&](std::ptrdiff_t j) { return level[(j % static_cast<std::ptrdiff_t>(np) + np) % np]; };

  std::vector<BeamPeak> peaks;
  for (std::size_t j = 0; j < np; ++j) {
    const auto sj = static_cast<std::ptrdiff_t>(j);
    // strict on the left so a flat top is reported once
    if (!(level[j] > at(sj - 1) && level[j] >= at(sj + 1))) continue;
    if (level[j] < strongest - max_below_strongest_db) continue;

    double left_min = level[j];
    for (std::ptrdiff_t step = 1; step < static_cast<std::ptrdiff_t>(np); ++step) {
      const double v = at(sj - step);
      if (v > level[j]) break;
      left_min = std::min(left_min, v);
    }
    double right_min = level[j];
    for (std::ptrdiff_t step = 1; step < static_cast<std::ptrdiff_t>(np); ++step) {
      const double v = at(sj + step);
      if (v > level[j]) break;
      right_min = std::min(right_min, v);
    }
    const double prominence = level[j] - std::max(left_min, right_min);
    if (prominence < min_prominence_db) continue;

    const std::size_t jl = (j + np - 1) % np;
    const std::size_t jr = (j + 1) % np;
    auto [phi_peak, level_peak] =
        parabola_vertex(phi[j] + angle_difference(phi[jl], phi[j]), level[jl], phi[j], level[j],
                        phi[j] + angle_difference(phi[jr], phi[j]), level[jr]);
    if (pattern.source()) {
      const double exact = to_dbi(std::norm((*pattern.source())(Direction(0.5 * kPi, phi_peak))), total);
      if (exact >= level[j]) {
        level_peak = exact;
      } else {
        phi_peak = phi[j];
        level_peak = level[j];
      }
    }
    peaks.push_back({Direction(0.5 * kPi, phi_peak), level_peak, prominence});
  }
  std::sort(peaks.begin(), peaks.end(),
            [](const BeamPeak& a, const BeamPeak& b) { return a.level_dbi > b.level_dbi; });
  return peaks;
}

Complex bessel_mode_reference(int m, double ka, double phi) {
  if (std::abs(m) > 16 || !(ka > 0.0) || ka > 20.0) {
    throw RangeError("bessel_mode_reference is validated for |m| <= 16 and 0 < ka <= 20");
  }
  return root_of_unity(m, 4) * bessel_j(m, ka) * std::polar(1.0, m * phi);
}

}  // namespace carray
