// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#pragma once

#include <string>
#include <string_view>

#include "carray/geometry.hpp"

namespace carray {

enum class ElementKind { isotropic, cosine_boresight, dual_lobe };

/// Analytic amplitude pattern of one array element.
///
///   isotropic         g = 1
///   cosine_boresight  g = max(0, u.b)^q_radial
///   dual_lobe         g = max(0, u.b)^q_radial + beta * max(0, u.z)^q_zenith
///
/// b is the element boresight (radially outward in the ring). The dual-lobe
/// form models a patch that radiates both along its own normal and along
/// the array axis. The back half-space of each lobe is clipped to zero.
struct ElementPatternModel {
  ElementKind kind = ElementKind::dual_lobe;
  double q_radial = 1.0;
  double q_zenith = 1.0;
  double beta = 0.25;

  static ElementPatternModel isotropic() { return {ElementKind::isotropic, 0.0, 0.0, 0.0}; }
  static ElementPatternModel cosine(double q_radial) {
    return {ElementKind::cosine_boresight, q_radial, 0.0, 0.0};
  }
  static ElementPatternModel dual_lobe(double q_radial, double q_zenith, double beta) {
    return {ElementKind::dual_lobe, q_radial, q_zenith, beta};
  }
  static ElementPatternModel default_model() { return {}; }

  /// Throws InvalidArgument on negative or non-finite parameters.
  void validate() const;

  /// Upper bound of g over the sphere.
  double max_gain() const;

  friend bool operator==(const ElementPatternModel&, const ElementPatternModel&) = default;
};

/// Config spelling: "isotropic" | "cosine" | "dual_lobe".
std::string_view to_string(ElementKind kind);
ElementKind parse_element_kind(std::string_view name);

/// Gain amplitude toward `direction` for an element facing `boresight`.
/// Both vectors must be unit length within 1e-9.
double element_gain(const ElementPatternModel& model, const Vec3& boresight,
                    const Vec3& direction);

namespace detail {
// No unit-norm checks; for inner loops that build their own unit vectors.
double element_gain_unchecked(const ElementPatternModel& model, const Vec3& boresight,
                              const Vec3& direction);
}  // namespace detail

}  // namespace carray
