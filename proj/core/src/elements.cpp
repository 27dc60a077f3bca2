// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#include "carray/elements.hpp"

#include <cmath>
#include <string>

#include "carray/error.hpp"

namespace carray {
namespace {

double lobe(double cosine, double exponent) {
  if (cosine <= 0.0) return 0.0;
  if (exponent == 1.0) return cosine;
  return std::pow(cosine, exponent);
}

void require_unit(const Vec3& v, const char* what) {
  if (std::abs(norm(v) - 1.0) > 1e-9) {
    throw InvalidArgument(std::string(what) + " must be a unit vector");
  }
}

}  // namespace

void ElementPatternModel::validate() const {
  auto check = [](double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
      throw InvalidArgument(std::string("element_model.") + name +
                            " must be a finite non-negative number");
    }
  };
  check(q_radial, "q_radial");
  check(q_zenith, "q_zenith");
  check(beta, "beta");
}

double ElementPatternModel::max_gain() const {
  switch (kind) {
    case ElementKind::isotropic:
    case ElementKind::cosine_boresight:
      return 1.0;
    case ElementKind::dual_lobe:
      return 1.0 + beta;
  }
  return 1.0;
}

std::string_view to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::isotropic:
      return "isotropic";
    case ElementKind::cosine_boresight:
      return "cosine";
    case ElementKind::dual_lobe:
      return "dual_lobe";
  }
  return "unknown";
}

ElementKind parse_element_kind(std::string_view name) {
  if (name == "isotropic") return ElementKind::isotropic;
  if (name == "cosine") return ElementKind::cosine_boresight;
  if (name == "dual_lobe") return ElementKind::dual_lobe;
  throw InvalidArgument("unknown element model type \"" + std::string(name) +
                        "\" (expected isotropic, cosine or dual_lobe)");
}

double element_gain(const ElementPatternModel& model, const Vec3& boresight,
                    const Vec3& direction) {
  require_unit(boresight, "boresight");
  require_unit(direction, "direction");
  return detail::element_gain_unchecked(model, boresight, direction);
}

namespace detail {

double element_gain_unchecked(const ElementPatternModel& model, const Vec3& boresight,
                              const Vec3& direction) {
  switch (model.kind) {
    case ElementKind::isotropic:
      return 1.0;
    case ElementKind::cosine_boresight:
      return lobe(dot(direction, boresight), model.q_radial);
    case ElementKind::dual_lobe:
      return lobe(dot(direction, boresight), model.q_radial) +
             model.beta * lobe(direction[2], model.q_zenith);
  }
  return 0.0;
}

}  // namespace detail
}  // namespace carray
