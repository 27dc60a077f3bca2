// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#include "carray/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "carray/error.hpp"
#include "carray/geometry.hpp"

namespace carray {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  const double pn = (n == 0) ? 1.0 : p1;
  const double pnm1 = (n == 1) ? 1.0 : p0;
  return {pn, n * (x * pn - pnm1) / (x * x - 1.0)};
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("Gauss-Legendre order must be >= 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [pn, dp] = legendre_with_derivative(n, x);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre_with_derivative(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

SphereGrid SphereGrid::gauss_legendre(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1) throw InvalidArgument("grid sizes must be positive");
  const QuadratureRule rule = carray::gauss_legendre(n_theta);
  SphereGrid g;
  g.theta.resize(n_theta);
  g.theta_weights.resize(n_theta);
  // theta ascending <=> cos(theta) descending
  for (int i = 0; i < n_theta; ++i) {
    const int src = n_theta - 1 - i;
    g.theta[i] = std::acos(rule.nodes[src]);
    g.theta_weights[i] = rule.weights[src];
  }
  g.phi.resize(n_phi);
  g.phi_weights.assign(n_phi, kTwoPi / n_phi);
  for (int j = 0; j < n_phi; ++j) g.phi[j] = (j + 0.5) * kTwoPi / n_phi;
  return g;
}

namespace {

void require_increasing(std::span<const double> v, const char* name) {
  if (v.empty()) throw InvalidArgument(std::string(name) + " grid is empty");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) throw InvalidArgument(std::string(name) + " grid has non-finite values");
    if (i > 0 && !(v[i] > v[i - 1])) {
      throw InvalidArgument(std::string(name) + " grid must be strictly increasing");
    }
  }
}

}  // namespace

SphereGrid SphereGrid::from_samples(std::span<const double> theta, std::span<const double> phi) {
  require_increasing(theta, "theta");
  require_increasing(phi, "phi");
  if (theta.front() < 0.0 || theta.back() > kPi + 1e-12) {
    throw InvalidArgument("theta grid must lie within [0, pi]");
  }
  if (phi.front() < 0.0 || phi.back() >= kTwoPi) {
    throw InvalidArgument("phi grid must lie within [0, 2*pi)");
  }
  SphereGrid g;
  g.theta.assign(theta.begin(), theta.end());
  g.phi.assign(phi.begin(), phi.end());

  const std::size_t nt = theta.size();
  g.theta_weights.resize(nt);
  for (std::size_t i = 0; i < nt; ++i) {
    const double lo = (i == 0) ? 0.0 : 0.5 * (theta[i - 1] + theta[i]);
    const double hi = (i + 1 == nt) ? kPi : 0.5 * (theta[i] + theta[i + 1]);
    g.theta_weights[i] = std::cos(lo) - std::cos(std::min(hi, kPi));
  }

  const std::size_t np = phi.size();
  g.phi_weights.resize(np);
  if (np == 1) {
    g.phi_weights[0] = kTwoPi;
  } else {
    for (std::size_t j = 0; j < np; ++j) {
      const double prev = (j == 0) ? phi[np - 1] - kTwoPi : phi[j - 1];
      const double next = (j + 1 == np) ? phi[0] + kTwoPi : phi[j + 1];
      g.phi_weights[j] = 0.5 * (next - prev);
    }
  }
  return g;
}

}  // namespace carray
