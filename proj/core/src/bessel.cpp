// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#include "carray/bessel.hpp"

#include <algorithm>
#include <cmath>

namespace carray {

double bessel_j(int order, double x) {
  if (order < 0) {
    const double j = bessel_j(-order, x);
    return (order % 2 == 0) ? j : -j;
  }
  if (x < 0.0) {
    const double j = bessel_j(order, -x);
    return (order % 2 == 0) ? j : -j;
  }
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;

  // Start well above both the order and the argument so that the
  // minimal solution dominates by the time the recurrence reaches `order`.
  const int reach = std::max(order, static_cast<int>(std::ceil(x)));
  int start = reach + 20 + static_cast<int>(std::sqrt(60.0 * (reach + 1)));
  start += start % 2;

  constexpr double big = 1e250;
  const double two_over_x = 2.0 / x;
  double j_next = 0.0;  // J_{k+1}
  double j_cur = 1.0;  // J_k, arbitrary scale
  double norm_sum = 0.0;
  double result = 0.0;
  for (int k = start; k > 0; --k) {
    const double j_prev = k * two_over_x * j_cur - j_next;  // J_{k-1}
    j_next = j_cur;
    j_cur = j_prev;
    if (std::abs(j_cur) > big) {
      j_cur /= big;
      j_next /= big;
      norm_sum /= big;
      result /= big;
    }
    if (k - 1 == order) result = j_cur;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm_sum += 2.0 * j_cur;
  }
  norm_sum += j_cur;  // J_0 term
  return result / norm_sum;
}

}  // namespace carray
