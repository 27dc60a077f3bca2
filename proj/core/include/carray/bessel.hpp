// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#pragma once

namespace carray {

/// Bessel function of the first kind J_n(x) for integer order.
///
/// Miller's backward recurrence normalised with J_0 + 2*sum J_2k = 1, which
/// is stable for every order and argument. Absolute error is a few ulp of
/// max|J| (about 1e-16) for |n| <= 60, |x| <= 60.
double bessel_j(int order, double x);

}  // namespace carray
