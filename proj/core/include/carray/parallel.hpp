// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The carray Authors

#pragma once

#include <cstddef>
#include <functional>

namespace carray {

/// Worker count for grid evaluation: CARRAY_THREADS when set, otherwise
/// the hardware concurrency. Throws InvalidArgument if CARRAY_THREADS is
/// set to anything but a positive integer.
std::size_t thread_count();

/// Calls body(i) for i in [0, count), split into contiguous blocks across
/// thread_count() workers. Each index is visited exactly once, so results
/// written to per-index slots are independent of the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace carray
