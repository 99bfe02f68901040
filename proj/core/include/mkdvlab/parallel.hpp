#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

namespace mkdv {

/// Worker count used by parallel_for (defaults to the hardware concurrency).
int thread_count() noexcept;
/// Sets the worker count; values below 1 restore the default.
void set_thread_count(int threads) noexcept;

/// Calls body(i) for i in [0, count) on up to thread_count() workers.
///
/// Indices are split into contiguous chunks. Bodies must only write to
/// per-index storage, so results do not depend on scheduling. The first
/// exception thrown by any body is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Pairwise (binary tree) summation; the order depends only on the length.
double pairwise_sum(std::span<const double> values);
std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);

}  // namespace mkdv
