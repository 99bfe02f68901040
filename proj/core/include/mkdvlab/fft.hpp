#pragma once

#include <span>

#include "mkdvlab/grid.hpp"

namespace mkdv::fft {

// Thin wrappers over FFTW real transforms. Plans are created once per size
// under a lock and executed with the new-array interface, so concurrent
// calls from several threads are safe.

/// Unnormalized forward transform: out[k] = sum_j in[j] exp(-2 pi i jk/n), k = 0..n/2.
void forward_real(std::span<const double> in, std::span<Complex> out_half);

/// Unnormalized inverse: out[j] = sum_k c_k exp(+2 pi i jk/n) over the full
/// Hermitian spectrum reconstructed from in_half (k = 0..n/2).
void inverse_real(std::span<const Complex> in_half, std::span<double> out);

}  // namespace mkdv::fft
