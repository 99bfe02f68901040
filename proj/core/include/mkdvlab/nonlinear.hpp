#pragma once

#include "mkdvlab/grid.hpp"

namespace mkdv {

/// Largest wavenumber kept by the 2/3 rule: K = floor((n - 1) / 3), so the
/// cube of a field supported in |k| <= K stays below n in wavenumber.
int dealias_cutoff(const GridSpec& grid) noexcept;

/// Zeroes every coefficient with |k| > dealias_cutoff.
SpectralField truncate_two_thirds(const SpectralField& spec);

/// Spectrum of u^3 evaluated on a twice-refined grid, exact for every |k| < n/2.
SpectralField exact_cube_spectrum(const SpectralField& u);

/// Nonlinear source used by the solver and the remainder functionals.
///
/// dealias = true: truncate(exact cube of truncate(u)).
/// dealias = false: plain pointwise cube on the grid (aliased).
SpectralField cube_spectrum(const SpectralField& u, bool dealias);

}  // namespace mkdv
