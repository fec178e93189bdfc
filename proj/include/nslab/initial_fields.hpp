#pragma once

#include <cstdint>

#include "nslab/field.hpp"

namespace nslab {

/// Taylor-Green vortex A (sin x1 cos x2 cos x3, -cos x1 sin x2 cos x3, 0);
/// divergence-free by construction.
VectorField taylor_green(const Grid3& grid, double amplitude);

/// Single decaying mode (0, 0, A sin x1); an exact solution of the viscous
/// dynamics since its advection term vanishes identically.
VectorField single_mode(const Grid3& grid, double amplitude);

/// Seeded band-limited random field with spectral amplitude ~ |k|^slope,
/// Leray-projected and mean-free, scaled so that rms equals `amplitude`.
/// The band keeps |k_i| <= max(1, n_i/4), safely inside the dealias mask.
VectorField random_divfree(const Grid3& grid, std::uint64_t seed, double slope = -2.0,
                           double amplitude = 1.0);

}  // namespace nslab
