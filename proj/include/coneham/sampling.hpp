#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>

#include "coneham/grid.hpp"

namespace coneham {

using Rng = std::mt19937_64;
using FunctionSampler = std::function<GridFunction(Rng&)>;

/// Random continuous function drawn from a mixture of families: smooth
/// trigonometric sums, hats, rough nodal noise, constants, cubics and
/// smoothed steps. Values are O(amplitude).
GridFunction random_function(const Grid& grid, Rng& rng, double amplitude = 1.0);

/// Same mixture without the constant family and without nodal noise.
GridFunction random_smooth_function(const Grid& grid, Rng& rng, double amplitude = 1.0);

FunctionSampler generic_sampler(Grid grid, double amplitude = 1.0);
FunctionSampler smooth_sampler(Grid grid, double amplitude = 1.0);

/// t ↦ ∫ k(t,s) w(s) ds with k the Dirichlet Green kernel, by the grid's
/// quadrature. O(n) via prefix sums.
GridFunction green_smooth(const Grid& grid, std::span<const double> density);

/// green_smooth of random nonnegative nodal data (uniform noise, spikes,
/// smooth bumps). The result is nonnegative, concave, zero at 0 and 1.
GridFunction random_green_smooth(const Grid& grid, Rng& rng, double amplitude = 1.0);

}  // namespace coneham
