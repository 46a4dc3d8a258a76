#pragma once

// Data-parallel inner loops. Every kernel has a serial reference path with
// identical summation order, so both paths return bitwise-equal results.

#include <cstddef>
#include <span>

#include "coneham/grid.hpp"

namespace coneham {

enum class Exec { serial, parallel };

/// Default policy for library calls that do not take one explicitly.
Exec default_exec() noexcept;
void set_default_exec(Exec exec) noexcept;

int max_threads() noexcept;

/// y = A x with A row-major (rows × cols).
void matvec(std::span<const double> a, std::size_t rows, std::size_t cols,
            std::span<const double> x, std::span<double> y, Exec exec = default_exec());

/// min over node pairs (i, j) of u((t_i + t_j)/2) - (u_i + u_j)/2, midpoints
/// evaluated by piecewise-linear interpolation. O(n²).
double midpoint_gap(const Quadrature& q, std::span<const double> u, Exec exec = default_exec());

/// Calls body(i) for i in [0, n). Bodies must write to disjoint state.
template <class Body>
void for_each_index(std::size_t n, Body&& body, Exec exec = default_exec()) {
  const auto count = static_cast<long long>(n);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  }
}

}  // namespace coneham
