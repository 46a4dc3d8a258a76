#include "coneham/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include <omp.h>

namespace coneham {

namespace {
std::atomic<Exec> g_default_exec{Exec::parallel};

// Value of the interpolant at the midpoint of nodes i <= j on a uniform grid:
// node (i+j)/2 when i+j is even, otherwise halfway between two nodes.
inline double uniform_midpoint(std::span<const double> u, std::size_t i, std::size_t j) {
  const std::size_t s = i + j;
  if ((s & 1U) == 0) return u[s / 2];
  return 0.5 * (u[s / 2] + u[s / 2 + 1]);
}

double gap_row_uniform(std::span<const double> u, std::size_t i) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = i; j < u.size(); ++j)
    best = std::min(best, uniform_midpoint(u, i, j) - 0.5 * (u[i] + u[j]));
  return best;
}

double gap_row_general(const Quadrature& q, std::span<const double> u, std::size_t i) {
  double best = std::numeric_limits<double>::infinity();
  const auto t = q.nodes();
  for (std::size_t j = i; j < u.size(); ++j)
    best = std::min(best, q.interpolate(u, 0.5 * (t[i] + t[j])) - 0.5 * (u[i] + u[j]));
  return best;
}
}  // namespace

Exec default_exec() noexcept { return g_default_exec.load(std::memory_order_relaxed); }
void set_default_exec(Exec exec) noexcept { g_default_exec.store(exec, std::memory_order_relaxed); }
int max_threads() noexcept { return omp_get_max_threads(); }

void matvec(std::span<const double> a, std::size_t rows, std::size_t cols,
            std::span<const double> x, std::span<double> y, Exec exec) {
  if (a.size() != rows * cols || x.size() != cols || y.size() != rows)
    throw Error(ErrorKind::shape, "matvec: inconsistent dimensions");
  const auto n = static_cast<long long>(rows);
  auto row = [&](long long i) {
    const double* ai = a.data() + static_cast<std::size_t>(i) * cols;
    double sum = 0.0;
    for (std::size_t j = 0; j < cols; ++j) sum += ai[j] * x[j];
    y[static_cast<std::size_t>(i)] = sum;
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) row(i);
  } else {
    for (long long i = 0; i < n; ++i) row(i);
  }
}

double midpoint_gap(const Quadrature& q, std::span<const double> u, Exec exec) {
  if (u.size() != q.size()) throw Error(ErrorKind::shape, "midpoint_gap: size mismatch");
  const auto n = static_cast<long long>(u.size());
  double best = std::numeric_limits<double>::infinity();
  const bool uniform = q.uniform();
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
    for (long long i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      best = std::min(best, uniform ? gap_row_uniform(u, ui) : gap_row_general(q, u, ui));
    }
  } else {
    for (long long i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      best = std::min(best, uniform ? gap_row_uniform(u, ui) : gap_row_general(q, u, ui));
    }
  }
  return best;
}

}  // namespace coneham
