#include "coneham/sampling.hpp"

#include <cmath>
#include <numbers>

namespace coneham {

namespace {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

GridFunction draw_family(const Grid& grid, Rng& rng, double amp, int family) {
  using std::numbers::pi;
  switch (family) {
    case 0: {  // trigonometric sum
      const int terms = uniform_int(rng, 1, 6);
      const double offset = uniform(rng, -amp, amp);
      std::vector<double> a(terms), phase(terms);
      for (int k = 0; k < terms; ++k) {
        a[k] = uniform(rng, -amp, amp) / (k + 1);
        phase[k] = uniform(rng, 0.0, 2.0 * pi);
      }
      return GridFunction::sample(grid, [&](double t) {
        double v = offset;
        for (int k = 0; k < terms; ++k) v += a[k] * std::sin((k + 1) * pi * t + phase[k]);
        return v;
      });
    }
    case 1: {  // hat on a random support plus offset
      const double peak = uniform(rng, 0.0, 1.0);
      const double width = uniform(rng, 0.02, 0.6);
      const double height = uniform(rng, -2.0 * amp, 2.0 * amp);
      const double offset = uniform(rng, -0.5 * amp, 0.5 * amp);
      return GridFunction::sample(grid, [=](double t) {
        return offset + height * std::max(0.0, 1.0 - std::abs(t - peak) / width);
      });
    }
    case 2: {  // rough nodal noise
      std::vector<double> v(grid->size());
      for (double& x : v) x = uniform(rng, -amp, amp);
      return GridFunction(grid, std::move(v));
    }
    case 3:  // constant
      return GridFunction::constant(grid, uniform(rng, -amp, amp));
    case 4: {  // cubic
      const double c0 = uniform(rng, -amp, amp), c1 = uniform(rng, -amp, amp);
      const double c2 = uniform(rng, -amp, amp), c3 = uniform(rng, -amp, amp);
      return GridFunction::sample(grid, [=](double t) { return c0 + t * (c1 + t * (c2 + t * c3)); });
    }
    default: {  // smoothed step
      const double at = uniform(rng, 0.1, 0.9);
      const double slope = uniform(rng, 2.0, 80.0);
      const double lo = uniform(rng, -amp, amp), hi = uniform(rng, -amp, amp);
      return GridFunction::sample(grid, [=](double t) {
        return lo + (hi - lo) * 0.5 * (1.0 + std::tanh(slope * (t - at)));
      });
    }
  }
}

}  // namespace

GridFunction random_function(const Grid& grid, Rng& rng, double amplitude) {
  return draw_family(grid, rng, amplitude, uniform_int(rng, 0, 5));
}

GridFunction random_smooth_function(const Grid& grid, Rng& rng, double amplitude) {
  static constexpr int kFamilies[] = {0, 1, 4, 5};
  return draw_family(grid, rng, amplitude, kFamilies[uniform_int(rng, 0, 3)]);
}

FunctionSampler generic_sampler(Grid grid, double amplitude) {
  return [grid = std::move(grid), amplitude](Rng& rng) { return random_function(grid, rng, amplitude); };
}

FunctionSampler smooth_sampler(Grid grid, double amplitude) {
  return [grid = std::move(grid), amplitude](Rng& rng) {
    return random_smooth_function(grid, rng, amplitude);
  };
}

GridFunction green_smooth(const Grid& grid, std::span<const double> density) {
  const std::size_t n = grid->size();
  if (density.size() != n) throw Error(ErrorKind::shape, "green_smooth: density size mismatch");
  const auto s = grid->nodes();
  const auto w = grid->weights();
  // u(t_i) = (1 - t_i) Σ_{s_j <= t_i} w_j s_j d_j + t_i Σ_{s_j > t_i} w_j (1 - s_j) d_j
  std::vector<double> left(n + 1, 0.0), right(n + 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) left[j + 1] = left[j] + w[j] * s[j] * density[j];
  for (std::size_t j = n; j-- > 0;) right[j] = right[j + 1] + w[j] * (1.0 - s[j]) * density[j];
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = (1.0 - s[i]) * left[i + 1] + s[i] * right[i + 1];
  return GridFunction(grid, std::move(u));
}

GridFunction random_green_smooth(const Grid& grid, Rng& rng, double amplitude) {
  using std::numbers::pi;
  const std::size_t n = grid->size();
  std::vector<double> d(n, 0.0);
  const auto w = grid->weights();
  switch (uniform_int(rng, 0, 3)) {
    case 0:
      for (double& x : d) x = uniform(rng, 0.0, 1.0);
      break;
    case 1: {  // single spike: a hat function after smoothing
      const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
      d[j] = 1.0 / w[j];
      break;
    }
    case 2: {
      const int spikes = uniform_int(rng, 2, 6);
      for (int k = 0; k < spikes; ++k) {
        const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1));
        d[j] += uniform(rng, 0.0, 1.0) / w[j];
      }
      break;
    }
    default: {
      const double freq = uniform(rng, 0.5, 6.0), phase = uniform(rng, 0.0, 2.0 * pi);
      for (std::size_t i = 0; i < n; ++i) d[i] = 1.0 + std::sin(freq * pi * grid->node(i) + phase);
      break;
    }
  }
  const double scale = amplitude * uniform(rng, 0.05, 8.0);
  for (double& x : d) x *= scale;
  return green_smooth(grid, d);
}

}  // namespace coneham
