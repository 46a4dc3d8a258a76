#include "coneham/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace coneham {

Kernel green_dirichlet() { return Kernel("green_dirichlet", green_dirichlet_value, 1.0); }

GridFunction kernel_column(const Kernel& k, const Grid& grid, double s) {
  return GridFunction::sample(grid, [&](double t) { return k(t, s); });
}

PsiFunction psi(const Functional& alpha, const Kernel& k, const Grid& grid, Exec exec) {
  std::vector<double> values(grid->size());
  for_each_index(
      grid->size(), [&](std::size_t j) { values[j] = alpha(kernel_column(k, grid, grid->node(j))); },
      exec);
  return {GridFunction(grid, std::move(values)), alpha.label()};
}

namespace {
double weighted_psi_sum(const Functional& alpha, const Kernel& k, const ScalarFn& g, const Grid& grid) {
  const PsiFunction p = psi(alpha, k, grid);
  const auto w = grid->weights();
  double total = 0.0;
  for (std::size_t j = 0; j < grid->size(); ++j) total += w[j] * p.values[j] * g(grid->node(j));
  return total;
}
}  // namespace

PsiIntegral psi_integral(const Functional& alpha, const Kernel& k, const ScalarFn& g, const Grid& grid) {
  PsiIntegral out;
  out.coarse = weighted_psi_sum(alpha, k, g, grid);
  out.fine = weighted_psi_sum(alpha, k, g, refine(*grid));
  const double diff = out.fine - out.coarse;
  if (grid->rule() == Rule::trapezoid) {
    out.value = out.fine + diff / 3.0;
    out.error_estimate = std::abs(diff) / 3.0;
  } else {
    out.value = out.fine;
    out.error_estimate = std::abs(diff);
  }
  return out;
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::certified_pass: return "certified-pass";
    case CheckStatus::sampled_pass: return "sampled-pass";
    case CheckStatus::diagnostic: return "diagnostic";
    case CheckStatus::fail: return "fail";
  }
  return "unknown";
}

ModulusReport check_C1(const Kernel& k, const std::vector<double>& deltas, int samples) {
  if (samples < 3) throw Error(ErrorKind::invalid_parameter, "check_C1 needs samples >= 3");
  if (samples % 2 == 0) ++samples;  // keep t = 1/2 on the sample grid
  constexpr int s_samples = 101;
  constexpr int substeps = 4;
  ModulusReport report;
  bool within_bound = true;
  for (double delta : deltas) {
    if (delta < 0.0) throw Error(ErrorKind::invalid_parameter, "check_C1: negative delta");
    double omega = 0.0;
    if (delta > 0.0) {
      for (int a = 0; a < s_samples; ++a) {
        const double s = static_cast<double>(a) / (s_samples - 1);
        for (int b = 0; b < samples; ++b) {
          const double t1 = static_cast<double>(b) / (samples - 1);
          const double k1 = k(t1, s);
          for (int m = 1; m <= substeps; ++m) {
            const double t2 = std::min(1.0, t1 + delta * m / substeps);
            omega = std::max(omega, std::abs(k1 - k(t2, s)));
          }
        }
      }
    }
    ModulusRow row{delta, omega, std::nullopt};
    if (auto bound = k.t_deriv_bound()) {
      row.allowed = *bound * delta;
      if (omega > *row.allowed + 1e-9) within_bound = false;
    }
    report.rows.push_back(row);
  }

  if (k.t_deriv_bound()) {
    report.status = within_bound ? CheckStatus::certified_pass : CheckStatus::fail;
    report.note = within_bound ? "bounded t-derivative" : "sampled modulus exceeds the declared derivative bound";
    return report;
  }
  // Without an analytic bound only a non-decaying modulus is conclusive.
  const ModulusRow* smallest = nullptr;
  const ModulusRow* largest = nullptr;
  for (const auto& row : report.rows) {
    if (row.delta <= 0.0) continue;
    if (!smallest || row.delta < smallest->delta) smallest = &row;
    if (!largest || row.delta > largest->delta) largest = &row;
  }
  if (smallest && largest && smallest != largest && largest->omega > 1e-12 &&
      smallest->omega > 0.5 * largest->omega) {
    report.status = CheckStatus::fail;
    report.note = "modulus of continuity does not decay as delta -> 0";
  } else {
    report.status = CheckStatus::diagnostic;
    report.note = "no derivative bound declared; modulus table is a sampled diagnostic";
  }
  return report;
}

C2C3Report check_C2_C3(const Kernel& k, const GridFunction& g, const Functional& alpha, const Grid& grid) {
  if (g.size() != grid->size()) throw Error(ErrorKind::shape, "check_C2_C3: g not on this grid");
  C2C3Report out{false, 0.0, false, 0.0, false, psi(alpha, k, grid)};
  out.psi_min = out.psi.values.min();
  out.c2_pass = out.psi_min >= -1e-9;
  out.g_min = g.min();

  const auto& q = *grid;
  bool finite = std::isfinite(integrate(q, g));
  std::vector<double> prod(q.size());
  for (std::size_t i = 0; i < q.size() && finite; ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) prod[j] = k(q.node(i), q.node(j)) * g[j];
    finite = std::isfinite(integrate(q, prod));
  }
  if (finite) {
    for (std::size_t j = 0; j < q.size(); ++j) prod[j] = out.psi.values[j] * g[j];
    finite = std::isfinite(integrate(q, prod));
  }
  out.integrals_finite = finite;
  out.c3_pass = out.g_min >= -1e-12 && finite;
  return out;
}

}  // namespace coneham
