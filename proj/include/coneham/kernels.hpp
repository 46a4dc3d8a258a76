#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coneham/functionals.hpp"
#include "coneham/parallel.hpp"

namespace coneham {

/// Kernel k(t,s) on [0,1]², optionally with a uniform bound on |∂k/∂t|.
class Kernel {
 public:
  Kernel(std::string label, BivariateFn eval, std::optional<double> t_deriv_bound = std::nullopt)
      : label_(std::move(label)), eval_(std::move(eval)), t_deriv_bound_(t_deriv_bound) {}

  double operator()(double t, double s) const { return eval_(t, s); }
  const std::string& label() const noexcept { return label_; }
  std::optional<double> t_deriv_bound() const noexcept { return t_deriv_bound_; }

 private:
  std::string label_;
  BivariateFn eval_;
  std::optional<double> t_deriv_bound_;
};

/// Green's function of -u'' = h, u(0) = u(1) = 0.
inline double green_dirichlet_value(double t, double s) {
  return s <= t ? s * (1.0 - t) : t * (1.0 - s);
}

Kernel green_dirichlet();

/// The grid function t ↦ k(t, s).
GridFunction kernel_column(const Kernel& k, const Grid& grid, double s);

/// ψ_α(s) = α(k(·,s)) at every node s of the grid.
struct PsiFunction {
  GridFunction values;
  std::string source_functional;
};

PsiFunction psi(const Functional& alpha, const Kernel& k, const Grid& grid, Exec exec = default_exec());

/// ∫ψ_α g on the grid and on its refinement. For the trapezoid rule the
/// value is Richardson-extrapolated (h² error term); error_estimate bounds
/// the error of the finer sum.
struct PsiIntegral {
  double value = 0.0;
  double error_estimate = 0.0;
  double coarse = 0.0;
  double fine = 0.0;
};

PsiIntegral psi_integral(const Functional& alpha, const Kernel& k, const ScalarFn& g, const Grid& grid);

enum class CheckStatus { certified_pass, sampled_pass, diagnostic, fail };
const char* to_string(CheckStatus status);
inline bool passed(CheckStatus s) { return s != CheckStatus::fail; }

struct ModulusRow {
  double delta = 0.0;
  double omega = 0.0;
  std::optional<double> allowed;  // t_deriv_bound · δ
};

/// Empirical modulus of continuity of t ↦ k(t,s), uniformly over sampled s.
struct ModulusReport {
  std::vector<ModulusRow> rows;
  CheckStatus status = CheckStatus::diagnostic;
  std::string note;
};

ModulusReport check_C1(const Kernel& k, const std::vector<double>& deltas, int samples = 401);

struct C2C3Report {
  bool c2_pass = false;
  double psi_min = 0.0;
  bool c3_pass = false;
  double g_min = 0.0;
  bool integrals_finite = false;
  PsiFunction psi;
};

C2C3Report check_C2_C3(const Kernel& k, const GridFunction& g, const Functional& alpha, const Grid& grid);

}  // namespace coneham
