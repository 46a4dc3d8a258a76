#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coneham/cones.hpp"
#include "coneham/kernels.hpp"

namespace coneham {

/// u = Tu with Tu(t) = ∫ k(t,s) g(s) f(s, u(s)) ds, discretized by Nyström
/// on a fixed grid. Immutable; the weighted kernel matrix is built once.
class HammersteinProblem {
 public:
  struct Parts {
    Kernel kernel;
    ScalarFn weight;           // g(s) >= 0
    BivariateFn nonlinearity;  // f(t, v) >= 0
    ConeSpec cone;
    Functional beta;
    Functional gamma;
    ScalarFn reference;  // e of (C7)
    Grid grid;
    // Source text for reports; optional.
    std::string nonlinearity_text;
    std::string weight_text;
    std::string reference_text;
  };

  explicit HammersteinProblem(Parts parts);

  const Kernel& kernel() const noexcept { return parts_.kernel; }
  const ScalarFn& weight() const noexcept { return parts_.weight; }
  const BivariateFn& nonlinearity() const noexcept { return parts_.nonlinearity; }
  const ConeSpec& cone() const noexcept { return parts_.cone; }
  const Functional& alpha() const noexcept { return parts_.cone.alpha(); }
  const Functional& beta() const noexcept { return parts_.beta; }
  const Functional& gamma() const noexcept { return parts_.gamma; }
  const ScalarFn& reference() const noexcept { return parts_.reference; }
  const Grid& grid() const noexcept { return parts_.grid; }
  const Parts& parts() const noexcept { return parts_; }

  const GridFunction& weight_values() const noexcept { return g_values_; }
  GridFunction reference_values() const;

  /// The same problem discretized on another grid.
  HammersteinProblem on_grid(Grid grid) const;

  /// f(s_j, u_j) at every node; non-finite values raise nonlinearity-domain.
  std::vector<double> nonlinearity_values(const GridFunction& u) const;

  GridFunction apply_T(const GridFunction& u, Exec exec = default_exec()) const;

 private:
  Parts parts_;
  GridFunction g_values_;
  std::vector<double> matrix_;  // w_j k(t_i, s_j) g(s_j), row-major
};

/// -u'' = 4/(|u|+4), u(0) = u(1) = 0 as a Hammerstein problem on the cone of
/// concave functions vanishing at the ends, β = ‖·‖₂, γ = ∫, e = t(1-t).
HammersteinProblem dirichlet_example_problem(Grid grid);

inline GridFunction apply_T(const HammersteinProblem& p, const GridFunction& u) { return p.apply_T(u); }

struct C4Row {
  double r = 0.0;
  double sup = 0.0;  // empirical φ_r bound
  double min = 0.0;
  int nonfinite = 0;
  int negative = 0;
};

struct C4Report {
  std::vector<C4Row> rows;
  bool passed = false;
};

/// Samples f over the t-grid × [-r, r] (2·samples+1 values of v).
C4Report check_C4(const HammersteinProblem& p, const std::vector<double>& r_list, int samples = 64);

struct C5C6Report {
  int trials = 0;
  int violations_alpha = 0;
  int violations_beta = 0;
  int violations_gamma = 0;
  int invariance_violations = 0;  // membership(Tu) == outside
  double worst_alpha = 0.0;  // min of α(Tu) - ∫ψ_α g f
  double worst_beta = 0.0;   // min of ∫ψ_β g f - β(Tu)
  double worst_gamma = 0.0;  // min of γ(Tu) - ∫ψ_γ g f
  double gamma_equality_gap = 0.0;  // max |γ(Tu) - ∫ψ_γ g f|
  double psi_beta_integral = 0.0;   // ∫ψ_β g on the grid
  double psi_gamma_integral = 0.0;
  bool positivity = false;
  bool passed() const {
    return violations_alpha == 0 && violations_beta == 0 && violations_gamma == 0 && positivity;
  }
};

inline constexpr double kOperatorTol = 1e-7;

C5C6Report check_C5_C6(const HammersteinProblem& p, int trials, std::uint64_t seed);

struct C7Report {
  Membership membership;
  double sup = 0.0;
  double gamma_e = 0.0;
  bool passed = false;
};

C7Report check_C7(const HammersteinProblem& p);

/// Certified one-sided bound of sup/inf of f(t,u(t))/ρ over a level set,
/// taken over t-grid × the cone's pointwise range envelope.
struct LevelConstant {
  double value = 0.0;
  double t = 0.0;  // arg-extremum
  double v = 0.0;
  Interval range;
};

inline constexpr int kLevelGridPoints = 1024;

LevelConstant f_upper(const HammersteinProblem& p, double rho, int v_points = kLevelGridPoints);
LevelConstant f_lower(const HammersteinProblem& p, double rho, int v_points = kLevelGridPoints);

enum class IndexKind { index1, index0 };
enum class VerdictStatus { holds, fails, inconclusive_numerical };
const char* to_string(IndexKind kind);
const char* to_string(VerdictStatus status);

struct IndexVerdict {
  double rho = 0.0;
  IndexKind kind = IndexKind::index1;
  LevelConstant level;
  PsiIntegral psi;
  double product = 0.0;
  double margin = 0.0;  // 1e-9 plus the propagated quadrature error
  VerdictStatus status = VerdictStatus::fails;
  std::string note;
  bool holds() const { return status == VerdictStatus::holds; }
};

inline constexpr double kIndexMargin = 1e-9;

/// f^ρ · ∫ψ_β g < 1.
IndexVerdict check_index1(const HammersteinProblem& p, double rho);
/// f_ρ · ∫ψ_γ g > 1; also requires (C7).
IndexVerdict check_index0(const HammersteinProblem& p, double rho);

}  // namespace coneham
