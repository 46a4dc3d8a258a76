#pragma once

#include <vector>

#include "coneham/certify.hpp"

namespace coneham {

struct Solution {
  GridFunction u;
  double residual_sup = 0.0;  // ‖u - Tu‖_sup
  int iterations = 0;         // applications of T
  bool converged = false;
  std::vector<double> increments;  // ‖u_{k+1} - u_k‖_sup per step
};

/// u ← (1-θ)u + θ·Tu until ‖u - Tu‖_sup <= tol. Non-convergence is reported
/// through `converged`, not thrown.
Solution picard_solve(const HammersteinProblem& p, const GridFunction& u0, double tol, int max_iter,
                      double damping = 1.0);

struct LocalizationReport {
  double alpha_margin = 0.0;
  double beta_value = 0.0;
  double gamma_value = 0.0;
  bool in_annulus = false;
  Annulus annulus;
  double tol = 0.0;
};

LocalizationReport localize(const HammersteinProblem& p, const Solution& sol, const Annulus& annulus,
                            double tol = 1e-9);
/// The (S1) set: γ(u) >= ρ1 and β(u) <= ρ2.
LocalizationReport localize(const HammersteinProblem& p, const Solution& sol, double rho1, double rho2,
                            double tol = 1e-9);

/// Solves -u'' = f(t,u), u(0) = u(1) = 0 by RK4 shooting on the initial
/// slope. Independent of the quadrature path; only valid when the kernel is
/// the Dirichlet Green kernel and g ≡ 1.
GridFunction shooting_oracle(const HammersteinProblem& p, double tol);
bool oracle_available(const HammersteinProblem& p);

struct CrossValidation {
  double sup_difference = 0.0;
  double tol = 0.0;
  bool passed = false;
};

CrossValidation cross_validate(const Solution& sol, const GridFunction& oracle_u, double tol);

}  // namespace coneham
