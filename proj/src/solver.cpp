#include "coneham/solver.hpp"

#include <array>
#include <cmath>
#include <cstdint>

#include <boost/math/tools/roots.hpp>

namespace coneham {

Solution picard_solve(const HammersteinProblem& p, const GridFunction& u0, double tol, int max_iter,
                      double damping) {
  if (!(tol > 0.0)) throw Error(ErrorKind::invalid_parameter, "picard_solve needs tol > 0");
  if (!(damping > 0.0 && damping <= 1.0))
    throw Error(ErrorKind::invalid_parameter, "picard_solve needs damping in (0, 1]");
  if (max_iter < 1) throw Error(ErrorKind::invalid_parameter, "picard_solve needs max_iter >= 1");
  if (u0.size() != p.grid()->size()) throw Error(ErrorKind::shape, "picard_solve: u0 not on the problem grid");

  Solution sol{u0, 0.0, 0, false, {}};
  for (int k = 0; k < max_iter; ++k) {
    const GridFunction tu = p.apply_T(sol.u);
    ++sol.iterations;
    sol.residual_sup = sup_distance(sol.u, tu);
    if (sol.residual_sup <= tol) {
      sol.converged = true;
      return sol;
    }
    GridFunction next = damping == 1.0 ? tu : (1.0 - damping) * sol.u + damping * tu;
    sol.increments.push_back(sup_distance(next, sol.u));
    sol.u = std::move(next);
  }
  return sol;
}

LocalizationReport localize(const HammersteinProblem& p, const Solution& sol, const Annulus& annulus,
                            double tol) {
  if (!sol.converged) throw Error(ErrorKind::invalid_parameter, "localize needs a converged solution");
  LocalizationReport r;
  r.annulus = annulus;
  r.tol = tol;
  r.alpha_margin = p.alpha()(sol.u);
  r.beta_value = p.beta()(sol.u);
  r.gamma_value = p.gamma()(sol.u);
  auto value = [&](LevelKind k) { return k == LevelKind::beta ? r.beta_value : r.gamma_value; };
  r.in_annulus = r.alpha_margin >= -tol && value(annulus.outer) <= annulus.outer_rho + tol &&
                 value(annulus.inner) >= annulus.inner_rho - tol;
  return r;
}

LocalizationReport localize(const HammersteinProblem& p, const Solution& sol, double rho1, double rho2,
                            double tol) {
  return localize(p, sol, Annulus{LevelKind::beta, rho2, LevelKind::gamma, rho1}, tol);
}

bool oracle_available(const HammersteinProblem& p) {
  if (p.kernel().label() != "green_dirichlet") return false;
  for (double g : p.weight_values().values())
    if (g != 1.0) return false;
  return true;
}

namespace {

using State = std::array<double, 2>;  // (u, u')

class Shooter {
 public:
  Shooter(const BivariateFn& f, std::span<const double> nodes) : f_(f), nodes_(nodes) {}

  // Integrates from t = 0 with u'(0) = slope; fills `out` at the nodes when
  // non-null and returns u(1).
  double shoot(double slope, std::vector<double>* out) const {
    State y{0.0, slope};
    double t = 0.0;
    if (out) out->assign(nodes_.size(), 0.0);
    for (std::size_t i = 0; i <= nodes_.size(); ++i) {
      const double target = i < nodes_.size() ? nodes_[i] : 1.0;
      advance(y, t, target);
      if (out && i < nodes_.size()) (*out)[i] = y[0];
    }
    return y[0];
  }

 private:
  static constexpr double kMaxStep = 1.0 / 4096;

  State rhs(double t, const State& y) const {
    const double f = f_(t, y[0]);
    if (!std::isfinite(f)) throw Error(ErrorKind::oracle_failure, "nonlinearity not finite during shooting");
    return {y[1], -f};
  }

  void advance(State& y, double& t, double target) const {
    const double span = target - t;
    if (span <= 0.0) return;
    const int steps = static_cast<int>(std::ceil(span / kMaxStep));
    const double h = span / steps;
    for (int k = 0; k < steps; ++k) {
      const double tk = t + k * h;
      const State k1 = rhs(tk, y);
      const State k2 = rhs(tk + 0.5 * h, {y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]});
      const State k3 = rhs(tk + 0.5 * h, {y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]});
      const State k4 = rhs(tk + h, {y[0] + h * k3[0], y[1] + h * k3[1]});
      y[0] += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
      y[1] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    }
    t = target;
  }

  const BivariateFn& f_;
  std::span<const double> nodes_;
};

}  // namespace

GridFunction shooting_oracle(const HammersteinProblem& p, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::invalid_parameter, "shooting_oracle needs tol > 0");
  if (!oracle_available(p))
    throw Error(ErrorKind::oracle_failure,
                "shooting oracle needs the green_dirichlet kernel and g == 1 at every node");
  const Shooter shooter(p.nonlinearity(), p.grid()->nodes());
  auto end_value = [&](double slope) { return shooter.shoot(slope, nullptr); };

  double lo = -1.0, hi = 1.0;
  double f_lo = end_value(lo), f_hi = end_value(hi);
  while (f_lo * f_hi > 0.0) {
    if (hi > 1e6)
      throw Error(ErrorKind::oracle_failure, "could not bracket the initial slope in [-1e6, 1e6]: u(1) = " +
                                                 std::to_string(f_lo) + " .. " + std::to_string(f_hi));
    lo *= 2.0, hi *= 2.0;
    f_lo = end_value(lo), f_hi = end_value(hi);
  }

  double slope;
  if (f_lo == 0.0) {
    slope = lo;
  } else if (f_hi == 0.0) {
    slope = hi;
  } else {
    std::uintmax_t max_iter = 200;
    const auto [a, b] = boost::math::tools::toms748_solve(end_value, lo, hi, f_lo, f_hi,
                                                          boost::math::tools::eps_tolerance<double>(52),
                                                          max_iter);
    slope = std::abs(end_value(a)) <= std::abs(end_value(b)) ? a : b;
  }
  std::vector<double> values;
  const double residual = shooter.shoot(slope, &values);
  if (std::abs(residual) > tol)
    throw Error(ErrorKind::oracle_failure,
                "shooting did not reach |u(1)| <= tol (|u(1)| = " + std::to_string(std::abs(residual)) + ")");
  return GridFunction(p.grid(), std::move(values));
}

CrossValidation cross_validate(const Solution& sol, const GridFunction& oracle_u, double tol) {
  CrossValidation out;
  out.tol = tol;
  out.sup_difference = sup_distance(sol.u, oracle_u);
  out.passed = out.sup_difference <= tol;
  return out;
}

}  // namespace coneham
