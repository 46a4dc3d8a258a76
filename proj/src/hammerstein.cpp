#include "coneham/hammerstein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace coneham {

namespace {

double eval_f(const BivariateFn& f, double t, double v) {
  double value;
  try {
    value = f(t, v);
  } catch (const Error& e) {
    throw Error(ErrorKind::nonlinearity_domain, std::string("nonlinearity: ") + e.what());
  }
  if (!std::isfinite(value))
    throw Error(ErrorKind::nonlinearity_domain,
                "nonlinearity is not finite at t=" + std::to_string(t) + ", v=" + std::to_string(v));
  return value;
}

// Golden-section search for a maximum of a unimodal function on [a, b].
template <class F>
double golden_section_max(F&& fn, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = fn(c), fd = fn(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d, d = c, fd = fc;
      c = b - inv_phi * (b - a), fc = fn(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + inv_phi * (b - a), fd = fn(d);
    }
  }
  return 0.5 * (a + b);
}

// sign = +1 for the upper constant, -1 for the lower one.
LevelConstant level_constant(const HammersteinProblem& p, double rho, LevelKind level, double sign,
                             int v_points) {
  if (!(rho > 0.0)) throw Error(ErrorKind::invalid_parameter, "level constants need rho > 0");
  if (v_points < 2) throw Error(ErrorKind::invalid_parameter, "level constants need >= 2 v points");
  LevelConstant out;
  out.range = p.cone().range_bound(level, rho);
  const auto& f = p.nonlinearity();
  const auto t = p.grid()->nodes();
  const double lo = out.range.lo, hi = out.range.hi;
  const double dv = (hi - lo) / (v_points - 1);

  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  int best_k = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int k = 0; k < v_points; ++k) {
      const double v = k + 1 == v_points ? hi : lo + k * dv;
      const double value = sign * eval_f(f, t[i], v);
      if (value > best) best = value, best_i = i, best_k = k;
    }
  }
  double best_v = best_k + 1 == v_points ? hi : lo + best_k * dv;
  if (hi > lo) {
    const double a = std::max(lo, best_v - dv), b = std::min(hi, best_v + dv);
    const double ti = t[best_i];
    const double v = golden_section_max([&](double x) { return sign * eval_f(f, ti, x); }, a, b, 1e-10);
    const double value = sign * eval_f(f, ti, v);
    if (value > best) best = value, best_v = v;
  }
  out.value = sign * best / rho;
  out.t = t[best_i];
  out.v = best_v;
  return out;
}

IndexVerdict index_verdict(const HammersteinProblem& p, double rho, IndexKind kind) {
  if (!(rho > 0.0)) throw Error(ErrorKind::invalid_parameter, "index checks need rho > 0");
  IndexVerdict out;
  out.rho = rho;
  out.kind = kind;
  if (kind == IndexKind::index1) {
    out.level = f_upper(p, rho);
    out.psi = psi_integral(p.beta(), p.kernel(), p.weight(), p.grid());
  } else {
    out.level = f_lower(p, rho);
    out.psi = psi_integral(p.gamma(), p.kernel(), p.weight(), p.grid());
  }
  out.product = out.level.value * out.psi.value;
  out.margin = kIndexMargin + std::abs(out.level.value) * out.psi.error_estimate;
  const double target = 1.0;
  const bool clear = kind == IndexKind::index1 ? out.product < target - out.margin
                                               : out.product > target + out.margin;
  const bool violated = kind == IndexKind::index1 ? out.product >= target + out.margin
                                                  : out.product <= target - out.margin;
  out.status = clear ? VerdictStatus::holds
                     : (violated ? VerdictStatus::fails : VerdictStatus::inconclusive_numerical);
  if (kind == IndexKind::index0 && out.status == VerdictStatus::holds && !check_C7(p).passed) {
    out.status = VerdictStatus::fails;
    out.note = "reference element e fails (C7)";
  }
  return out;
}

}  // namespace

HammersteinProblem::HammersteinProblem(Parts parts)
    : parts_(std::move(parts)),
      g_values_(GridFunction::sample(parts_.grid, parts_.weight)) {
  const auto& q = *parts_.grid;
  const std::size_t n = q.size();
  matrix_.resize(n * n);
  for_each_index(n, [&](std::size_t i) {
    const double ti = q.node(i);
    for (std::size_t j = 0; j < n; ++j)
      matrix_[i * n + j] = q.weight(j) * parts_.kernel(ti, q.node(j)) * g_values_[j];
  });
}

GridFunction HammersteinProblem::reference_values() const {
  return GridFunction::sample(parts_.grid, parts_.reference);
}

HammersteinProblem HammersteinProblem::on_grid(Grid grid) const {
  Parts p = parts_;
  p.grid = std::move(grid);
  return HammersteinProblem(std::move(p));
}

std::vector<double> HammersteinProblem::nonlinearity_values(const GridFunction& u) const {
  if (u.size() != parts_.grid->size()) throw Error(ErrorKind::shape, "apply_T: u not on the problem grid");
  std::vector<double> fv(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) fv[j] = eval_f(parts_.nonlinearity, parts_.grid->node(j), u[j]);
  return fv;
}

GridFunction HammersteinProblem::apply_T(const GridFunction& u, Exec exec) const {
  const auto fv = nonlinearity_values(u);
  std::vector<double> out(u.size());
  matvec(matrix_, u.size(), u.size(), fv, out, exec);
  return GridFunction(parts_.grid, std::move(out));
}

HammersteinProblem dirichlet_example_problem(Grid grid) {
  const std::string beta = "l2", gamma = "integral";
  return HammersteinProblem({
      .kernel = green_dirichlet(),
      .weight = [](double) { return 1.0; },
      .nonlinearity = [](double, double v) { return 4.0 / (std::abs(v) + 4.0); },
      .cone = concave_dirichlet_cone(beta, gamma),
      .beta = builtin_functional(beta),
      .gamma = builtin_functional(gamma),
      .reference = [](double t) { return t * (1.0 - t); },
      .grid = std::move(grid),
      .nonlinearity_text = "4/(abs(v)+4)",
      .weight_text = "1",
      .reference_text = "t*(1-t)",
  });
}

C4Report check_C4(const HammersteinProblem& p, const std::vector<double>& r_list, int samples) {
  if (samples < 1) throw Error(ErrorKind::invalid_parameter, "check_C4 needs samples >= 1");
  C4Report report;
  report.passed = true;
  const auto t = p.grid()->nodes();
  for (double r : r_list) {
    C4Row row;
    row.r = r;
    row.sup = -std::numeric_limits<double>::infinity();
    row.min = std::numeric_limits<double>::infinity();
    for (double ti : t) {
      for (int k = -samples; k <= samples; ++k) {
        const double v = r * k / samples;
        double value;
        try {
          value = p.nonlinearity()(ti, v);
        } catch (const Error&) {
          value = std::numeric_limits<double>::quiet_NaN();
        }
        if (!std::isfinite(value)) {
          ++row.nonfinite;
          continue;
        }
        if (value < 0.0) ++row.negative;
        row.sup = std::max(row.sup, value);
        row.min = std::min(row.min, value);
      }
    }
    if (row.nonfinite > 0 || row.negative > 0) report.passed = false;
    report.rows.push_back(row);
  }
  return report;
}

C5C6Report check_C5_C6(const HammersteinProblem& p, int trials, std::uint64_t seed) {
  const auto& grid = p.grid();
  const auto& q = *grid;
  const PsiFunction psi_a = psi(p.alpha(), p.kernel(), grid);
  const PsiFunction psi_b = psi(p.beta(), p.kernel(), grid);
  const PsiFunction psi_g = psi(p.gamma(), p.kernel(), grid);
  const auto& g = p.weight_values();

  C5C6Report report;
  report.trials = trials;
  std::vector<double> wb(q.size()), wg(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) {
    wb[j] = psi_b.values[j] * g[j];
    wg[j] = psi_g.values[j] * g[j];
  }
  report.psi_beta_integral = integrate(q, wb);
  report.psi_gamma_integral = integrate(q, wg);
  report.positivity = report.psi_beta_integral > 0.0 && report.psi_gamma_integral > 0.0;

  constexpr double inf = std::numeric_limits<double>::infinity();
  report.worst_alpha = report.worst_beta = report.worst_gamma = inf;
  Rng rng(seed);
  std::vector<double> weighted(q.size());
  auto weighted_integral = [&](const GridFunction& psi_values, const std::vector<double>& fv) {
    for (std::size_t j = 0; j < q.size(); ++j) weighted[j] = psi_values[j] * g[j] * fv[j];
    return integrate(q, weighted);
  };
  for (int k = 0; k < trials; ++k) {
    const GridFunction u = sample_cone(p.cone(), grid, rng);
    const auto fv = p.nonlinearity_values(u);
    const GridFunction tu = p.apply_T(u);

    const double ma = p.alpha()(tu) - weighted_integral(psi_a.values, fv);
    const double mb = weighted_integral(psi_b.values, fv) - p.beta()(tu);
    const double mg = p.gamma()(tu) - weighted_integral(psi_g.values, fv);
    report.worst_alpha = std::min(report.worst_alpha, ma);
    report.worst_beta = std::min(report.worst_beta, mb);
    report.worst_gamma = std::min(report.worst_gamma, mg);
    report.gamma_equality_gap = std::max(report.gamma_equality_gap, std::abs(mg));
    report.violations_alpha += ma < -kOperatorTol;
    report.violations_beta += mb < -kOperatorTol;
    report.violations_gamma += mg < -kOperatorTol;
    report.invariance_violations += membership(p.cone(), tu).verdict == MembershipVerdict::outside;
  }
  return report;
}

C7Report check_C7(const HammersteinProblem& p) {
  C7Report out;
  const GridFunction e = p.reference_values();
  out.membership = membership(p.cone(), e);
  out.sup = norms(e).sup;
  out.gamma_e = p.gamma()(e);
  out.passed = out.membership.verdict != MembershipVerdict::outside && out.sup > 0.0 && out.gamma_e >= -1e-9;
  return out;
}

LevelConstant f_upper(const HammersteinProblem& p, double rho, int v_points) {
  return level_constant(p, rho, LevelKind::beta, 1.0, v_points);
}

LevelConstant f_lower(const HammersteinProblem& p, double rho, int v_points) {
  return level_constant(p, rho, LevelKind::gamma, -1.0, v_points);
}

const char* to_string(IndexKind kind) { return kind == IndexKind::index1 ? "index1" : "index0"; }

const char* to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::holds: return "holds";
    case VerdictStatus::fails: return "fails";
    case VerdictStatus::inconclusive_numerical: return "inconclusive-numerical";
  }
  return "unknown";
}

IndexVerdict check_index1(const HammersteinProblem& p, double rho) {
  return index_verdict(p, rho, IndexKind::index1);
}

IndexVerdict check_index0(const HammersteinProblem& p, double rho) {
  return index_verdict(p, rho, IndexKind::index0);
}

}  // namespace coneham
