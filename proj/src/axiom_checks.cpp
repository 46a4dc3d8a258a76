#include "coneham/axiom_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace coneham {

bool AxiomReport::passed() const {
  return !(claimed.superadditive && violations_a1 > 0) &&
         !(claimed.homogeneous && violations_a2 > 0) &&
         !(claimed.sign_definite && violations_a4 > 0);
}

AxiomReport check_axioms(const Functional& alpha, const FunctionSampler& sampler, int trials,
                         std::uint64_t seed, double tol) {
  if (trials < 1) throw Error(ErrorKind::invalid_parameter, "check_axioms needs trials >= 1");
  AxiomReport report;
  report.trials = trials;
  report.seed = seed;
  report.claimed = alpha.claims();
  constexpr double inf = std::numeric_limits<double>::infinity();
  report.worst_a1 = report.worst_a2 = report.worst_a4 = inf;

  Rng rng(seed);
  std::uniform_real_distribution<double> lambda_dist(0.0, 10.0);
  for (int k = 0; k < trials; ++k) {
    const GridFunction u = sampler(rng);
    const GridFunction v = sampler(rng);
    const double lambda = lambda_dist(rng);
    const double au = alpha(u);

    const double m1 = alpha(u + v) - au - alpha(v);
    const double m2 = alpha(lambda * u) - lambda * au;
    const double m4 = -(au + alpha(-u));
    report.worst_a1 = std::min(report.worst_a1, m1);
    report.worst_a2 = std::min(report.worst_a2, m2);
    report.worst_a4 = std::min(report.worst_a4, m4);
    report.violations_a1 += m1 < -tol;
    report.violations_a2 += m2 < -tol;
    report.violations_a4 += m4 < -tol;
  }
  double worst = inf;
  if (report.claimed.superadditive) worst = std::min(worst, report.worst_a1);
  if (report.claimed.homogeneous) worst = std::min(worst, report.worst_a2);
  if (report.claimed.sign_definite) worst = std::min(worst, report.worst_a4);
  report.worst_margin = std::isinf(worst) ? 0.0 : worst;
  return report;
}

LemscReport::Verdict LemscReport::verdict() const {
  if (condition5_violations > 0) return Verdict::condition5_violated;
  if (counterexample) return Verdict::counterexample;
  return Verdict::no_counterexample_found;
}

const char* to_string(LemscReport::Verdict verdict) {
  switch (verdict) {
    case LemscReport::Verdict::no_counterexample_found: return "no-counterexample-found";
    case LemscReport::Verdict::condition5_violated: return "condition5-violated";
    case LemscReport::Verdict::counterexample: return "counterexample";
  }
  return "unknown";
}

LemscReport check_lemsc(const std::vector<Functional>& terms, const FunctionSampler& sampler,
                        int trials, std::uint64_t seed, double tol) {
  if (trials < 1) throw Error(ErrorKind::invalid_parameter, "check_lemsc needs trials >= 1");
  if (terms.empty()) throw Error(ErrorKind::invalid_parameter, "check_lemsc needs at least one term");
  LemscReport report;
  report.trials = trials;
  report.seed = seed;
  report.worst_condition5 = -std::numeric_limits<double>::infinity();

  Rng rng(seed);
  for (int k = 0; k < trials; ++k) {
    const GridFunction u = sampler(rng);
    const GridFunction minus_u = -u;
    bool all_zero = true;
    for (const auto& alpha : terms) {
      const double s = alpha(u) + alpha(minus_u);
      report.worst_condition5 = std::max(report.worst_condition5, s);
      if (s > tol) {
        ++report.condition5_violations;
        if (!report.condition5_witness) report.condition5_witness = u;
      }
      if (std::abs(s) > tol) all_zero = false;
    }
    if (all_zero && norms(u).sup > tol && !report.counterexample) report.counterexample = u;
  }
  return report;
}

Functional sum_checked(const std::vector<Functional>& terms, const FunctionSampler& sampler,
                       int trials, std::uint64_t seed, LemscReport* report) {
  LemscReport r = check_lemsc(terms, sampler, trials, seed);
  Functional total = sum(terms);
  if (r.verdict() == LemscReport::Verdict::no_counterexample_found) {
    AxiomSet claims = total.claims();
    claims.sign_definite = true;
    total = with_claims(total, claims);
  }
  if (report) *report = std::move(r);
  return total;
}

}  // namespace coneham
