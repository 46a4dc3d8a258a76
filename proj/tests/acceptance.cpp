// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "coneham/axiom_checks.hpp"
#include "coneham/certify.hpp"
#include "coneham/cli.hpp"
#include "coneham/problem_file.hpp"
#include "coneham/sampling.hpp"
#include "coneham/solver.hpp"

using namespace coneham;

namespace {

constexpr std::uint64_t kSeed = 20240611;
const std::string kExample = "examples/paper_sec4.problem";

// Accumulates the failed sub-checks of one criterion.
struct Criterion {
  std::string failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures += (failures.empty() ? "" : "; ") + what;
  }
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

HammersteinProblem example(int n) { return build_problem(load_problem_file(kExample), Rule::trapezoid, n); }

void constants(Criterion& c) {
  const auto p = example(201);
  const auto g = [](double) { return 1.0; };
  const double beta = psi_integral(p.beta(), p.kernel(), g, p.grid()).value;
  const double gamma = psi_integral(p.gamma(), p.kernel(), g, p.grid()).value;
  c.expect(std::abs(beta - 1 / (6 * std::sqrt(3.0))) <= 1e-6, "psi_beta integral " + num(beta));
  c.expect(std::abs(gamma - 1.0 / 12) <= 1e-8, "psi_gamma integral " + num(gamma));
  const auto a = psi(p.alpha(), p.kernel(), p.grid());
  for (double v : a.values.values()) {
    if (std::abs(v) > 1e-9) {
      c.expect(false, "psi_alpha node value " + num(v));
      break;
    }
  }
}

void index_verdicts(Criterion& c) {
  const auto p = example(201);
  const auto lower = check_index0(p, 0.05);
  c.expect(std::abs(lower.level.value - 800.0 / 41) <= 1e-6, "f_lower " + num(lower.level.value));
  c.expect(std::abs(lower.product - 200.0 / 123) <= 1e-6, "index0 product " + num(lower.product));
  c.expect(lower.holds(), "index0 verdict");
  const auto upper = check_index1(p, 0.5);
  c.expect(std::abs(upper.level.value - 2) <= 1e-9, "f_upper " + num(upper.level.value));
  c.expect(std::abs(upper.product - 1 / (3 * std::sqrt(3.0))) <= 1e-6, "index1 product " + num(upper.product));
  c.expect(upper.holds(), "index1 verdict");
  const auto cert = certify(p, Strategy::S1, {0.05, 0.5});
  c.expect(cert.conclusion == Conclusion::one_solution, std::string("conclusion ") + to_string(cert.conclusion));
  c.expect(cert.localization.size() == 1 &&
               cert.localization[0].describe() == "K_alpha^{beta,0.5} \\ K_alpha^{gamma,0.05}",
           "annulus");
}

void solve_and_localize(Criterion& c) {
  const auto p = example(201);
  const auto sol = picard_solve(p, GridFunction::zeros(p.grid()), 1e-10, 50);
  c.expect(sol.converged, "picard did not converge");
  c.expect(sol.residual_sup <= 1e-10, "residual " + num(sol.residual_sup));
  c.expect(sol.iterations <= 50, "iterations " + std::to_string(sol.iterations));
  const double a = p.alpha()(sol.u);
  const double gamma = p.gamma()(sol.u);
  const double beta = p.beta()(sol.u);
  c.expect(a >= -1e-7, "alpha " + num(a));
  c.expect(gamma >= 0.0808 && gamma <= 0.0834, "gamma " + num(gamma));
  c.expect(beta <= 0.097, "beta " + num(beta));
  c.expect(localize(p, sol, 0.05, 0.5).in_annulus, "not in annulus");
}

void oracle(Criterion& c) {
  const auto p = example(1001);
  const auto sol = picard_solve(p, GridFunction::zeros(p.grid()), 1e-12, 200);
  const auto cv = cross_validate(sol, shooting_oracle(p, 1e-12), 1e-6);
  c.expect(sol.converged, "picard did not converge");
  c.expect(cv.passed, "sup difference " + num(cv.sup_difference));
}

void axiom_suites(Criterion& c) {
  const auto grid = build_quadrature(Rule::trapezoid, 201);
  const auto sampler = generic_sampler(grid);
  for (const auto& label : builtin_functional_labels()) {
    const auto f = builtin_functional(label);
    if (!f.claims().superadditive && !f.claims().homogeneous) continue;
    const auto r = check_axioms(f, sampler, 1000, kSeed);
    c.expect(r.passed(), label + " worst margin " + num(r.worst_margin));
  }
  const Functional broken("broken_max", kA1A2, [](const GridFunction& u) { return u.max(); });
  const auto r = check_axioms(broken, sampler, 1000, kSeed);
  c.expect(r.violations_a1 + r.violations_a2 >= 1, "broken fixture not detected");
}

void cone_properties(Criterion& c) {
  const auto p = example(201);
  const auto& cone = p.cone();
  Rng rng(kSeed);
  int outside = 0, sup_bound = 0, growth = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto u = sample_cone(cone, p.grid(), rng);
    if (membership(cone, u).verdict == MembershipVerdict::outside) ++outside;
    const auto nm = norms(u);
    if (nm.sup > 2 * nm.l1 + 1e-9) ++sup_bound;
    const double beta = p.beta()(u);
    const double gamma = p.gamma()(u);
    if (beta > cone.growth_b(gamma) + 1e-9 || gamma > cone.growth_c(beta) + 1e-9) ++growth;
  }
  c.expect(outside == 0, std::to_string(outside) + " samples outside");
  c.expect(sup_bound == 0, std::to_string(sup_bound) + " sup-norm violations");
  c.expect(growth == 0, std::to_string(growth) + " growth violations");
  c.expect(verify_growth(cone, p.beta(), p.gamma(), p.grid(), 1000, kSeed).passed(), "verify_growth");
}

void operator_invariance(Criterion& c) {
  const auto p = example(201);
  const auto r = check_C5_C6(p, 1000, kSeed);
  c.expect(r.trials == 1000, "trials " + std::to_string(r.trials));
  c.expect(r.invariance_violations == 0, std::to_string(r.invariance_violations) + " images outside");
  c.expect(r.passed(), "C5/C6 violations");
  c.expect(r.worst_alpha >= -kOperatorTol && r.worst_beta >= -kOperatorTol && r.worst_gamma >= -kOperatorTol,
           "worst margin");
  c.expect(r.gamma_equality_gap <= 1e-8, "gamma equality gap " + num(r.gamma_equality_gap));
}

void negative_controls(Criterion& c) {
  std::ifstream in(kExample);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  const std::string from = "rho = 0.05, 0.5";
  text.replace(text.find(from), from.size(), "rho = 0.05, 0.08");
  const auto path = std::filesystem::temp_directory_path() / "coneham_acceptance_gap.problem";
  std::ofstream(path) << text;
  std::ostringstream out, err;
  const int code = run_command({"certify", path.string(), "--quiet"}, out, err);
  c.expect(code == 1, "certify exit " + std::to_string(code));

  const auto p = example(201);
  const auto idx = check_index0(p, 1.0);
  c.expect(!idx.holds(), "index0 at rho=1 holds");
  c.expect(std::abs(idx.product - 1.0 / 18) <= 1e-6, "index0 product " + num(idx.product));

  const auto c2 = check_C2_C3(p.kernel(), p.weight_values(), neg_sup(), p.grid());
  c.expect(!c2.c2_pass, "C2 passes for neg_sup");
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    void (*run)(Criterion&);
    double budget_s;  // wall-clock limit, 0 for none
  };
  const Entry entries[] = {
      {"constants", constants, 1.0},
      {"index verdicts", index_verdicts, 0.0},
      {"solve and localize", solve_and_localize, 0.0},
      {"oracle equivalence n=1001", oracle, 5.0},
      {"functional axiom suites", axiom_suites, 0.0},
      {"cone property suite", cone_properties, 0.0},
      {"operator invariance", operator_invariance, 0.0},
      {"negative controls", negative_controls, 0.0},
  };
  int failed = 0;
  int index = 0;
  for (const auto& e : entries) {
    ++index;
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.budget_s > 0 && secs >= e.budget_s) c.expect(false, "took " + num(secs) + " s");
    const bool ok = c.failures.empty();
    if (!ok) ++failed;
    std::printf("%s criterion %d (%s) %.3f s%s%s\n", ok ? "PASS" : "FAIL", index, e.name, secs,
                ok ? "" : ": ", c.failures.c_str());
  }
  return failed == 0 ? 0 : 1;
}
