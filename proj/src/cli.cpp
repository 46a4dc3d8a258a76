#include "coneham/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "coneham/report.hpp"

namespace coneham {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::optional<int> grid;
  std::optional<std::string> rule;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::string json_path;
  bool quiet = false;
  std::string file;
  std::string label;
};

/// Human output unless --quiet.
struct Printer {
  std::ostream& out;
  bool quiet;
  std::ostream& stream() {
    static std::ostream null(nullptr);
    return quiet ? null : out;
  }
};

struct Session {
  const Options& opt;
  Printer human;
  std::ostream& out;
  std::ostream& err;

  std::uint64_t seed(const ProblemFile* pf = nullptr) const {
    if (opt.seed) return *opt.seed;
    if (pf && pf->tolerances.seed) return *pf->tolerances.seed;
    return env_seed();
  }
  int trials(const ProblemFile* pf = nullptr) const {
    if (opt.trials) return *opt.trials;
    return pf ? pf->tolerances.trials : 1000;
  }
  std::optional<Rule> rule() const {
    if (!opt.rule) return std::nullopt;
    return parse_rule(*opt.rule);
  }

  void emit(Json doc) {
    if (opt.json_path.empty()) return;
    if (opt.json_path == "-") {
      out << doc.dump(2) << "\n";
      return;
    }
    std::ofstream f(opt.json_path);
    if (!f) throw Error(ErrorKind::invalid_parameter, "cannot write JSON report to '" + opt.json_path + "'");
    f << doc.dump(2) << "\n";
  }
};

Json header(const std::string& command, const ProblemFile& pf, const HammersteinProblem& p, std::uint64_t seed,
            int trials) {
  Json problem = to_json(pf);
  problem["rule"] = to_string(p.grid()->rule());
  problem["n"] = p.grid()->size();
  return {{"command", command}, {"problem", problem}, {"seed", seed}, {"trials", trials}};
}

int cmd_verify(Session& s) {
  const ProblemFile pf = load_problem_file(s.opt.file);
  const HammersteinProblem p = build_problem(pf, s.rule(), s.opt.grid);
  const auto seed = s.seed(&pf);
  const int trials = s.trials(&pf);
  const HypothesisReport r = verify_hypotheses(p, trials, seed);
  print_hypotheses(s.human.stream(), r);
  Json doc = header("verify", pf, p, seed, trials);
  doc["hypotheses"] = to_json(r);
  s.emit(std::move(doc));
  return r.all_passed() ? 0 : 1;
}

int cmd_certify(Session& s) {
  const ProblemFile pf = load_problem_file(s.opt.file);
  const HammersteinProblem p = build_problem(pf, s.rule(), s.opt.grid);
  const auto seed = s.seed(&pf);
  const int trials = s.trials(&pf);
  const HypothesisReport hyp = verify_hypotheses(p, trials, seed);
  const Certificate cert = certify(p, pf.strategy, pf.rho, hyp.summary);
  print_certificate(s.human.stream(), cert);
  Json doc = header("certify", pf, p, seed, trials);
  doc["certificate"] = to_json(cert);
  doc["hypotheses"] = to_json(hyp);
  s.emit(std::move(doc));
  return cert.conclusion == Conclusion::not_established ? 1 : 0;
}

struct SolveOutcome {
  Solution solution;
  LocalizationReport localization;
  std::optional<CrossValidation> oracle;
  bool ok = false;
};

SolveOutcome solve_problem(const HammersteinProblem& p, const ProblemFile& pf, double tol) {
  const auto& t = pf.tolerances;
  SolveOutcome o{picard_solve(p, GridFunction::zeros(p.grid()), tol, t.max_iter, t.damping), {}, {}, false};
  const Annulus annulus = annuli(pf.strategy, pf.rho).front();
  if (o.solution.converged) {
    o.localization = localize(p, o.solution, annulus, t.membership);
    if (oracle_available(p)) o.oracle = cross_validate(o.solution, shooting_oracle(p, 1e-12), t.oracle_tol);
  } else {
    o.localization.annulus = annulus;
  }
  o.ok = o.solution.converged && o.localization.in_annulus && (!o.oracle || o.oracle->passed);
  return o;
}

int cmd_solve(Session& s) {
  const ProblemFile pf = load_problem_file(s.opt.file);
  const HammersteinProblem p = build_problem(pf, s.rule(), s.opt.grid);
  const double tol = s.opt.tol.value_or(pf.tolerances.tol);
  const SolveOutcome o = solve_problem(p, pf, tol);
  auto& h = s.human.stream();
  print_solution(h, o.solution, o.localization, o.oracle);
  const bool second = level_count(pf.strategy) == 3;
  if (second) h << "  second solution: not-attempted\n";
  Json doc = header("solve", pf, p, s.seed(&pf), s.trials(&pf));
  doc["solution"] = to_json(o.solution);
  doc["solution"]["tol"] = tol;
  doc["localization"] = to_json(o.localization);
  doc["oracle"] = o.oracle ? to_json(*o.oracle) : Json(nullptr);
  if (second) doc["second_solution"] = "not-attempted";
  s.emit(std::move(doc));
  return o.ok ? 0 : 1;
}

fs::path worked_example_path() {
  const fs::path local = "examples/paper_sec4.problem";
  if (fs::exists(local)) return local;
  return fs::path(CONEHAM_SOURCE_DIR) / local;
}

struct ExpectedRow {
  std::string name;
  double value;
  double expected;
  double lo, hi;
  bool ok() const { return std::isfinite(value) && value >= lo && value <= hi; }
};

ExpectedRow near(std::string name, double value, double expected, double tol) {
  return {std::move(name), value, expected, expected - tol, expected + tol};
}

int cmd_reproduce(Session& s) {
  const fs::path path = s.opt.file.empty() ? worked_example_path() : fs::path(s.opt.file);
  const ProblemFile pf = load_problem_file(path);
  const HammersteinProblem p = build_problem(pf, s.rule(), s.opt.grid);
  const auto seed = s.seed(&pf);
  const int trials = s.trials(&pf);
  if (pf.rho.size() != 2) throw Error(ErrorKind::problem_file, "expected a two-level (S1) example file");
  const double rho1 = pf.rho[0], rho2 = pf.rho[1];

  const PsiIntegral ib = psi_integral(p.beta(), p.kernel(), p.weight(), p.grid());
  const PsiIntegral ig = psi_integral(p.gamma(), p.kernel(), p.weight(), p.grid());
  const PsiFunction pa = psi(p.alpha(), p.kernel(), p.grid());
  double psi_alpha_max = 0.0;
  for (double x : pa.values.values()) psi_alpha_max = std::max(psi_alpha_max, std::abs(x));
  const IndexVerdict v0 = check_index0(p, rho1);
  const IndexVerdict v1 = check_index1(p, rho2);
  const HypothesisReport hyp = verify_hypotheses(p, trials, seed);
  const Certificate cert = certify(p, pf.strategy, pf.rho, hyp.summary);
  const SolveOutcome sol = solve_problem(p, pf, s.opt.tol.value_or(pf.tolerances.tol));

  const double sqrt3 = std::sqrt(3.0);
  std::vector<ExpectedRow> rows{
      near("psi_beta_integral", ib.value, 1.0 / (6.0 * sqrt3), 1e-6),
      near("psi_gamma_integral", ig.value, 1.0 / 12.0, 1e-8),
      near("psi_alpha_max_abs", psi_alpha_max, 0.0, 1e-9),
      near("f_lower(rho1)", v0.level.value, 800.0 / 41.0, 1e-6),
      near("index0_product", v0.product, 200.0 / 123.0, 1e-6),
      near("index0_holds", v0.holds() ? 1.0 : 0.0, 1.0, 0.0),
      near("f_upper(rho2)", v1.level.value, 2.0, 1e-9),
      near("index1_product", v1.product, 1.0 / (3.0 * sqrt3), 1e-6),
      near("index1_holds", v1.holds() ? 1.0 : 0.0, 1.0, 0.0),
      near("growth_b(rho1)", p.cone().growth_b(rho1), 2.0 * rho1, 1e-15),
      near("hypotheses_pass", hyp.all_passed() ? 1.0 : 0.0, 1.0, 0.0),
      near("one_solution", cert.conclusion == Conclusion::one_solution ? 1.0 : 0.0, 1.0, 0.0),
      near("picard_residual_ok", sol.solution.converged ? 1.0 : 0.0, 1.0, 0.0),
      {"gamma(u)", sol.localization.gamma_value, 0.0821, 0.0808, 0.0834},
      {"beta(u)", sol.localization.beta_value, 0.097, 0.0, 0.097},
      near("in_annulus", sol.localization.in_annulus ? 1.0 : 0.0, 1.0, 0.0),
  };
  if (sol.oracle) rows.push_back({"oracle_sup_difference", sol.oracle->sup_difference, 0.0, 0.0, sol.oracle->tol});

  auto& h = s.human.stream();
  h << "reproducing " << path.string() << " (" << to_string(p.grid()->rule()) << ", n=" << p.grid()->size() << ")\n";
  bool all = true;
  Json jrows = Json::array();
  for (const auto& r : rows) {
    all = all && r.ok();
    h << "  " << (r.ok() ? "ok  " : "DIFF") << " " << r.name << " = " << fmt(r.value) << "  expected ["
      << fmt(r.lo) << ", " << fmt(r.hi) << "]\n";
    jrows.push_back({{"name", r.name}, {"value", r.value}, {"expected", r.expected}, {"lo", r.lo}, {"hi", r.hi},
                     {"ok", r.ok()}});
  }
  h << (all ? "all expected constants reproduced" : "MISMATCH against expected constants") << "\n";
  Json doc = header("reproduce-paper-example", pf, p, seed, trials);
  doc["rows"] = jrows;
  doc["certificate"] = to_json(cert);
  doc["solution"] = to_json(sol.solution);
  doc["localization"] = to_json(sol.localization);
  doc["all_ok"] = all;
  s.emit(std::move(doc));
  return all ? 0 : 1;
}

int cmd_functional_check(Session& s) {
  const Functional alpha = parse_functional_spec(s.opt.label);
  const Grid grid = build_quadrature(s.rule().value_or(Rule::trapezoid), s.opt.grid.value_or(201));
  const auto seed = s.seed();
  const int trials = s.trials();
  const AxiomReport r = check_axioms(alpha, generic_sampler(grid), trials, seed);
  print_axiom_report(s.human.stream(), alpha.label(), r);
  Json doc{{"command", "functional-check"}, {"label", alpha.label()}, {"axioms", to_json(r)}};
  s.emit(std::move(doc));
  return r.passed() ? 0 : 1;
}

}  // namespace

std::uint64_t env_seed() {
  if (const char* env = std::getenv("CONEHAM_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultSeed;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Cone-based existence certificates and solver for Hammerstein equations", "coneham"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--grid", opt.grid, "number of quadrature nodes (trapezoid) or panels (gauss)")->check(CLI::PositiveNumber);
  app.add_option("--rule", opt.rule, "quadrature rule")->check(CLI::IsMember({"trapezoid", "gauss"}));
  app.add_option("--tol", opt.tol, "Picard residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "random seed (default: CONEHAM_SEED)");
  app.add_option("--trials", opt.trials, "randomized trials")->check(CLI::PositiveNumber);
  app.add_option("--json", opt.json_path, "write the JSON report to PATH ('-' for stdout)");
  app.add_flag("--quiet", opt.quiet, "suppress the human-readable report");

  auto* verify = app.add_subcommand("verify", "check hypotheses C1-C8 on a problem file");
  verify->add_option("file", opt.file)->required()->check(CLI::ExistingFile);
  auto* cert = app.add_subcommand("certify", "index verdicts and existence certificate");
  cert->add_option("file", opt.file)->required()->check(CLI::ExistingFile);
  auto* solve = app.add_subcommand("solve", "Picard iteration, localization and oracle comparison");
  solve->add_option("file", opt.file)->required()->check(CLI::ExistingFile);
  auto* repro = app.add_subcommand("reproduce-paper-example", "run the shipped worked example and diff constants");
  repro->add_option("file", opt.file, "alternative example file")->check(CLI::ExistingFile);
  auto* fcheck = app.add_subcommand("functional-check", "randomized axiom suite for one functional");
  fcheck->add_option("label", opt.label, "functional label or spec")->required();

  std::vector<const char*> argv{"coneham"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Session s{opt, Printer{out, opt.quiet}, out, err};
  try {
    if (verify->parsed()) return cmd_verify(s);
    if (cert->parsed()) return cmd_certify(s);
    if (solve->parsed()) return cmd_solve(s);
    if (repro->parsed()) return cmd_reproduce(s);
    return cmd_functional_check(s);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::problem_file || e.kind() == ErrorKind::syntax ? 2 : 1;
  }
}

}  // namespace coneham
