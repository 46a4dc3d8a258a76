#include "coneham/certify.hpp"

#include <algorithm>
#include <cstdio>

namespace coneham {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::S1: return "S1";
    case Strategy::S2: return "S2";
    case Strategy::S3: return "S3";
    case Strategy::S4: return "S4";
  }
  return "?";
}

Strategy parse_strategy(const std::string& text) {
  if (text == "S1" || text == "s1") return Strategy::S1;
  if (text == "S2" || text == "s2") return Strategy::S2;
  if (text == "S3" || text == "s3") return Strategy::S3;
  if (text == "S4" || text == "s4") return Strategy::S4;
  throw Error(ErrorKind::invalid_parameter, "unknown strategy '" + text + "' (expected S1..S4)");
}

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::one_solution: return "one-solution";
    case Conclusion::two_solutions: return "two-solutions";
    case Conclusion::not_established: return "not-established";
  }
  return "?";
}

std::size_t level_count(Strategy s) { return s == Strategy::S1 || s == Strategy::S2 ? 2 : 3; }

namespace {

const char* level_name(LevelKind k) { return k == LevelKind::beta ? "beta" : "gamma"; }

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

GapCheck gap(const ConeSpec& cone, const char* map, int upper, int lower, const std::vector<double>& rho) {
  GapCheck g;
  g.description = "rho" + std::to_string(upper) + " > " + map + "(rho" + std::to_string(lower) + ")";
  g.lhs = rho[upper - 1];
  g.rhs = map[0] == 'b' ? cone.growth_b(rho[lower - 1]) : cone.growth_c(rho[lower - 1]);
  g.holds = g.lhs > g.rhs;
  return g;
}

}  // namespace

std::string Annulus::describe() const {
  return std::string("K_alpha^{") + level_name(outer) + "," + format_number(outer_rho) + "} \\ K_alpha^{" +
         level_name(inner) + "," + format_number(inner_rho) + "}";
}

bool HypothesisReport::all_passed() const {
  return std::all_of(summary.begin(), summary.end(), [](const auto& h) { return passed(h.status); });
}

HypothesisReport verify_hypotheses(const HammersteinProblem& p, int trials, std::uint64_t seed) {
  HypothesisReport r;
  const auto sampled = [](bool ok) { return ok ? CheckStatus::sampled_pass : CheckStatus::fail; };

  r.c1 = check_C1(p.kernel(), {0.0, 1e-3, 1e-2, 1e-1});
  r.summary.push_back({"C1", r.c1.status, r.c1.note});

  r.c2c3 = check_C2_C3(p.kernel(), p.weight_values(), p.alpha(), p.grid());
  r.summary.push_back({"C2", r.c2c3.c2_pass ? CheckStatus::sampled_pass : CheckStatus::fail,
                       "min psi_alpha = " + format_number(r.c2c3.psi_min)});
  r.summary.push_back({"C3", r.c2c3.c3_pass ? CheckStatus::sampled_pass : CheckStatus::fail,
                       "min g = " + format_number(r.c2c3.g_min) +
                           (r.c2c3.integrals_finite ? ", integrals finite" : ", non-finite integral")});

  r.c4 = check_C4(p, {1.0, 10.0, 100.0});
  r.summary.push_back({"C4", sampled(r.c4.passed), "f sampled on t-grid x [-r,r], r in {1,10,100}"});

  r.c5c6 = check_C5_C6(p, trials, seed);
  r.summary.push_back({"C5", sampled(r.c5c6.violations_alpha == 0),
                       "worst alpha margin = " + format_number(r.c5c6.worst_alpha)});
  r.summary.push_back(
      {"C6", sampled(r.c5c6.violations_beta == 0 && r.c5c6.violations_gamma == 0 && r.c5c6.positivity),
       "worst beta margin = " + format_number(r.c5c6.worst_beta) +
           ", worst gamma margin = " + format_number(r.c5c6.worst_gamma)});

  r.c7 = check_C7(p);
  r.summary.push_back({"C7", r.c7.passed ? CheckStatus::certified_pass : CheckStatus::fail,
                       std::string("e is ") + to_string(r.c7.membership.verdict) +
                           ", gamma(e) = " + format_number(r.c7.gamma_e)});

  try {
    r.c8 = verify_growth(p.cone(), p.beta(), p.gamma(), p.grid(), trials, seed + 1);
    r.summary.push_back({"C8", sampled(r.c8->passed()),
                         "worst beta - b(gamma) = " + format_number(r.c8->worst_b) +
                             ", worst gamma - c(beta) = " + format_number(r.c8->worst_c)});
  } catch (const Error& e) {
    r.c8_error = e.what();
    r.summary.push_back({"C8", CheckStatus::fail, r.c8_error});
  }
  return r;
}

std::vector<Annulus> annuli(Strategy strategy, const std::vector<double>& rho) {
  if (rho.size() != level_count(strategy))
    throw Error(ErrorKind::invalid_parameter, "annuli: wrong number of levels");
  using enum LevelKind;
  switch (strategy) {
    case Strategy::S1: return {{beta, rho[1], gamma, rho[0]}};
    case Strategy::S2: return {{gamma, rho[1], beta, rho[0]}};
    case Strategy::S3: return {{beta, rho[1], gamma, rho[0]}, {gamma, rho[2], beta, rho[1]}};
    case Strategy::S4: return {{gamma, rho[1], beta, rho[0]}, {beta, rho[2], gamma, rho[1]}};
  }
  return {};
}

Certificate certify(const HammersteinProblem& p, Strategy strategy, const std::vector<double>& rho) {
  if (rho.size() != level_count(strategy))
    throw Error(ErrorKind::invalid_parameter, std::string("strategy ") + to_string(strategy) + " needs " +
                                                  std::to_string(level_count(strategy)) + " levels, got " +
                                                  std::to_string(rho.size()));
  for (double r : rho)
    if (!(r > 0.0)) throw Error(ErrorKind::invalid_parameter, "levels must be > 0");

  Certificate c;
  c.strategy = strategy;
  c.levels = rho;
  const auto& cone = p.cone();
  switch (strategy) {
    case Strategy::S1:
      c.gaps = {gap(cone, "b", 2, 1, rho)};
      c.verdicts = {check_index0(p, rho[0]), check_index1(p, rho[1])};
      break;
    case Strategy::S2:
      c.gaps = {gap(cone, "c", 2, 1, rho)};
      c.verdicts = {check_index1(p, rho[0]), check_index0(p, rho[1])};
      break;
    case Strategy::S3:
      c.gaps = {gap(cone, "b", 2, 1, rho), gap(cone, "c", 3, 2, rho)};
      c.verdicts = {check_index0(p, rho[0]), check_index1(p, rho[1]), check_index0(p, rho[2])};
      break;
    case Strategy::S4:
      c.gaps = {gap(cone, "c", 2, 1, rho), gap(cone, "b", 3, 2, rho)};
      c.verdicts = {check_index1(p, rho[0]), check_index0(p, rho[1]), check_index1(p, rho[2])};
      break;
  }
  c.localization = annuli(strategy, rho);
  const bool ok = std::all_of(c.gaps.begin(), c.gaps.end(), [](const auto& g) { return g.holds; }) &&
                  std::all_of(c.verdicts.begin(), c.verdicts.end(), [](const auto& v) { return v.holds(); });
  if (ok) {
    c.conclusion = level_count(strategy) == 2 ? Conclusion::one_solution : Conclusion::two_solutions;
    c.note = "conditional on the fixed-point index lemmas; index values are not computed";
  } else {
    c.conclusion = Conclusion::not_established;
    c.localization.clear();
  }
  return c;
}

Certificate certify(const HammersteinProblem& p, Strategy strategy, const std::vector<double>& rho,
                    std::vector<HypothesisResult> hypotheses) {
  Certificate c = certify(p, strategy, rho);
  c.hypotheses = std::move(hypotheses);
  const bool ok = std::all_of(c.hypotheses.begin(), c.hypotheses.end(),
                              [](const auto& h) { return passed(h.status); });
  if (!ok && c.conclusion != Conclusion::not_established) {
    c.conclusion = Conclusion::not_established;
    c.localization.clear();
    c.note = "a hypothesis check failed";
  }
  return c;
}

}  // namespace coneham
