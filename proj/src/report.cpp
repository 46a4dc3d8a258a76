#include "coneham/report.hpp"

#include <cstdio>

namespace coneham {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

const char* level_name(LevelKind k) { return k == LevelKind::beta ? "beta" : "gamma"; }

Json to_json(const Annulus& a) {
  return {{"outer", level_name(a.outer)},
          {"outer_rho", a.outer_rho},
          {"inner", level_name(a.inner)},
          {"inner_rho", a.inner_rho},
          {"set", a.describe()}};
}

Json to_json(const GapCheck& g) {
  return {{"description", g.description}, {"lhs", g.lhs}, {"rhs", g.rhs}, {"holds", g.holds}};
}

}  // namespace

Json to_json(const ProblemFile& pf) {
  Json j{{"kernel", pf.kernel}, {"g", pf.g},         {"f", pf.f},
         {"e", pf.e},           {"cone", pf.cone},   {"beta", pf.beta},
         {"gamma", pf.gamma},   {"rule", to_string(pf.rule)}, {"n", pf.n},
         {"strategy", to_string(pf.strategy)}, {"rho", pf.rho}};
  return j;
}

Json to_json(const PsiIntegral& psi) {
  return {{"value", psi.value}, {"error_estimate", psi.error_estimate}, {"coarse", psi.coarse}, {"fine", psi.fine}};
}

Json to_json(const IndexVerdict& v) {
  return {{"rho", v.rho},
          {"kind", to_string(v.kind)},
          {"level_constant", v.level.value},
          {"level_argmax_t", v.level.t},
          {"level_argmax_v", v.level.v},
          {"range", {v.level.range.lo, v.level.range.hi}},
          {"psi_integral", to_json(v.psi)},
          {"product", v.product},
          {"margin", v.margin},
          {"status", to_string(v.status)},
          {"holds", v.holds()},
          {"note", v.note}};
}

Json to_json(const HypothesisResult& h) {
  return {{"name", h.name}, {"status", to_string(h.status)}, {"passed", passed(h.status)}, {"detail", h.detail}};
}

Json to_json(const HypothesisReport& r) {
  Json c1_rows = Json::array();
  for (const auto& row : r.c1.rows) {
    Json j{{"delta", row.delta}, {"omega", row.omega}};
    j["allowed"] = row.allowed ? Json(*row.allowed) : Json(nullptr);
    c1_rows.push_back(j);
  }
  Json c4_rows = Json::array();
  for (const auto& row : r.c4.rows)
    c4_rows.push_back({{"r", row.r}, {"sup", row.sup}, {"min", row.min}, {"nonfinite", row.nonfinite},
                       {"negative", row.negative}});
  Json j{{"summary", Json::array()},
         {"c1", {{"status", to_string(r.c1.status)}, {"rows", c1_rows}, {"note", r.c1.note}}},
         {"c2", {{"passed", r.c2c3.c2_pass}, {"psi_min", r.c2c3.psi_min}}},
         {"c3", {{"passed", r.c2c3.c3_pass}, {"g_min", r.c2c3.g_min}, {"integrals_finite", r.c2c3.integrals_finite}}},
         {"c4", {{"passed", r.c4.passed}, {"rows", c4_rows}}},
         {"c5c6",
          {{"trials", r.c5c6.trials},
           {"violations_alpha", r.c5c6.violations_alpha},
           {"violations_beta", r.c5c6.violations_beta},
           {"violations_gamma", r.c5c6.violations_gamma},
           {"invariance_violations", r.c5c6.invariance_violations},
           {"worst_alpha", r.c5c6.worst_alpha},
           {"worst_beta", r.c5c6.worst_beta},
           {"worst_gamma", r.c5c6.worst_gamma},
           {"gamma_equality_gap", r.c5c6.gamma_equality_gap},
           {"psi_beta_integral", r.c5c6.psi_beta_integral},
           {"psi_gamma_integral", r.c5c6.psi_gamma_integral},
           {"positivity", r.c5c6.positivity}}},
         {"c7",
          {{"passed", r.c7.passed},
           {"membership", to_string(r.c7.membership.verdict)},
           {"alpha_e", r.c7.membership.margin},
           {"sup", r.c7.sup},
           {"gamma_e", r.c7.gamma_e}}},
         {"all_passed", r.all_passed()}};
  for (const auto& h : r.summary) j["summary"].push_back(to_json(h));
  if (r.c8) {
    j["c8"] = {{"trials", r.c8->trials},     {"violations_b", r.c8->violations_b},
               {"violations_c", r.c8->violations_c}, {"worst_b", r.c8->worst_b},
               {"worst_c", r.c8->worst_c},   {"passed", r.c8->passed()}};
  } else {
    j["c8"] = {{"passed", false}, {"error", r.c8_error}};
  }
  return j;
}

Json to_json(const Certificate& c) {
  Json j{{"strategy", to_string(c.strategy)},
         {"levels", c.levels},
         {"gaps", Json::array()},
         {"verdicts", Json::array()},
         {"hypotheses", Json::array()},
         {"conclusion", to_string(c.conclusion)},
         {"localization", Json::array()},
         {"note", c.note}};
  for (const auto& g : c.gaps) j["gaps"].push_back(to_json(g));
  for (const auto& v : c.verdicts) j["verdicts"].push_back(to_json(v));
  for (const auto& h : c.hypotheses) j["hypotheses"].push_back(to_json(h));
  for (const auto& a : c.localization) j["localization"].push_back(to_json(a));
  return j;
}

Json to_json(const Solution& s) {
  Json nodes = Json::array(), values = Json::array();
  for (std::size_t i = 0; i < s.u.size(); ++i) {
    nodes.push_back(s.u.quadrature().node(i));
    values.push_back(s.u[i]);
  }
  return {{"residual_sup", s.residual_sup},
          {"iterations", s.iterations},
          {"converged", s.converged},
          {"increments", s.increments},
          {"nodes", nodes},
          {"values", values}};
}

Json to_json(const LocalizationReport& l) {
  return {{"alpha_margin", l.alpha_margin}, {"beta", l.beta_value}, {"gamma", l.gamma_value},
          {"in_annulus", l.in_annulus},     {"annulus", to_json(l.annulus)}, {"tol", l.tol}};
}

Json to_json(const CrossValidation& cv) {
  return {{"sup_difference", cv.sup_difference}, {"tol", cv.tol}, {"passed", cv.passed}};
}

Json to_json(const AxiomReport& r) {
  return {{"trials", r.trials},
          {"seed", r.seed},
          {"claimed", r.claimed.to_string()},
          {"violations_a1", r.violations_a1},
          {"violations_a2", r.violations_a2},
          {"violations_a4", r.violations_a4},
          {"worst_a1", r.worst_a1},
          {"worst_a2", r.worst_a2},
          {"worst_a4", r.worst_a4},
          {"passed", r.passed()}};
}

void print_hypotheses(std::ostream& out, const HypothesisReport& r) {
  out << "hypothesis  status          detail\n";
  for (const auto& h : r.summary) {
    std::string status = to_string(h.status);
    status.resize(std::max<std::size_t>(status.size(), 15), ' ');
    out << "  " << h.name << "        " << status << " " << h.detail << "\n";
  }
  out << "  psi_beta integral  = " << fmt(r.c5c6.psi_beta_integral) << "\n";
  out << "  psi_gamma integral = " << fmt(r.c5c6.psi_gamma_integral) << "\n";
  out << "  psi_alpha min      = " << fmt(r.c2c3.psi_min) << "\n";
  out << "all hypotheses: " << (r.all_passed() ? "pass" : "FAIL") << "\n";
}

void print_certificate(std::ostream& out, const Certificate& c) {
  out << "strategy " << to_string(c.strategy) << ", levels";
  for (double rho : c.levels) out << " " << fmt(rho);
  out << "\n";
  for (const auto& g : c.gaps)
    out << "  gap " << g.description << ": " << fmt(g.lhs) << " vs " << fmt(g.rhs) << " -> "
        << (g.holds ? "holds" : "FAILS") << "\n";
  for (const auto& v : c.verdicts) {
    const bool upper = v.kind == IndexKind::index1;
    out << "  " << to_string(v.kind) << " at rho=" << fmt(v.rho) << ": " << (upper ? "f^rho" : "f_rho") << " = "
        << fmt(v.level.value) << ", psi integral = " << fmt(v.psi.value) << " (err " << fmt(v.psi.error_estimate)
        << "), product = " << fmt(v.product) << (upper ? " < 1" : " > 1") << " ? " << to_string(v.status)
        << " (margin " << fmt(v.margin) << ")\n";
    if (!v.note.empty()) out << "    note: " << v.note << "\n";
  }
  for (const auto& h : c.hypotheses)
    if (!passed(h.status)) out << "  hypothesis " << h.name << " failed: " << h.detail << "\n";
  out << "conclusion: " << to_string(c.conclusion) << "\n";
  for (const auto& a : c.localization) out << "  solution in " << a.describe() << "\n";
  if (!c.note.empty()) out << "  " << c.note << "\n";
}

void print_solution(std::ostream& out, const Solution& s, const LocalizationReport& loc,
                    const std::optional<CrossValidation>& cv) {
  out << "picard: " << (s.converged ? "converged" : "did not converge") << " after " << s.iterations
      << " applications of T, residual_sup = " << fmt(s.residual_sup) << "\n";
  out << "  alpha(u) = " << fmt(loc.alpha_margin) << ", beta(u) = " << fmt(loc.beta_value)
      << ", gamma(u) = " << fmt(loc.gamma_value) << "\n";
  out << "  annulus " << loc.annulus.describe() << ": in_annulus = " << (loc.in_annulus ? "true" : "false") << "\n";
  if (cv)
    out << "  oracle: sup difference = " << fmt(cv->sup_difference) << " (tol " << fmt(cv->tol) << ") -> "
        << (cv->passed ? "agrees" : "DISAGREES") << "\n";
  else
    out << "  oracle: not available for this kernel/weight\n";
}

void print_axiom_report(std::ostream& out, const std::string& label, const AxiomReport& r) {
  out << label << " claims " << r.claimed.to_string() << "; " << r.trials << " trials, seed " << r.seed << "\n";
  out << "  a1 violations " << r.violations_a1 << " (worst " << fmt(r.worst_a1) << ")\n";
  out << "  a2 violations " << r.violations_a2 << " (worst " << fmt(r.worst_a2) << ")\n";
  out << "  a4 violations " << r.violations_a4 << " (worst " << fmt(r.worst_a4) << ")\n";
  out << (r.passed() ? "pass" : "FAIL") << "\n";
}

}  // namespace coneham
