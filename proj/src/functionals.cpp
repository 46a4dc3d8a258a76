#include "coneham/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coneham/parallel.hpp"

namespace coneham {

std::string AxiomSet::to_string() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(superadditive, "a1");
  add(homogeneous, "a2");
  add(sign_definite, "a4");
  return out.empty() ? "none" : out;
}

double eval_min_window(const GridFunction& u, double a, double b, const ScalarFn& sigma, double c) {
  if (!(0.0 <= a && a < b && b <= 1.0))
    throw Error(ErrorKind::invalid_parameter, "min_window needs 0 <= a < b <= 1");
  if (c < 0.0) throw Error(ErrorKind::invalid_parameter, "min_window needs c >= 0");
  const auto t = u.quadrature().nodes();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (t[i] < a || t[i] > b) continue;
    const double s = sigma ? sigma(t[i]) : 1.0;
    if (s < 0.0) throw Error(ErrorKind::invalid_parameter, "min_window weight sigma must be >= 0");
    best = std::min(best, s * u[i]);
  }
  if (std::isinf(best))
    throw Error(ErrorKind::invalid_parameter, "min_window: no grid nodes in the window");
  return c == 0.0 ? best : best - c * norms(u).sup;
}

double eval_nparallel(const GridFunction& u) { return std::max(u.min(), -u.max()); }

double eval_jensen_gap(const GridFunction& u) {
  return midpoint_gap(u.quadrature(), u.values());
}

double eval_concave_dirichlet(const GridFunction& u) {
  const double left = u.at(0.0);
  const double right = u.at(1.0);
  const double ends = std::min({left, -left, right, -right});
  return std::min(eval_jensen_gap(u), ends);
}

Measure Measure::lebesgue() { return Measure{[](double) { return 1.0; }, {}}; }
Measure Measure::point(double position, double mass) { return Measure{{}, {{position, mass}}}; }

double eval_stieltjes(const GridFunction& u, const BivariateFn& h, const Measure& measure) {
  const auto& q = u.quadrature();
  double total = 0.0;
  if (measure.density) {
    const auto t = q.nodes();
    const auto w = q.weights();
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double d = measure.density(t[i]);
      if (!(d >= 0.0)) throw Error(ErrorKind::invalid_measure, "measure density must be >= 0");
      total += w[i] * d * h(t[i], u[i]);
    }
  }
  for (const auto& atom : measure.atoms) {
    if (!(atom.mass >= 0.0)) throw Error(ErrorKind::invalid_measure, "atom mass must be >= 0");
    if (atom.position < 0.0 || atom.position > 1.0)
      throw Error(ErrorKind::invalid_measure, "atom position must lie in [0,1]");
    total += atom.mass * h(atom.position, u.at(atom.position));
  }
  return total;
}

double eval_family_inf(const GridFunction& u, const std::vector<ScalarFn>& family) {
  if (family.empty()) throw Error(ErrorKind::invalid_parameter, "family_inf needs a nonempty family");
  const auto t = u.quadrature().nodes();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& sigma : family)
    for (std::size_t i = 0; i < u.size(); ++i) best = std::min(best, sigma(t[i]) * u[i]);
  return best;
}

double eval_dist_nonneg(const GridFunction& u) { return std::min(0.0, u.min()); }

Functional min_window(double a, double b, double c, ScalarFn sigma) {
  if (!(0.0 <= a && a < b && b <= 1.0))
    throw Error(ErrorKind::invalid_parameter, "min_window needs 0 <= a < b <= 1");
  if (c < 0.0) throw Error(ErrorKind::invalid_parameter, "min_window needs c >= 0");
  return Functional("min_window", kA1A2A4, [=](const GridFunction& u) {
    return eval_min_window(u, a, b, sigma, c);
  });
}

// not superadditive: u ≡ 1, v ≡ -1
Functional nparallel() { return Functional("nparallel", AxiomSet{false, true, false}, eval_nparallel); }
Functional jensen_gap() { return Functional("jensen_gap", kA1A2, eval_jensen_gap); }
Functional concave_dirichlet() {
  return Functional("concave_dirichlet", kA1A2A4, eval_concave_dirichlet);
}

Functional stieltjes(BivariateFn h, Measure measure, std::string h_text) {
  for (const auto& atom : measure.atoms)
    if (!(atom.mass >= 0.0)) throw Error(ErrorKind::invalid_measure, "atom mass must be >= 0");
  // Superadditivity of h is the caller's claim.
  return Functional("stieltjes[" + h_text + "]", kA1A2,
                    [h = std::move(h), m = std::move(measure)](const GridFunction& u) {
                      return eval_stieltjes(u, h, m);
                    });
}

Functional family_inf(std::vector<ScalarFn> family) {
  if (family.empty()) throw Error(ErrorKind::invalid_parameter, "family_inf needs a nonempty family");
  return Functional("family_inf", kA1A2, [f = std::move(family)](const GridFunction& u) {
    return eval_family_inf(u, f);
  });
}

Functional dist_nonneg() { return Functional("dist_nonneg", kA1A2A4, eval_dist_nonneg); }

// Norms are subadditive, so only positive homogeneity is claimed.
Functional l1_norm() {
  return Functional("l1", {false, true, false}, [](const GridFunction& u) { return norms(u).l1; });
}
Functional l2_norm() {
  return Functional("l2", {false, true, false}, [](const GridFunction& u) { return norms(u).l2; });
}
Functional sup_norm() {
  return Functional("sup", {false, true, false}, [](const GridFunction& u) { return norms(u).sup; });
}
Functional neg_sup() {
  return Functional("neg_sup", kA1A2A4, [](const GridFunction& u) { return -norms(u).sup; });
}
Functional integral() {
  return Functional("integral", kA1A2, [](const GridFunction& u) { return integrate(u); });
}

Functional builtin_functional(const std::string& label) {
  if (label == "nparallel") return nparallel();
  if (label == "jensen_gap") return jensen_gap();
  if (label == "concave_dirichlet") return concave_dirichlet();
  if (label == "dist_nonneg") return dist_nonneg();
  if (label == "l1") return l1_norm();
  if (label == "l2") return l2_norm();
  if (label == "sup") return sup_norm();
  if (label == "neg_sup") return neg_sup();
  if (label == "integral") return integral();
  throw Error(ErrorKind::invalid_parameter, "unknown functional '" + label + "'");
}

std::vector<std::string> builtin_functional_labels() {
  return {"nparallel", "jensen_gap", "concave_dirichlet", "dist_nonneg", "l1",
          "l2",        "sup",        "neg_sup",           "integral"};
}

Functional combine_min(const Functional& a, const Functional& b) {
  AxiomSet claims = a.claims().intersect(b.claims());
  claims.sign_definite = false;
  return Functional("min(" + a.label() + "," + b.label() + ")", claims,
                    [a, b](const GridFunction& u) { return std::min(a(u), b(u)); });
}

Functional scale(double lambda, const Functional& a) {
  if (!(lambda >= 0.0)) throw Error(ErrorKind::invalid_parameter, "scale needs lambda >= 0");
  AxiomSet claims = a.claims();
  if (lambda == 0.0) claims.sign_definite = false;
  return Functional(std::to_string(lambda) + "*" + a.label(), claims,
                    [lambda, a](const GridFunction& u) { return lambda == 0.0 ? 0.0 : lambda * a(u); });
}

Functional sum(const std::vector<Functional>& terms) {
  if (terms.empty()) throw Error(ErrorKind::invalid_parameter, "sum needs at least one term");
  AxiomSet claims = terms.front().claims();
  std::string label = "sum(";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    claims = claims.intersect(terms[i].claims());
    label += (i ? "," : "") + terms[i].label();
  }
  claims.sign_definite = false;
  return Functional(label + ")", claims, [terms](const GridFunction& u) {
    double total = 0.0;
    for (const auto& t : terms) total += t(u);
    return total;
  });
}

Functional reflect(const Functional& a) {
  return Functional("reflect(" + a.label() + ")", {},
                    [a](const GridFunction& u) { return a(-u); });
}

Functional with_claims(const Functional& a, AxiomSet claims) {
  return Functional(a.label(), claims, [a](const GridFunction& u) { return a(u); });
}

}  // namespace coneham
