#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coneham/grid.hpp"

namespace coneham {

using ScalarFn = std::function<double(double)>;          // t ↦ σ(t)
using BivariateFn = std::function<double(double, double)>;  // (t, x) ↦ h(t, x)

/// Axioms a functional claims: (a1) superadditivity, (a2) positive
/// super-homogeneity, (a4) α(u)+α(-u) <= 0 with joint zero only at u = 0.
struct AxiomSet {
  bool superadditive = false;
  bool homogeneous = false;
  bool sign_definite = false;

  friend bool operator==(const AxiomSet&, const AxiomSet&) = default;
  AxiomSet intersect(const AxiomSet& o) const {
    return {superadditive && o.superadditive, homogeneous && o.homogeneous,
            sign_definite && o.sign_definite};
  }
  std::string to_string() const;
};

inline constexpr AxiomSet kA1A2{true, true, false};
inline constexpr AxiomSet kA1A2A4{true, true, true};

/// A deterministic evaluator u ↦ α(u) on grid functions.
class Functional {
 public:
  using Eval = std::function<double(const GridFunction&)>;

  Functional(std::string label, AxiomSet claims, Eval eval)
      : label_(std::move(label)), claims_(claims), eval_(std::move(eval)) {}

  double operator()(const GridFunction& u) const { return eval_(u); }
  const std::string& label() const noexcept { return label_; }
  AxiomSet claims() const noexcept { return claims_; }

 private:
  std::string label_;
  AxiomSet claims_;
  Eval eval_;
};

// Evaluators.

/// min over nodes in [a,b] of σ(t)u(t), minus c·‖u‖_sup.
double eval_min_window(const GridFunction& u, double a, double b, const ScalarFn& sigma, double c);
/// max(min u, -max u).
double eval_nparallel(const GridFunction& u);
/// Node-pair relaxation of inf_{t,s} [u((t+s)/2) - (u(t)+u(s))/2].
double eval_jensen_gap(const GridFunction& u);
/// min{jensen gap, u(0), -u(0), u(1), -u(1)}: nonnegative exactly on concave
/// functions vanishing at both ends.
double eval_concave_dirichlet(const GridFunction& u);

/// Nonnegative measure on [0,1]: an absolutely continuous part plus atoms.
struct Measure {
  struct Atom {
    double position;
    double mass;
  };
  ScalarFn density;  // empty means no continuous part
  std::vector<Atom> atoms;

  static Measure lebesgue();
  static Measure point(double position, double mass = 1.0);
};

/// ∫ h(t, u(t)) dA(t).
double eval_stieltjes(const GridFunction& u, const BivariateFn& h, const Measure& measure);
/// min over σ ∈ S of min over nodes of σ(t)u(t).
double eval_family_inf(const GridFunction& u, const std::vector<ScalarFn>& family);
/// min(0, min u) = -dist_sup(u, {v >= 0}).
double eval_dist_nonneg(const GridFunction& u);

// Built-in functionals.

Functional min_window(double a, double b, double c, ScalarFn sigma = {});
Functional nparallel();
Functional jensen_gap();
Functional concave_dirichlet();
Functional stieltjes(BivariateFn h, Measure measure, std::string h_text = "h");
Functional family_inf(std::vector<ScalarFn> family);
Functional dist_nonneg();
Functional l1_norm();
Functional l2_norm();
Functional sup_norm();
Functional neg_sup();
/// u ↦ ∫u (linear; coincides with l1 on nonnegative functions).
Functional integral();

/// Parameterless built-ins by label: nparallel, jensen_gap, concave_dirichlet,
/// dist_nonneg, l1, l2, sup, neg_sup, integral. Throws invalid-parameter.
Functional builtin_functional(const std::string& label);
std::vector<std::string> builtin_functional_labels();

// Combinators.

Functional combine_min(const Functional& a, const Functional& b);
Functional scale(double lambda, const Functional& a);
/// Σ α_j. Claims a1/a2 shared by every term; never a4 (see sum_checked).
Functional sum(const std::vector<Functional>& terms);
/// u ↦ α(-u).
Functional reflect(const Functional& a);
Functional with_claims(const Functional& a, AxiomSet claims);

}  // namespace coneham
