#include <doctest.h>

#include "coneham/axiom_checks.hpp"

using namespace coneham;

namespace {

const Grid kTrap = build_quadrature(Rule::trapezoid, 101);

}  // namespace

TEST_CASE("reports stay within their bounds") {
  for (const auto& label : builtin_functional_labels()) {
    const auto r = check_axioms(builtin_functional(label), generic_sampler(kTrap), 300, 8);
    CHECK(r.trials == 300);
    CHECK(r.violations_a1 <= r.trials);
    CHECK(r.violations_a2 <= r.trials);
    CHECK(r.violations_a4 <= r.trials);
    CHECK(r.claimed == builtin_functional(label).claims());
  }
}

TEST_CASE("only claimed axioms decide the verdict") {
  // sup is not superadditive but claims only a2.
  const auto r = check_axioms(sup_norm(), generic_sampler(kTrap), 300, 8);
  CHECK(r.violations_a1 > 0);
  CHECK(r.passed());
  const auto forced = check_axioms(with_claims(sup_norm(), kA1A2), generic_sampler(kTrap), 300, 8);
  CHECK_FALSE(forced.passed());
}

TEST_CASE("a4 necessary part catches a sign-indefinite claim") {
  const auto r = check_axioms(with_claims(l1_norm(), kA1A2A4), generic_sampler(kTrap), 300, 8);
  CHECK(r.violations_a4 > 0);
  CHECK_FALSE(r.passed());
}

TEST_CASE("worst margins are recorded") {
  const auto r = check_axioms(concave_dirichlet(), generic_sampler(kTrap), 300, 8);
  CHECK(r.passed());
  CHECK(r.worst_a1 >= -1e-9);
  CHECK(r.worst_a2 >= -1e-9);
  CHECK(r.worst_a4 >= -1e-9);
  CHECK(r.worst_margin >= -1e-9);
}

TEST_CASE("trials must be positive") { CHECK_THROWS_AS(check_axioms(l1_norm(), generic_sampler(kTrap), 0, 1), Error); }

TEST_CASE("lemsc verdict strings") {
  CHECK(std::string(to_string(LemscReport::Verdict::counterexample)) == "counterexample");
  CHECK(std::string(to_string(LemscReport::Verdict::no_counterexample_found)) == "no-counterexample-found");
}
