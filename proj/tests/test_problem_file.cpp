#include <doctest.h>

#include <cmath>
#include <string>

#include "coneham/problem_file.hpp"

using namespace coneham;

namespace {

const std::string kMinimal = R"(
f = 4/(abs(v)+4)
e = t*(1-t)
[cone]
cone = concave_dirichlet
beta = l2
gamma = integral
[levels]
rho = 0.05, 0.5
)";

std::string problem_error(const std::string& text) {
  try {
    parse_problem_file(text);
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::problem_file);
    return e.what();
  }
  FAIL("expected a problem-file error");
  return {};
}

std::string without(const std::string& text, const std::string& line) {
  std::string out = text;
  out.erase(out.find(line), line.size());
  return out;
}

}  // namespace

TEST_CASE("the shipped example") {
  const ProblemFile pf = load_problem_file("examples/paper_sec4.problem");
  CHECK(pf.strategy == Strategy::S1);
  CHECK(pf.rho == std::vector<double>{0.05, 0.5});
  CHECK(pf.kernel == "green_dirichlet");
  CHECK(pf.f == "4/(abs(v)+4)");
  CHECK(pf.cone == "concave_dirichlet");
  CHECK(pf.beta == "l2");
  CHECK(pf.gamma == "integral");
  CHECK(pf.rule == Rule::trapezoid);
  CHECK(pf.n == 201);
  CHECK(pf.tolerances.tol == 1e-10);
  const auto p = build_problem(pf);
  const auto ref = dirichlet_example_problem(build_quadrature(Rule::trapezoid, 201));
  const auto u = GridFunction::sample(p.grid(), [](double t) { return std::sin(3 * t); });
  CHECK(sup_distance(p.apply_T(u), ref.apply_T(u)) < 1e-15);
  CHECK(p.cone().growth_b(0.05) == ref.cone().growth_b(0.05));
}

TEST_CASE("defaults") {
  const ProblemFile pf = parse_problem_file(kMinimal);
  CHECK(pf.n == 201);
  CHECK(pf.rule == Rule::trapezoid);
  CHECK(pf.tolerances.tol == 1e-10);
  CHECK(pf.g == "1");
  CHECK(pf.kernel == "green_dirichlet");
  CHECK(pf.strategy == Strategy::S1);
  CHECK_FALSE(pf.tolerances.seed.has_value());
}

TEST_CASE("missing fields are named") {
  CHECK(problem_error(without(kMinimal, "f = 4/(abs(v)+4)")).find("'f'") != std::string::npos);
  CHECK(problem_error(without(kMinimal, "rho = 0.05, 0.5")).find("'rho'") != std::string::npos);
  CHECK(problem_error(without(kMinimal, "beta = l2")).find("'beta'") != std::string::npos);
}

TEST_CASE("rho arity") {
  std::string s3 = kMinimal;
  s3.replace(s3.find("[levels]"), 8, "[levels]\nstrategy = S3");
  const auto arity = problem_error(s3);
  CHECK(arity.find("rho") != std::string::npos);
  CHECK(arity.find("S3") != std::string::npos);
  s3.replace(s3.find("rho = 0.05, 0.5"), 15, "rho = 0.05, 0.5, 1");
  CHECK(parse_problem_file(s3).rho.size() == 3);
}

TEST_CASE("unresolvable labels are named") {
  auto bad = [](const std::string& from, const std::string& to) {
    std::string s = kMinimal;
    s.replace(s.find(from), from.size(), to);
    return problem_error(s);
  };
  CHECK(bad("beta = l2", "beta = l7").find("l7") != std::string::npos);
  CHECK(bad("cone = concave_dirichlet", "cone = convex").find("convex") != std::string::npos);
  CHECK(problem_error(kMinimal + "[kernel]\nkernel = bessel\n").find("bessel") != std::string::npos);
  CHECK(bad("f = 4/(abs(v)+4)", "f = 4/(abs(w)+4)").find("field f") != std::string::npos);
  CHECK(bad("e = t*(1-t)", "e = t*v").find("field e") != std::string::npos);
}

TEST_CASE("structural errors") {
  CHECK(problem_error("[nowhere]\n").find("nowhere") != std::string::npos);
  CHECK(problem_error("f 4\n").find("line 1") != std::string::npos);
  CHECK(problem_error(kMinimal + "colour = red\n").find("colour") != std::string::npos);
  CHECK(problem_error(kMinimal + "[tolerances]\nrho = 1, 2\n").find("[tolerances]") != std::string::npos);
  CHECK(problem_error(kMinimal + "[problem]\nf = 1\n").find("twice") != std::string::npos);
  CHECK(problem_error(kMinimal + "[quadrature]\nn = many\n").find("n") != std::string::npos);
  CHECK(problem_error(kMinimal + "[tolerances]\ndamping = 2\n").find("damping") != std::string::npos);
  CHECK_THROWS_AS(load_problem_file("examples/does_not_exist.problem"), Error);
}

TEST_CASE("comments, sections and overrides") {
  const ProblemFile pf = parse_problem_file(kMinimal + R"(
# quadrature block
[quadrature]
rule = gauss   # trailing comment
n = 20
[tolerances]
seed = 17
trials = 50
max_iter = 80
[kernel]
kernel = expr(min(t, s) - t*s)
)");
  CHECK(pf.rule == Rule::gauss_legendre);
  CHECK(pf.n == 20);
  CHECK(pf.tolerances.seed == 17u);
  CHECK(pf.tolerances.trials == 50);
  CHECK(pf.tolerances.max_iter == 80);
  const auto p = build_problem(pf);
  CHECK(p.grid()->size() == 80);
  const auto ref = dirichlet_example_problem(p.grid());
  const auto u = GridFunction::sample(p.grid(), [](double t) { return t; });
  CHECK(sup_distance(p.apply_T(u), ref.apply_T(u)) < 1e-15);
  CHECK(build_problem(pf, Rule::trapezoid, 11).grid()->size() == 11);
}

TEST_CASE("functional specs") {
  const Grid g = build_quadrature(Rule::trapezoid, 101);
  const auto one = GridFunction::constant(g, 1.0);
  CHECK(parse_functional_spec("l2")(one) == doctest::Approx(1.0));
  CHECK(parse_functional_spec("min_window(0.25, 0.75, 0.5)")(one) == 0.5);
  CHECK(parse_functional_spec("min_window(0.5, 1, 0, 2*t)")(one) == 1.0);
  CHECK(parse_functional_spec("min_window(1/4, 3/4)")(one) == 1.0);
  CHECK(parse_functional_spec("family_inf(t, 1-t)")(one) == 0.0);
  CHECK(parse_functional_spec("stieltjes(v, atom=0.5:2)")(one) == 2.0);
  CHECK(parse_functional_spec("stieltjes(h=v*exp(t))")(one) == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-4));
  CHECK(parse_functional_spec("stieltjes(v, density=2*t, atom=0:1)")(one) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(parse_functional_spec("min_window(0.5)"), Error);
  CHECK_THROWS_AS(parse_functional_spec("stieltjes(density=1)"), Error);
  CHECK_THROWS_AS(parse_functional_spec("family_inf()"), Error);
  CHECK_THROWS_AS(parse_functional_spec("min_window(0.7, 0.2)"), Error);
  CHECK_THROWS_AS(parse_functional_spec("gauss_window(0, 1)"), Error);
}

TEST_CASE("cone and kernel specs") {
  CHECK(make_cone("nonneg", "sup", "sup").label() == "nonneg");
  const auto custom = make_cone("custom(functional=min_window(0.25, 0.75, 0.5))", "l2", "integral");
  CHECK(custom.label() == "custom(min_window)");
  CHECK_FALSE(custom.has_range_bound());
  CHECK_THROWS_AS(make_cone("custom(min_window(0, 1))", "l2", "l2"), Error);
  CHECK(make_kernel("green_dirichlet").t_deriv_bound() == 1.0);
  const Kernel k = make_kernel("expr(exp(-abs(t-s)))");
  CHECK(k(0.5, 0.5) == 1.0);
  CHECK_FALSE(k.t_deriv_bound().has_value());
  CHECK_THROWS_AS(make_kernel("expr(t*v)"), Error);
}
