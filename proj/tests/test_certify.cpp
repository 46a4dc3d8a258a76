#include <doctest.h>

#include <cmath>

#include "coneham/certify.hpp"
#include "fixtures.hpp"

using namespace coneham;
using fixtures::constant_f;
using fixtures::worked;

TEST_CASE("S1 on the worked example") {
  const auto p = worked();
  const auto c = certify(p, Strategy::S1, {1.0 / 20, 0.5});
  REQUIRE(c.gaps.size() == 1);
  CHECK(c.gaps[0].holds);
  CHECK(c.gaps[0].lhs == 0.5);
  CHECK(c.gaps[0].rhs == doctest::Approx(0.1).epsilon(1e-15));
  REQUIRE(c.verdicts.size() == 2);
  CHECK(c.verdicts[0].kind == IndexKind::index0);
  CHECK(c.verdicts[1].kind == IndexKind::index1);
  CHECK(c.conclusion == Conclusion::one_solution);
  REQUIRE(c.localization.size() == 1);
  CHECK(c.localization[0].describe() == "K_alpha^{beta,0.5} \\ K_alpha^{gamma,0.05}");
  CHECK_FALSE(c.note.empty());
}

TEST_CASE("gap failures") {
  const auto p = worked();
  const auto c = certify(p, Strategy::S1, {1.0 / 20, 1.0 / 25});
  CHECK_FALSE(c.gaps[0].holds);
  CHECK(c.conclusion == Conclusion::not_established);
  CHECK(c.localization.empty());
  CHECK(certify(p, Strategy::S1, {0.05, 0.08}).conclusion == Conclusion::not_established);
  // b(0.05) = 0.1 exactly: the gap is strict.
  CHECK(certify(p, Strategy::S1, {0.05, 0.1}).conclusion == Conclusion::not_established);
}

TEST_CASE("strategy arity and levels are validated") {
  const auto p = worked();
  CHECK_THROWS_AS(certify(p, Strategy::S1, {0.05}), Error);
  CHECK_THROWS_AS(certify(p, Strategy::S3, {0.05, 0.5}), Error);
  CHECK_THROWS_AS(certify(p, Strategy::S1, {0.0, 0.5}), Error);
  CHECK(level_count(Strategy::S2) == 2);
  CHECK(level_count(Strategy::S4) == 3);
  CHECK(parse_strategy("S3") == Strategy::S3);
  CHECK_THROWS_AS(parse_strategy("S5"), Error);
}

TEST_CASE("S2 with reversed roles") {
  const auto p = worked();
  const auto c = certify(p, Strategy::S2, {0.05, 0.5});
  CHECK(c.verdicts[0].kind == IndexKind::index1);
  CHECK(c.verdicts[1].kind == IndexKind::index0);
  CHECK(c.conclusion == Conclusion::not_established);
}

TEST_CASE("S3 with a failing middle verdict") {
  const auto p = worked();
  const auto c = certify(p, Strategy::S3, {0.05, 0.5, 1.0});
  REQUIRE(c.verdicts.size() == 3);
  CHECK(c.verdicts[0].holds());
  CHECK(c.verdicts[1].holds());
  CHECK_FALSE(c.verdicts[2].holds());
  CHECK(c.conclusion == Conclusion::not_established);
}

TEST_CASE("S3 reaches two solutions when all three verdicts hold") {
  // test-only cone with a banded level envelope
  auto parts = worked().parts();
  parts.cone = ConeSpec(
      "banded", concave_dirichlet(), SamplerKind::green_smoothing,
      [](LevelKind, double rho) { return Interval{rho / 2, 2 * rho}; }, [](double rho) { return 2 * rho; },
      [](double rho) { return rho; });
  parts.nonlinearity = [](double, double v) {
    const double x = std::abs(v);
    return x <= 1 ? 1.0 : (x < 2.5 ? 1 + 66 * (x - 1) : 100.0);
  };
  const HammersteinProblem p(parts);
  const auto c = certify(p, Strategy::S3, {0.05, 0.5, 5});
  CHECK(c.gaps[0].holds);
  CHECK(c.gaps[1].holds);
  CHECK(c.verdicts[0].holds());
  CHECK(c.verdicts[1].holds());
  CHECK(c.verdicts[2].holds());
  CHECK(c.conclusion == Conclusion::two_solutions);
  CHECK(c.localization.size() == 2);
  CHECK(certify(p, Strategy::S3, {0.05, 0.5, 0.6}).conclusion == Conclusion::not_established);
}

TEST_CASE("annuli per strategy") {
  const auto s1 = annuli(Strategy::S1, {1, 2});
  CHECK(s1[0].outer == LevelKind::beta);
  CHECK(s1[0].outer_rho == 2);
  CHECK(s1[0].inner == LevelKind::gamma);
  CHECK(s1[0].inner_rho == 1);
  const auto s4 = annuli(Strategy::S4, {1, 2, 3});
  REQUIRE(s4.size() == 2);
  CHECK(s4[0].outer == LevelKind::gamma);
  CHECK(s4[1].outer == LevelKind::beta);
  CHECK(s4[1].outer_rho == 3);
  CHECK_THROWS_AS(annuli(Strategy::S2, {1}), Error);
}

TEST_CASE("adding a failing hypothesis can only withdraw the conclusion") {
  const auto p = worked();
  const auto good = certify(p, Strategy::S1, {0.05, 0.5}, {{"C1", CheckStatus::certified_pass, ""}});
  CHECK(good.conclusion == Conclusion::one_solution);
  const auto bad = certify(p, Strategy::S1, {0.05, 0.5},
                           {{"C1", CheckStatus::certified_pass, ""}, {"C4", CheckStatus::fail, "x"}});
  CHECK(bad.conclusion == Conclusion::not_established);
  CHECK(bad.localization.empty());
  const auto already = certify(p, Strategy::S1, {0.05, 0.08}, {{"C1", CheckStatus::certified_pass, ""}});
  CHECK(already.conclusion == Conclusion::not_established);
}

TEST_CASE("verify_hypotheses on the worked example") {
  const auto r = verify_hypotheses(worked(), 300, 5);
  REQUIRE(r.summary.size() == 8);
  CHECK(r.all_passed());
  CHECK(r.c1.status == CheckStatus::certified_pass);
  CHECK(r.c8.has_value());
}

TEST_CASE("verify_hypotheses flags a negative-psi functional") {
  auto parts = worked().parts();
  parts.cone = ConeSpec("neg", neg_sup(), SamplerKind::green_smoothing);
  const auto r = verify_hypotheses(HammersteinProblem(parts), 50, 5);
  CHECK_FALSE(r.all_passed());
  CHECK(r.summary[1].name == "C2");
  CHECK(r.summary[1].status == CheckStatus::fail);
  CHECK_FALSE(r.c8.has_value());
}

TEST_CASE("zero nonlinearity never certifies") {
  CHECK(certify(constant_f(worked(), 0.0), Strategy::S1, {0.05, 0.5}).conclusion == Conclusion::not_established);
}
