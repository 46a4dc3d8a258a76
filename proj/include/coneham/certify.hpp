#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coneham/hammerstein.hpp"

namespace coneham {

enum class Strategy { S1, S2, S3, S4 };
enum class Conclusion { one_solution, two_solutions, not_established };

const char* to_string(Strategy s);
Strategy parse_strategy(const std::string& text);
const char* to_string(Conclusion c);
/// Number of levels a strategy consumes (2 or 3).
std::size_t level_count(Strategy s);

/// Solutions u in K_α with inner(u) >= inner_rho and outer(u) <= outer_rho,
/// i.e. the set K_α^{outer,outer_rho} \ K_α^{inner,inner_rho}.
struct Annulus {
  LevelKind outer = LevelKind::beta;
  double outer_rho = 0.0;
  LevelKind inner = LevelKind::gamma;
  double inner_rho = 0.0;

  std::string describe() const;
};

/// Localization sets a strategy yields, one per solution.
std::vector<Annulus> annuli(Strategy strategy, const std::vector<double>& rho);

struct GapCheck {
  std::string description;  // e.g. "rho2 > b(rho1)"
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

struct HypothesisResult {
  std::string name;  // C1 .. C8
  CheckStatus status = CheckStatus::fail;
  std::string detail;
};

/// Full per-hypothesis evidence for (C1)-(C8).
struct HypothesisReport {
  ModulusReport c1;
  C2C3Report c2c3;
  C4Report c4;
  C5C6Report c5c6;
  C7Report c7;
  std::optional<GrowthReport> c8;
  std::string c8_error;
  std::vector<HypothesisResult> summary;

  bool all_passed() const;
};

HypothesisReport verify_hypotheses(const HammersteinProblem& p, int trials, std::uint64_t seed);

/// Verdicts for the existence theorem. The fixed-point index itself is never
/// computed: a positive conclusion is conditional on the index lemmas, with
/// every hypothesis they consume attached.
struct Certificate {
  Strategy strategy = Strategy::S1;
  std::vector<double> levels;
  std::vector<GapCheck> gaps;
  std::vector<IndexVerdict> verdicts;
  std::vector<HypothesisResult> hypotheses;  // empty when not verified
  Conclusion conclusion = Conclusion::not_established;
  std::vector<Annulus> localization;
  std::string note;
};

Certificate certify(const HammersteinProblem& p, Strategy strategy, const std::vector<double>& rho);
/// As above; the conclusion additionally requires every hypothesis to pass.
Certificate certify(const HammersteinProblem& p, Strategy strategy, const std::vector<double>& rho,
                    std::vector<HypothesisResult> hypotheses);

}  // namespace coneham
