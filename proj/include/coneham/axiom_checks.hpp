#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coneham/functionals.hpp"
#include "coneham/sampling.hpp"

namespace coneham {

/// Randomized search for violations of (a1), (a2) and the necessary half of
/// (a4). A clean report is evidence, not proof.
struct AxiomReport {
  int trials = 0;
  std::uint64_t seed = 0;
  AxiomSet claimed;
  int violations_a1 = 0;
  int violations_a2 = 0;
  int violations_a4 = 0;
  double worst_a1 = 0.0;  // min of α(u+v) - α(u) - α(v)
  double worst_a2 = 0.0;  // min of α(λu) - λα(u)
  double worst_a4 = 0.0;  // min of -(α(u) + α(-u))
  double worst_margin = 0.0;  // worst over claimed axioms

  /// No violations among the claimed axioms.
  bool passed() const;
};

AxiomReport check_axioms(const Functional& alpha, const FunctionSampler& sampler, int trials,
                         std::uint64_t seed, double tol = 1e-9);

/// Sampled check of the sum lemma: (5) α_j + α̃_j <= 0 for each j, and (6)
/// no nonzero u with α_j(u) + α_j(-u) = 0 for every j.
struct LemscReport {
  enum class Verdict { no_counterexample_found, condition5_violated, counterexample };

  int trials = 0;
  std::uint64_t seed = 0;
  int condition5_violations = 0;
  double worst_condition5 = 0.0;  // max of α_j(u) + α_j(-u)
  std::optional<GridFunction> condition5_witness;
  std::optional<GridFunction> counterexample;

  Verdict verdict() const;
};

const char* to_string(LemscReport::Verdict verdict);

LemscReport check_lemsc(const std::vector<Functional>& terms, const FunctionSampler& sampler,
                        int trials, std::uint64_t seed, double tol = 1e-9);

/// sum(terms), claiming (a4) only when check_lemsc finds nothing.
Functional sum_checked(const std::vector<Functional>& terms, const FunctionSampler& sampler,
                       int trials, std::uint64_t seed, LemscReport* report = nullptr);

}  // namespace coneham
