#pragma once

#include "coneham/hammerstein.hpp"

namespace fixtures {

using namespace coneham;

inline HammersteinProblem worked(int n = 201, Rule rule = Rule::trapezoid) {
  return dirichlet_example_problem(build_quadrature(rule, n));
}

inline HammersteinProblem with_f(const HammersteinProblem& base, BivariateFn f) {
  auto parts = base.parts();
  parts.nonlinearity = std::move(f);
  return HammersteinProblem(std::move(parts));
}

inline HammersteinProblem with_reference(const HammersteinProblem& base, ScalarFn e) {
  auto parts = base.parts();
  parts.reference = std::move(e);
  return HammersteinProblem(std::move(parts));
}

inline HammersteinProblem constant_f(const HammersteinProblem& base, double c) {
  return with_f(base, [c](double, double) { return c; });
}

}  // namespace fixtures
