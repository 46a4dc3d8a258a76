#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coneham/certify.hpp"
#include "coneham/expr.hpp"

namespace coneham {

struct Tolerances {
  double tol = 1e-10;         // Picard residual target
  double membership = 1e-9;
  double oracle_tol = 1e-6;   // Nyström vs shooting, sup norm
  double damping = 1.0;
  int max_iter = 200;
  int trials = 1000;
  std::optional<std::uint64_t> seed;
};

/// A validated problem description.
///
///   f = 4/(abs(v)+4)          # top level or [problem]: f, g, e
///   [kernel]     kernel = green_dirichlet | expr(<t,s expression>)
///   [cone]       cone = concave_dirichlet | nonneg | custom(functional=<spec>)
///                beta = l2   gamma = integral
///   [quadrature] rule = trapezoid | gauss, n = 201, gauss_points = 4
///   [levels]     strategy = S1, rho = 0.05, 0.5
///   [tolerances] tol, membership, oracle_tol, damping, max_iter, trials, seed
///
/// Functional specs are a built-in label or min_window(a, b[, c[, sigma]]),
/// family_inf(expr, ...), stieltjes(h[, density=expr][, atom=pos:mass ...]).
struct ProblemFile {
  std::string kernel = "green_dirichlet";
  std::string g = "1";
  std::string f;
  std::string e;
  std::string cone;
  std::string beta;
  std::string gamma;
  Rule rule = Rule::trapezoid;
  int n = 201;
  int gauss_points = 4;
  Strategy strategy = Strategy::S1;
  std::vector<double> rho;
  Tolerances tolerances;
};

/// Errors carry ErrorKind::problem_file and name the offending field.
ProblemFile parse_problem_file(std::string_view text);
ProblemFile load_problem_file(const std::filesystem::path& path);

/// Resolves a functional spec such as "l2" or "min_window(0.25, 0.75, 0.5)".
Functional parse_functional_spec(std::string_view spec);

Kernel make_kernel(const std::string& spec);
ConeSpec make_cone(const std::string& spec, const std::string& beta, const std::string& gamma);

/// Discretizes the problem with the file's quadrature unless overridden.
HammersteinProblem build_problem(const ProblemFile& file, std::optional<Rule> rule = {},
                                 std::optional<int> n = {});

}  // namespace coneham
