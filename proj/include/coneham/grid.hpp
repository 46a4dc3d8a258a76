#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "coneham/error.hpp"

namespace coneham {

enum class Rule { trapezoid, gauss_legendre };

const char* to_string(Rule rule);
Rule parse_rule(std::string_view text);

/// Quadrature rule on [0,1]. Weights integrate the constant 1 exactly;
/// nodes are strictly increasing.
class Quadrature {
 public:
  Rule rule() const noexcept { return rule_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  /// Panels for Gauss-Legendre, intervals for trapezoid.
  int panels() const noexcept { return panels_; }
  int points_per_panel() const noexcept { return points_per_panel_; }
  /// Equispaced nodes including both endpoints.
  bool uniform() const noexcept { return rule_ == Rule::trapezoid; }

  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  double node(std::size_t i) const { return nodes_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

  /// Piecewise-linear interpolation of nodal values; linear extrapolation
  /// beyond the outermost nodes (only reachable on Gauss grids).
  double interpolate(std::span<const double> values, double t) const;

 private:
  friend std::shared_ptr<const Quadrature> build_quadrature(Rule, int, int);

  Rule rule_ = Rule::trapezoid;
  int panels_ = 0;
  int points_per_panel_ = 0;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

using Grid = std::shared_ptr<const Quadrature>;

/// trapezoid: `n` nodes (n >= 2). gauss_legendre: `n` panels (n >= 1) with
/// `gauss_points` nodes each.
Grid build_quadrature(Rule rule, int n, int gauss_points = 4);

/// Same rule with the mesh width halved (2n-1 trapezoid nodes, 2n panels).
Grid refine(const Quadrature& q);

/// A continuous function on [0,1] stored by its values at the nodes of a
/// quadrature, interpolated piecewise-linearly in between.
class GridFunction {
 public:
  /// Empty placeholder without a grid.
  GridFunction() = default;
  GridFunction(Grid grid, std::vector<double> values);

  static GridFunction zeros(Grid grid);
  static GridFunction constant(Grid grid, double c);
  template <class F>
  static GridFunction sample(Grid grid, F&& fn) {
    std::vector<double> values(grid->size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = fn(grid->node(i));
    return GridFunction(std::move(grid), std::move(values));
  }

  const Grid& grid() const noexcept { return grid_; }
  const Quadrature& quadrature() const noexcept { return *grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double at(double t) const { return grid_->interpolate(values_, t); }

  double min() const;
  double max() const;

  GridFunction operator-() const;
  GridFunction& operator+=(const GridFunction& other);
  GridFunction& operator*=(double lambda);

 private:
  Grid grid_;
  std::vector<double> values_;
};

GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator*(double lambda, GridFunction u);

/// Σ weights·values. Throws a shape error on length mismatch.
double integrate(const Quadrature& q, std::span<const double> values);
double integrate(const Quadrature& q, const GridFunction& u);
inline double integrate(const GridFunction& u) { return integrate(u.quadrature(), u); }

struct Norms {
  double sup = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
};

/// sup over nodes (exact for the interpolant on grids with endpoint nodes);
/// l1, l2 by quadrature of |u| and u² taken nodewise.
Norms norms(const Quadrature& q, const GridFunction& u);
inline Norms norms(const GridFunction& u) { return norms(u.quadrature(), u); }

/// max_i |u_i - v_i| on a shared node set.
double sup_distance(const GridFunction& u, const GridFunction& v);

}  // namespace coneham
