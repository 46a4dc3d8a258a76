#include "coneham/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <boost/math/special_functions/legendre.hpp>

namespace coneham {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::shape: return "shape";
    case ErrorKind::invalid_measure: return "invalid-measure";
    case ErrorKind::sampling_failure: return "sampling-failure";
    case ErrorKind::unsupported_cone: return "unsupported-cone";
    case ErrorKind::nonlinearity_domain: return "nonlinearity-domain";
    case ErrorKind::oracle_failure: return "oracle-failure";
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::evaluation: return "evaluation";
    case ErrorKind::problem_file: return "problem-file";
  }
  return "unknown";
}

const char* to_string(Rule rule) {
  return rule == Rule::trapezoid ? "trapezoid" : "gauss-legendre";
}

Rule parse_rule(std::string_view text) {
  if (text == "trapezoid" || text == "composite-trapezoid") return Rule::trapezoid;
  if (text == "gauss" || text == "gauss-legendre" || text == "composite-gauss-legendre")
    return Rule::gauss_legendre;
  throw Error(ErrorKind::invalid_parameter, "unknown quadrature rule '" + std::string(text) + "'");
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1], ascending.
void legendre_rule(int points, std::vector<double>& x, std::vector<double>& w) {
  using boost::math::legendre_p_prime;
  const auto positive = boost::math::legendre_p_zeros<double>(points);
  x.clear();
  for (auto it = positive.rbegin(); it != positive.rend(); ++it)
    if (*it != 0.0) x.push_back(-*it);
  for (double z : positive) x.push_back(z);
  w.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dp = legendre_p_prime(points, x[i]);
    w[i] = 2.0 / ((1.0 - x[i] * x[i]) * dp * dp);
  }
}

}  // namespace

Grid build_quadrature(Rule rule, int n, int gauss_points) {
  auto q = std::shared_ptr<Quadrature>(new Quadrature());
  q->rule_ = rule;
  if (rule == Rule::trapezoid) {
    if (n < 2)
      throw Error(ErrorKind::invalid_parameter, "trapezoid rule needs n >= 2, got " + std::to_string(n));
    const int intervals = n - 1;
    const double h = 1.0 / intervals;
    q->panels_ = intervals;
    q->points_per_panel_ = 2;
    q->nodes_.resize(n);
    q->weights_.assign(n, h);
    for (int i = 0; i < n; ++i) q->nodes_[i] = static_cast<double>(i) / intervals;
    q->weights_.front() = q->weights_.back() = 0.5 * h;
  } else {
    if (n < 1)
      throw Error(ErrorKind::invalid_parameter, "Gauss-Legendre rule needs >= 1 panel, got " + std::to_string(n));
    if (gauss_points < 1)
      throw Error(ErrorKind::invalid_parameter, "Gauss-Legendre rule needs >= 1 point per panel");
    std::vector<double> x, w;
    legendre_rule(gauss_points, x, w);
    q->panels_ = n;
    q->points_per_panel_ = gauss_points;
    const double h = 1.0 / n;
    for (int p = 0; p < n; ++p) {
      const double left = p * h;
      for (std::size_t k = 0; k < x.size(); ++k) {
        q->nodes_.push_back(left + 0.5 * h * (x[k] + 1.0));
        q->weights_.push_back(0.5 * h * w[k]);
      }
    }
  }
  // Renormalize away the last-ulp drift so weights integrate 1 to ~1e-16.
  const double total = std::accumulate(q->weights_.begin(), q->weights_.end(), 0.0);
  for (double& w : q->weights_) w /= total;
  return q;
}

Grid refine(const Quadrature& q) {
  if (q.rule() == Rule::trapezoid)
    return build_quadrature(Rule::trapezoid, 2 * static_cast<int>(q.size()) - 1);
  return build_quadrature(Rule::gauss_legendre, 2 * q.panels(), q.points_per_panel());
}

double Quadrature::interpolate(std::span<const double> values, double t) const {
  const std::size_t n = nodes_.size();
  if (values.size() != n)
    throw Error(ErrorKind::shape, "interpolate: value count does not match node count");
  if (n == 1) return values[0];
  std::size_t i;
  if (uniform()) {
    const double pos = t * static_cast<double>(n - 1);
    const double f = std::floor(pos);
    i = f <= 0.0 ? 0 : std::min(static_cast<std::size_t>(f), n - 2);
    if (pos == f && f >= 0.0 && static_cast<std::size_t>(f) < n) return values[static_cast<std::size_t>(f)];
  } else {
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
    const auto k = static_cast<std::size_t>(it - nodes_.begin());
    i = k == 0 ? 0 : std::min(k - 1, n - 2);
  }
  const double t0 = nodes_[i], t1 = nodes_[i + 1];
  if (t == t0) return values[i];
  if (t == t1) return values[i + 1];
  const double lambda = (t - t0) / (t1 - t0);
  return values[i] + lambda * (values[i + 1] - values[i]);
}

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw Error(ErrorKind::shape, "grid function without a grid");
  if (values_.size() != grid_->size())
    throw Error(ErrorKind::shape, "grid function has " + std::to_string(values_.size()) +
                                      " values for " + std::to_string(grid_->size()) + " nodes");
}

GridFunction GridFunction::zeros(Grid grid) { return constant(std::move(grid), 0.0); }

GridFunction GridFunction::constant(Grid grid, double c) {
  std::vector<double> values(grid->size(), c);
  return GridFunction(std::move(grid), std::move(values));
}

double GridFunction::min() const { return *std::min_element(values_.begin(), values_.end()); }
double GridFunction::max() const { return *std::max_element(values_.begin(), values_.end()); }

GridFunction GridFunction::operator-() const {
  GridFunction out = *this;
  for (double& v : out.values_) v = -v;
  return out;
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  if (other.size() != size()) throw Error(ErrorKind::shape, "adding grid functions of different size");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

GridFunction& GridFunction::operator*=(double lambda) {
  for (double& v : values_) v *= lambda;
  return *this;
}

GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator-(GridFunction a, const GridFunction& b) { return a += -b; }
GridFunction operator*(double lambda, GridFunction u) { return u *= lambda; }

double integrate(const Quadrature& q, std::span<const double> values) {
  if (values.size() != q.size())
    throw Error(ErrorKind::shape, "integrate: " + std::to_string(values.size()) + " values for " +
                                      std::to_string(q.size()) + " nodes");
  const auto w = q.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) sum += w[i] * values[i];
  return sum;
}

double integrate(const Quadrature& q, const GridFunction& u) { return integrate(q, u.values()); }

Norms norms(const Quadrature& q, const GridFunction& u) {
  if (u.size() != q.size()) throw Error(ErrorKind::shape, "norms: grid function not on this quadrature");
  const auto w = q.weights();
  Norms out;
  double sq = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double a = std::abs(u[i]);
    out.sup = std::max(out.sup, a);
    out.l1 += w[i] * a;
    sq += w[i] * a * a;
  }
  out.l2 = std::sqrt(sq);
  return out;
}

double sup_distance(const GridFunction& u, const GridFunction& v) {
  if (u.size() != v.size()) throw Error(ErrorKind::shape, "sup_distance: size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) d = std::max(d, std::abs(u[i] - v[i]));
  return d;
}

}  // namespace coneham
