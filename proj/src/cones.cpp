#include "coneham/cones.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace coneham {

namespace {

void require_level(double rho) {
  if (!(rho >= 0.0)) throw Error(ErrorKind::invalid_parameter, "level rho must be >= 0");
}

// Position in the chain l1 <= l2 <= sup (valid for nonnegative functions).
std::optional<int> chain_rank(const std::string& label) {
  if (label == "l1" || label == "integral") return 0;
  if (label == "l2") return 1;
  if (label == "sup") return 2;
  return std::nullopt;
}

// ‖u‖_∞ <= factor · F(u) on concave functions vanishing at the ends.
double sup_factor(const std::string& label) { return label == "sup" ? 1.0 : 2.0; }

}  // namespace

Interval ConeSpec::range_bound(LevelKind level, double rho) const {
  require_level(rho);
  if (!range_) throw Error(ErrorKind::unsupported_cone, "cone '" + label_ + "' has no registered range bound");
  return range_(level, rho);
}

double ConeSpec::growth_b(double rho) const {
  require_level(rho);
  if (!growth_b_) throw Error(ErrorKind::unsupported_cone, "cone '" + label_ + "' has no registered b(rho)");
  return growth_b_(rho);
}

double ConeSpec::growth_c(double rho) const {
  require_level(rho);
  if (!growth_c_) throw Error(ErrorKind::unsupported_cone, "cone '" + label_ + "' has no registered c(rho)");
  return growth_c_(rho);
}

ConeSpec concave_dirichlet_cone(const std::string& beta_label, const std::string& gamma_label) {
  const auto rb = chain_rank(beta_label);
  const auto rg = chain_rank(gamma_label);
  if (!rb || !rg) return ConeSpec("concave_dirichlet", concave_dirichlet(), SamplerKind::green_smoothing);

  const double beta_factor = sup_factor(beta_label);
  const double gamma_factor = sup_factor(gamma_label);
  auto range = [=](LevelKind level, double rho) {
    const double factor = level == LevelKind::beta ? beta_factor : gamma_factor;
    return Interval{0.0, factor * rho};
  };
  const double b_factor = *rb <= *rg ? 1.0 : gamma_factor;
  const double c_factor = *rg <= *rb ? 1.0 : beta_factor;
  return ConeSpec("concave_dirichlet", concave_dirichlet(), SamplerKind::green_smoothing, range,
                  [=](double rho) { return b_factor * rho; }, [=](double rho) { return c_factor * rho; });
}

ConeSpec nonneg_cone(const std::string& beta_label, const std::string& gamma_label) {
  ConeSpec::RangeBounder range;
  if (beta_label == "sup" && gamma_label == "sup")
    range = [](LevelKind, double rho) { return Interval{0.0, rho}; };
  ConeSpec::GrowthMap b, c;
  const auto rb = chain_rank(beta_label);
  const auto rg = chain_rank(gamma_label);
  if (rb && rg && *rb <= *rg) b = [](double rho) { return rho; };
  if (rb && rg && *rg <= *rb) c = [](double rho) { return rho; };
  return ConeSpec("nonneg", dist_nonneg(), SamplerKind::rejection, range, b, c);
}

ConeSpec custom_cone(Functional alpha) {
  std::string label = "custom(" + alpha.label() + ")";
  return ConeSpec(std::move(label), std::move(alpha), SamplerKind::rejection);
}

const char* to_string(MembershipVerdict v) {
  switch (v) {
    case MembershipVerdict::inside: return "inside";
    case MembershipVerdict::boundary: return "boundary";
    case MembershipVerdict::outside: return "outside";
  }
  return "unknown";
}

Membership membership(const ConeSpec& cone, const GridFunction& u, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::invalid_parameter, "membership tolerance must be > 0");
  const double a = cone.alpha()(u);
  if (a > tol) return {MembershipVerdict::inside, a};
  if (a < -tol) return {MembershipVerdict::outside, a};
  return {MembershipVerdict::boundary, a};
}

GridFunction sample_cone(const ConeSpec& cone, const Grid& grid, Rng& rng, double amplitude) {
  if (!(amplitude > 0.0)) throw Error(ErrorKind::invalid_parameter, "sample_cone needs amplitude > 0");
  if (cone.sampler() == SamplerKind::green_smoothing) return random_green_smooth(grid, rng, amplitude);
  for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
    GridFunction u = random_function(grid, rng, amplitude);
    if (cone.alpha()(u) >= -kMembershipTol) return u;
  }
  throw Error(ErrorKind::sampling_failure, "rejection sampling for cone '" + cone.label() + "' exceeded " +
                                               std::to_string(kRejectionCap) + " attempts");
}

GridFunction sample_cone(const ConeSpec& cone, const Grid& grid, std::uint64_t seed, double amplitude) {
  Rng rng(seed);
  return sample_cone(cone, grid, rng, amplitude);
}

GrowthReport verify_growth(const ConeSpec& cone, const Functional& beta, const Functional& gamma,
                           const Grid& grid, int trials, std::uint64_t seed) {
  if (!cone.has_growth_maps())
    throw Error(ErrorKind::unsupported_cone, "cone '" + cone.label() + "' has no registered growth maps");
  GrowthReport report;
  report.trials = trials;
  report.worst_b = report.worst_c = -std::numeric_limits<double>::infinity();
  Rng rng(seed);
  for (int k = 0; k < trials; ++k) {
    const GridFunction u = sample_cone(cone, grid, rng);
    const double b = beta(u), g = gamma(u);
    const double db = b - cone.growth_b(std::max(g, 0.0));
    const double dc = g - cone.growth_c(std::max(b, 0.0));
    report.worst_b = std::max(report.worst_b, db);
    report.worst_c = std::max(report.worst_c, dc);
    report.violations_b += db > 1e-9;
    report.violations_c += dc > 1e-9;
  }
  return report;
}

}  // namespace coneham
