#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "coneham/functionals.hpp"
#include "coneham/sampling.hpp"

namespace coneham {

enum class SamplerKind { green_smoothing, rejection };
enum class LevelKind { beta, gamma };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// K_α = {u : α(u) >= 0} together with the cone-specific services that the
/// certifier needs. Range bounds and growth maps are registered closed forms;
/// a cone without them can still be sampled and solved on, but not certified.
class ConeSpec {
 public:
  using RangeBounder = std::function<Interval(LevelKind, double)>;
  using GrowthMap = std::function<double(double)>;

  ConeSpec(std::string label, Functional alpha, SamplerKind sampler, RangeBounder range = {},
           GrowthMap growth_b = {}, GrowthMap growth_c = {})
      : label_(std::move(label)),
        alpha_(std::move(alpha)),
        sampler_(sampler),
        range_(std::move(range)),
        growth_b_(std::move(growth_b)),
        growth_c_(std::move(growth_c)) {}

  const std::string& label() const noexcept { return label_; }
  const Functional& alpha() const noexcept { return alpha_; }
  SamplerKind sampler() const noexcept { return sampler_; }
  bool has_range_bound() const noexcept { return static_cast<bool>(range_); }
  bool has_growth_maps() const noexcept { return growth_b_ && growth_c_; }

  /// Interval containing u(t) for all t and all u in K_α at the given level.
  Interval range_bound(LevelKind level, double rho) const;
  /// b(ρ) >= sup{β(u) : u ∈ K_α, γ(u) <= ρ}.
  double growth_b(double rho) const;
  /// c(ρ) >= sup{γ(u) : u ∈ K_α, β(u) <= ρ}.
  double growth_c(double rho) const;

 private:
  std::string label_;
  Functional alpha_;
  SamplerKind sampler_;
  RangeBounder range_;
  GrowthMap growth_b_;
  GrowthMap growth_c_;
};

/// Concave functions vanishing at 0 and 1. Range bounds and growth maps are
/// registered when β and γ are among l1, integral, l2, sup, using
/// ‖u‖₁ <= ‖u‖₂ <= ‖u‖_∞ <= 2‖u‖₁ on the cone.
ConeSpec concave_dirichlet_cone(const std::string& beta_label, const std::string& gamma_label);
/// {u >= 0} with α = dist_nonneg.
ConeSpec nonneg_cone(const std::string& beta_label, const std::string& gamma_label);
/// Arbitrary α; rejection sampling only, no certification services.
ConeSpec custom_cone(Functional alpha);

enum class MembershipVerdict { inside, boundary, outside };
const char* to_string(MembershipVerdict v);

struct Membership {
  MembershipVerdict verdict = MembershipVerdict::outside;
  double margin = 0.0;  // α(u)
};

inline constexpr double kMembershipTol = 1e-9;
inline constexpr int kRejectionCap = 100000;

Membership membership(const ConeSpec& cone, const GridFunction& u, double tol = kMembershipTol);

GridFunction sample_cone(const ConeSpec& cone, const Grid& grid, Rng& rng, double amplitude = 1.0);
GridFunction sample_cone(const ConeSpec& cone, const Grid& grid, std::uint64_t seed, double amplitude = 1.0);

struct GrowthReport {
  int trials = 0;
  int violations_b = 0;  // β(u) > b(γ(u))
  int violations_c = 0;  // γ(u) > c(β(u))
  double worst_b = 0.0;  // max of β(u) - b(γ(u))
  double worst_c = 0.0;  // max of γ(u) - c(β(u))
  bool passed() const { return violations_b == 0 && violations_c == 0; }
};

GrowthReport verify_growth(const ConeSpec& cone, const Functional& beta, const Functional& gamma,
                           const Grid& grid, int trials, std::uint64_t seed);

}  // namespace coneham
