#pragma once

// Radial test profiles f(x) = f(|x|) on R^d and their Lebesgue norms.
//
// The profile algebra is deliberately small: truncated power laws inside or
// outside a sphere, smooth rational bumps (1 + (r/lambda)^2)^(-e), finite
// sums, and caller-supplied radial callables with declared power behavior at
// the origin and at infinity. Each profile carries enough asymptotic
// metadata (support, origin/tail exponents and envelope amplitudes) for the
// norm and potential code to detect divergent integrals before quadrature
// runs and to seed tail-decay hints for the shell extrapolation.

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "riesz/quadrature.hpp"
#include "riesz/special_functions.hpp"

namespace riesz {

class RadialProfile {
 public:
  enum class Kind { power_outside, power_inside, sum, bump, generic };

  // c * r^-gamma on r > r0, zero inside.
  static RadialProfile power_outside(double c, double gamma, double r0);
  // c * r^-gamma on r < r0, zero outside.
  static RadialProfile power_inside(double c, double gamma, double r0);
  // Indicator of the centered ball of radius r0.
  static RadialProfile ball_indicator(double r0 = 1.0);
  // (1 + (r/lambda)^2)^(-exponent).
  static RadialProfile bump(double lambda_scale, double exponent);
  static RadialProfile sum(std::vector<RadialProfile> parts);
  // Caller-supplied evaluator with declared asymptotics: f ~ r^-origin_exponent
  // near 0 and f ~ r^-tail_exponent near infinity (support_hi < inf overrides
  // the tail). The evaluator must be nonnegative; a sample check enforces it.
  static RadialProfile generic(std::function<double(double)> evaluator, double origin_exponent,
                               double tail_exponent,
                               double support_hi = std::numeric_limits<double>::infinity(),
                               std::string label = "generic");

  double operator()(double r) const;

  Kind kind() const { return kind_; }
  double amplitude() const { return c_; }
  double power() const { return gamma_; }
  double radius() const { return r0_; }
  double lambda_scale() const { return lambda_; }
  double bump_exponent() const { return exponent_; }
  const std::vector<RadialProfile>& parts() const { return parts_; }

  // Support is contained in [support_lo, support_hi]; support_hi may be inf.
  double support_lo() const { return support_lo_; }
  double support_hi() const { return support_hi_; }
  // Near 0 (when the support reaches 0): f(r) <= origin_amplitude * r^-origin_exponent
  // for r <= origin_valid_to; exact for power profiles.
  double origin_exponent() const { return origin_exponent_; }
  double origin_amplitude() const { return origin_amplitude_; }
  double origin_valid_to() const { return origin_valid_to_; }
  // Near infinity (when unbounded): f(r) <= tail_amplitude * r^-tail_exponent
  // for r >= tail_valid_from.
  double tail_exponent() const { return tail_exponent_; }
  double tail_amplitude() const { return tail_amplitude_; }
  double tail_valid_from() const { return tail_valid_from_; }
  // Radii where the profile is not smooth (truncation spheres of all parts).
  std::vector<double> breakpoints() const;
  // Scale used to seed search grids (largest structural radius).
  double characteristic_radius() const;

  // Plain-text round-trippable form, e.g. "power_outside c=1 gamma=2 r0=1" or
  // "sum( power_outside c=1 gamma=2 r0=1 + power_inside c=1 gamma=1 r0=1 )".
  // Generic profiles are not serializable and throw UnsupportedShapeError.
  std::string descriptor() const;
  static RadialProfile parse(const std::string& text);

 private:
  RadialProfile() = default;
  void derive_sum_metadata();

  Kind kind_ = Kind::power_inside;
  double c_ = 1.0, gamma_ = 0.0, r0_ = 1.0;  // power profiles
  double lambda_ = 1.0, exponent_ = 1.0;     // bump
  std::vector<RadialProfile> parts_;
  std::function<double(double)> eval_;
  std::string label_;

  double support_lo_ = 0.0, support_hi_ = 0.0;
  double origin_exponent_ = 0.0, origin_amplitude_ = 0.0, origin_valid_to_ = 0.0;
  double tail_exponent_ = 0.0, tail_amplitude_ = 0.0, tail_valid_from_ = 0.0;
};

// Canonical witness profiles: f0 = |x|^-d outside the unit ball,
// g0 = |x|^-alpha inside it, h = f0 + g0.
RadialProfile make_f0(const ProblemParams& params);
RadialProfile make_g0(const ProblemParams& params);
RadialProfile make_h(const ProblemParams& params);

// CLI-facing parse that also accepts the shorthands f0, g0, h, ball.
RadialProfile parse_profile(const std::string& text, const ProblemParams& params);

enum class NormMethod { closed_form, quadrature };

struct NormResult {
  double value = 0.0;
  NormMethod method = NormMethod::closed_form;
  double est_error = 0.0;
};

// Empty string when |f|_p is finite; otherwise names the violated constraint.
std::string lp_integrability_violation(const RadialProfile& f, double p,
                                       const ProblemParams& params);

// Closed-form |f|_p = (omega(d) c^p r0^(d - gamma p) / |gamma p - d|)^(1/p)
// for single power profiles; throws DivergenceError outside the integrable
// range and std::domain_error for other profile kinds.
NormResult lp_norm_closed(const RadialProfile& f, double p, const ProblemParams& params);

// Quadrature |f|_p; origin singularities and power tails are handled by
// geometric shells with ratio extrapolation, so no cutoff radii appear.
NormResult lp_norm_numeric(const RadialProfile& f, double p, const ProblemParams& params,
                           const QuadratureSpec& spec);

// Weak (Lorentz) norm sup_R (Omega(d) R^d)^(1/q - 1) * integral of f over the
// centered ball of radius R, valid for radially nonincreasing profiles
// (checked; UnsupportedShapeError otherwise). q > 1.
NormResult weak_lq_norm(const RadialProfile& f, double q, const ProblemParams& params,
                        const QuadratureSpec& spec);

}  // namespace riesz
