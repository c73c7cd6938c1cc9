#include "riesz/bound_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "riesz/quadrature.hpp"

namespace riesz {

namespace {

constexpr double kEulerInvE = 1.4446678610097661337;  // e^(1/e)

// x^e with the closed-interval convention 0^e = 0 for e > 0; exponents in
// F never vanish, so the 0^0 case cannot arise.
double mono(double x, double e) { return std::pow(x, e); }

}  // namespace

ConstantBundle constants_bundle(const ProblemParams& params) {
  params.validate();
  const double d = params.d;
  const double alpha = params.alpha;
  const double omega = unit_sphere_area(params.d);
  const double omega_dm1 = unit_sphere_area(params.d - 1);

  ConstantBundle b;
  b.a = kEulerInvE * std::max(omega / alpha, std::pow(omega / alpha, d / alpha));
  b.m = std::min(1.0, std::pow(omega / d, 1.0 - alpha / d));
  b.A = (4.0 * M_PI / (9.0 * alpha)) * omega_dm1 * std::exp2(-d) * b.m;
  b.n = std::max(omega / d, std::pow(omega / d, alpha / d));
  b.D = (1.0 / 3.0) * 4.0 * std::pow(5.0, alpha - d) * omega *
        std::min(1.0, std::pow(omega, d / (d - alpha))) * std::pow(d * d / alpha, -2.0 - alpha / d);
  b.C_alpha = 4.0 * std::pow(5.0, alpha - d) * omega;
  b.omega0_convention = (params.d == 1);
  return b;
}

double diagonal_pair(const ProblemParams& params) {
  params.validate();
  return 2.0 * params.d / (params.d + params.alpha);
}

BoundValue sharp_constant_diag(const ProblemParams& params) {
  params.validate();
  const double d = params.d;
  const double alpha = params.alpha;
  const double log_value = 0.5 * (d - alpha) * std::log(M_PI) + log_gamma(alpha / 2.0) -
                           log_gamma((d + alpha) / 2.0) +
                           (alpha / d) * (log_gamma(d) - log_gamma(d / 2.0));
  return {std::exp(log_value), BoundKind::sharp_diagonal, std::nullopt};
}

BoundValue upper_bound_eq4(double r, double s, const ProblemParams& params) {
  if (!hls_pair_check(r, s, params)) {
    throw std::domain_error("upper_bound_eq4: (r, s) must satisfy 1/r + 1/s = 1 + alpha/d");
  }
  const double d = params.d;
  const double alpha = params.alpha;
  const double e = 1.0 - alpha / d;
  // unit_sphere_area(d), not (d-1): both sides of the sandwich behave like
  // |S^(d-1)|/alpha as alpha -> 0, so a smaller sphere factor would push this
  // envelope below the sharp constant for small alpha.
  const double value = (1.0 / (r * s)) * (1.0 / alpha) *
                       std::pow(unit_sphere_area(params.d), e) * std::pow(d, alpha / d) *
                       (std::pow(r / (r - 1.0), e) + std::pow(s / (s - 1.0), e));
  return {value, BoundKind::upper_explicit, std::nullopt};
}

BoundValue upper_bound_eq4a_shape(double r, double s, const ProblemParams& params, double c_free) {
  if (!hls_pair_check(r, s, params)) {
    throw std::domain_error("upper_bound_eq4a_shape: (r, s) must satisfy 1/r + 1/s = 1 + alpha/d");
  }
  if (!(c_free > 0.0)) throw std::domain_error("upper_bound_eq4a_shape: c_free must be > 0");
  const double value =
      c_free / params.alpha * std::pow((r - 1.0) * (s - 1.0), params.alpha / params.d - 1.0);
  return {value, BoundKind::upper_shape, c_free};
}

BoundValue potential_bound_eq6(double p, const ProblemParams& params, const SteinEnvelope& stein) {
  params.validate();
  const double d = params.d;
  const double alpha = params.alpha;
  if (!(p > 1.0 && p < d / alpha)) {
    throw std::domain_error("potential_bound_eq6: p must lie in (1, d/alpha)");
  }
  const double s_omega = stein.classic_bound * geometric_constants(params.d).sphere_area_clamped;
  const double x = p - 1.0;
  const double y = d / alpha - p;
  const double value = s_omega * std::pow(p, (alpha * p - d) * x) * std::pow(x, alpha * x / d) *
                       std::pow(x * y, alpha / d - 1.0) *
                       (1.0 + std::pow(x, 1.0 - 1.0 / p) / (alpha * p) * (d - alpha * p));
  return {value, BoundKind::potential_coefficient, std::nullopt};
}

BoundValue potential_bound_eq7(double p, const ProblemParams& params, const SteinEnvelope& stein) {
  params.validate();
  const double d = params.d;
  const double alpha = params.alpha;
  if (!(p > 1.0 && p < d / alpha)) {
    throw std::domain_error("potential_bound_eq7: p must lie in (1, d/alpha)");
  }
  const double s_omega = stein.classic_bound * geometric_constants(params.d).sphere_area_clamped;
  const double value = s_omega * (2.0 * d * d / alpha) *
                       std::pow((p - 1.0) * (d / alpha - p), alpha / d - 1.0);
  return {value, BoundKind::potential_coefficient_coarse, std::nullopt};
}

double F_of_p(double p, const ProblemParams& params) {
  params.validate();
  const double d = params.d;
  const double alpha = params.alpha;
  if (!(p >= 1.0 && p <= d / alpha)) {
    throw std::domain_error("F_of_p: p must lie in the closed interval [1, d/alpha]");
  }
  const ConstantBundle c = constants_bundle(params);
  const double x = p - 1.0;
  const double y = d / alpha - p;
  const double num =
      c.A * mono(x, 1.0 / p + (d - alpha) / alpha) + c.D * mono(y, 1.0 / p + (2.0 * d - alpha) / d);
  const double den = c.a * mono(x, 1.0 / p) + c.n * mono(y, alpha / d);
  return 0.5 * num / den;
}

double R_of(const ProblemParams& params) {
  params.validate();
  const double hi = double(params.d) / params.alpha;
  constexpr int kGrid = 512;
  double best = F_of_p(1.0, params);
  int best_i = 0;
  for (int i = 1; i < kGrid; ++i) {
    const double p = 1.0 + (hi - 1.0) * i / (kGrid - 1);
    const double v = F_of_p(p, params);
    if (v < best) {
      best = v;
      best_i = i;
    }
  }
  const double a = 1.0 + (hi - 1.0) * std::max(0, best_i - 1) / (kGrid - 1);
  const double b = 1.0 + (hi - 1.0) * std::min(kGrid - 1, best_i + 1) / (kGrid - 1);
  const double p_star =
      golden_section_min([&](double p) { return F_of_p(p, params); }, a, b, 1e-12);
  return std::min(best, F_of_p(p_star, params));
}

BoundValue lower_bound_eq10(double r, double s, const ProblemParams& params) {
  if (!hls_pair_check(r, s, params)) {
    throw std::domain_error("lower_bound_eq10: (r, s) must satisfy 1/r + 1/s = 1 + alpha/d");
  }
  const double value =
      R_of(params) / std::pow((r - 1.0) * (s - 1.0), 1.0 - params.alpha / params.d);
  return {value, BoundKind::lower_explicit, std::nullopt};
}

double Z_of_p(double p, const ProblemParams& params) {
  params.validate();
  const double d = params.d;
  const double alpha = params.alpha;
  const double p_max = d / (d - alpha);
  if (!(p >= 1.0 && p < p_max)) {
    throw std::domain_error("Z_of_p: p must lie in [1, d/(d-alpha))");
  }
  return std::pow(unit_sphere_area(params.d) / (d - alpha), 1.0 / p) *
         std::pow(p_max - p, -1.0 / p);
}

double p_of_rs(double r, double s) {
  if (!(r >= 1.0 && s >= 1.0)) throw std::domain_error("p_of_rs: r and s must be >= 1");
  const double inv_sum = 1.0 / r + 1.0 / s;
  if (!(inv_sum >= 1.0)) {
    throw std::domain_error("p_of_rs: the pair must satisfy 1/r + 1/s >= 1");
  }
  const double inv_p = 2.0 - inv_sum;  // 1/p = 1/r' + 1/s'
  if (inv_p == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / inv_p;
}

BoundValue thm3_bound(double r, double s, const ProblemParams& params) {
  params.validate();
  const double p = p_of_rs(r, s);
  if (!(1.0 / r + 1.0 / s < 1.0 + params.alpha / params.d)) {
    throw std::domain_error("thm3_bound: the pair must satisfy 1/r + 1/s < 1 + alpha/d");
  }
  return {Z_of_p(p, params), BoundKind::truncated_coefficient, std::nullopt};
}

BoundValue thm4_envelope_shape(double r, double s, const ProblemParams& params, double beta,
                               const std::function<double(double)>& Q, double c_free) {
  if (!hls_pair_check(r, s, params)) {
    throw std::domain_error("thm4_envelope_shape: (r, s) must satisfy 1/r + 1/s = 1 + alpha/d");
  }
  if (!(beta >= 0.0)) throw std::domain_error("thm4_envelope_shape: beta must be >= 0");
  if (!(c_free > 0.0)) throw std::domain_error("thm4_envelope_shape: c_free must be > 0");
  const double alpha = params.alpha;
  const double ratio = alpha / params.d;
  const double q_val = Q ? Q(1.0 / alpha) : 1.0;
  const double value = c_free * std::pow(alpha, -1.0 - beta + ratio) * q_val *
                       std::pow((r - 1.0) * (s - 1.0), ratio - 1.0 - beta);
  return {value, BoundKind::generalized_shape, c_free};
}

}  // namespace riesz
