#pragma once

// Gamma-function arithmetic and the exponent algebra shared by every other
// module: unit ball volume Omega(d), unit sphere area omega(d), Lebesgue
// conjugates, and the potential-exponent map q(p) = pd/(d - alpha p) together
// with its inverse. All functions are pure and throw std::domain_error on
// arguments outside their stated domain.

#include <stdexcept>

namespace riesz {

// Dimension d >= 1 and smoothing order 0 < alpha < d.
struct ProblemParams {
  int d = 2;
  double alpha = 1.0;

  void validate() const;
};

ProblemParams make_params(int d, double alpha);

struct GeometricConstants {
  double ball_volume;          // Omega(d) = pi^(d/2) / Gamma(1 + d/2)
  double sphere_area;          // omega(d) = 2 pi^(d/2) / Gamma(d/2) = d * Omega(d)
  double sphere_area_clamped;  // max(1, omega(d))
};

// log Gamma(x) for x > 0, Lanczos approximation, |rel err of exp| < 1e-12.
double log_gamma(double x);

// Omega(d), d >= 0 (Omega(0) = 1).
double unit_ball_volume(int d);

// omega(d), d >= 1, with the convention omega(0) = 2 (two-point sphere S^0).
double unit_sphere_area(int d);

GeometricConstants geometric_constants(int d);

// p' = p/(p-1) for p > 1.
double conjugate_exponent(double p);

// q(p) = p d / (d - alpha p) for 1 < p < d/alpha.
double q_of_p(double p, const ProblemParams& params);

// Inverse of q_of_p: p(q) = d q / (d + alpha q).
double p_of_q(double q, const ProblemParams& params);

// True iff r, s > 1 and |1/r + 1/s - 1 - alpha/d| <= eps.
bool hls_pair_check(double r, double s, const ProblemParams& params, double eps = 1e-9);

}  // namespace riesz
