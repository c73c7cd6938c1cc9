#include "riesz/special_functions.hpp"

#include <cmath>
#include <string>

namespace riesz {

namespace {

// Lanczos g = 7, n = 9 coefficients (Godfrey's set). Good to ~1e-15 relative
// in Gamma for real positive arguments.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr double kSqrt2Pi = 2.5066282746310005024;
constexpr double kLogPi = 1.1447298858494001741;

}  // namespace

void ProblemParams::validate() const {
  if (d < 1) throw std::domain_error("ProblemParams: dimension d must be >= 1");
  if (!(alpha > 0.0) || !(alpha < static_cast<double>(d)))
    throw std::domain_error("ProblemParams: alpha must satisfy 0 < alpha < d");
}

ProblemParams make_params(int d, double alpha) {
  ProblemParams p{d, alpha};
  p.validate();
  return p;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);  // Gamma(x) = Gamma(x+1)/x
  const double z = x - 1.0;
  double series = kLanczos[0];
  for (int i = 1; i < 9; ++i) series += kLanczos[i] / (z + i);
  const double t = z + 7.5;  // g + 1/2
  return std::log(kSqrt2Pi * series) + (z + 0.5) * std::log(t) - t;
}

double unit_ball_volume(int d) {
  if (d < 0) throw std::domain_error("unit_ball_volume: d must be >= 0");
  if (d == 0) return 1.0;
  return std::exp(0.5 * d * kLogPi - log_gamma(1.0 + 0.5 * d));
}

double unit_sphere_area(int d) {
  if (d < 0) throw std::domain_error("unit_sphere_area: d must be >= 0");
  if (d == 0) return 2.0;  // S^0 = {-1, +1}; convention used by the d = 1 constants
  return 2.0 * std::exp(0.5 * d * kLogPi - log_gamma(0.5 * d));
}

GeometricConstants geometric_constants(int d) {
  const double area = unit_sphere_area(d);
  return {unit_ball_volume(d), area, std::max(1.0, area)};
}

double conjugate_exponent(double p) {
  if (!(p > 1.0)) throw std::domain_error("conjugate_exponent: p must be > 1");
  return p / (p - 1.0);
}

double q_of_p(double p, const ProblemParams& params) {
  params.validate();
  const double d = params.d;
  if (!(p > 1.0) || !(p < d / params.alpha))
    throw std::domain_error("q_of_p: p must lie in (1, d/alpha)");
  return p * d / (d - params.alpha * p);
}

double p_of_q(double q, const ProblemParams& params) {
  params.validate();
  const double d = params.d;
  if (!(q > d / (d - params.alpha)))
    throw std::domain_error("p_of_q: q must exceed d/(d - alpha)");
  return d * q / (d + params.alpha * q);
}

bool hls_pair_check(double r, double s, const ProblemParams& params, double eps) {
  params.validate();
  if (!(r > 1.0) || !(s > 1.0)) return false;
  return std::fabs(1.0 / r + 1.0 / s - 1.0 - params.alpha / params.d) <= eps;
}

}  // namespace riesz
