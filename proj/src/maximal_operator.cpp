#include "riesz/maximal_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp_cos(double c) { return std::min(1.0, std::max(-1.0, c)); }

// Integral of sin^(d-2) over [0, theta_star] with cos(theta_star) = cth.
double cap_angle_integral(int d, double cth) {
  if (d == 2) return std::acos(cth);
  if (d == 3) return 1.0 - cth;
  const double theta_star = std::acos(cth);
  return gauss_kronrod_15([d](double th) { return std::pow(std::sin(th), d - 2); }, 0.0,
                          theta_star)
      .value;
}

// Angular measure of {sigma on S^{d-1} : |R e1 - r sigma| <= t}. For d = 1
// this counts the points +-r inside [R - t, R + t].
double sphere_share(int d, double R, double r, double t, double omega_d, double omega_dm1) {
  if (R == 0.0 || r == 0.0) return (R + r <= t) ? omega_d : 0.0;
  if (R + r <= t) return omega_d;
  if (std::abs(R - r) >= t) return 0.0;
  if (d == 1) return 1.0;  // only the nearer of the two points is inside
  const double cth = clamp_cos((R * R + r * r - t * t) / (2.0 * R * r));
  return omega_dm1 * cap_angle_integral(d, cth);
}

// Average of f over the ball of radius t centered at radius R.
double ball_average(const RadialProfile& f, const ProblemParams& params, double R, double t,
                    const QuadratureSpec& spec) {
  const int d = params.d;
  const double omega_d = unit_sphere_area(d);
  const double omega_dm1 = unit_sphere_area(d - 1);
  const double volume = unit_ball_volume(d) * std::pow(t, d);

  const double lo = std::max(f.support_lo(), std::max(0.0, R - t));
  const double hi = std::min(f.support_hi(), R + t);
  if (!(hi > lo)) return 0.0;

  auto integrand = [&](double r) {
    const double fr = f(r);
    if (fr == 0.0) return 0.0;
    return fr * std::pow(r, d - 1) * sphere_share(d, R, r, t, omega_d, omega_dm1);
  };

  std::set<double> cut_set = {lo, hi};
  if (t - R > lo && t - R < hi) cut_set.insert(t - R);  // full-share boundary
  for (double b : f.breakpoints())
    if (b > lo && b < hi) cut_set.insert(b);
  // Anchor the profile's own scale: for wide balls the window spans many
  // octaves and everything beyond this cut is a plain power stretch.
  const double cr = f.characteristic_radius();
  if (cr > lo && cr < hi) cut_set.insert(cr);
  const std::vector<double> cuts(cut_set.begin(), cut_set.end());

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const bool sing_left = (i == 0 && cuts[0] == 0.0 && f.origin_exponent() > 0.0 &&
                            f.origin_amplitude() > 0.0);
    if (!sing_left && cuts[i] > 0.0 && cuts[i + 1] > 16.0 * cuts[i]) {
      // t can reach 1e4 * R, so window edges sit hundreds of octaves apart;
      // in log coordinates the stretch costs log(b/a) instead of the
      // bisection depth needed to resolve its short end.
      total += integrate_log_scaled(integrand, cuts[i], cuts[i + 1], spec).value;
      continue;
    }
    const double hint = sing_left ? std::exp2(-(params.d - f.origin_exponent())) : -1.0;
    total += integrate(integrand, cuts[i], cuts[i + 1], spec, sing_left, false, hint).value;
  }
  return total / volume;
}

}  // namespace

SteinEnvelope SteinEnvelope::for_dimension(int d) {
  if (d < 1) throw std::domain_error("stein envelope: dimension must be >= 1");
  SteinEnvelope env;
  env.d = d;
  env.classic_bound = 2.0 * std::pow(5.0, d);
  if (d == 2) env.dim2_bound = 2.0;
  return env;
}

double SteinEnvelope::best() const {
  double b = classic_bound;
  if (dim2_bound) b = std::min(b, *dim2_bound);
  if (sqrt_bound_constant) b = std::min(b, *sqrt_bound_constant * std::sqrt(double(d)));
  return b;
}

double maximal_radial(const RadialProfile& f, const ProblemParams& params, double R,
                      const QuadratureSpec& search) {
  params.validate();
  if (!(R >= 0.0)) throw std::domain_error("maximal_radial: R must be >= 0");
  if (f.support_lo() == 0.0 && f.origin_amplitude() > 0.0 &&
      f.origin_exponent() >= double(params.d)) {
    throw DivergenceError("maximal_radial: profile is not locally integrable at the origin");
  }
  if (R == 0.0 && f.origin_amplitude() > 0.0 && f.origin_exponent() > 0.0) {
    return kInf;  // small-ball averages at the origin grow like t^-gamma0
  }

  QuadratureSpec inner = search;
  inner.rel_tol = std::max(search.rel_tol, 1e-10);
  inner.abs_tol = std::max(search.abs_tol, 1e-14);

  const double scale = f.characteristic_radius();
  const double t_lo = 1e-4 * (R > 0.0 ? std::min(R, scale) : scale);
  const double t_hi = 1e4 * std::max(R, scale);

  auto average = [&](double t) { return ball_average(f, params, R, t, inner); };

  constexpr int kGrid = 400;
  const double log_lo = std::log(t_lo);
  const double step = (std::log(t_hi) - log_lo) / (kGrid - 1);
  double best = 0.0;
  int best_i = 0;
  std::vector<double> ts(kGrid);
  for (int i = 0; i < kGrid; ++i) {
    ts[i] = std::exp(log_lo + step * i);
    const double v = average(ts[i]);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  if (best == 0.0) return 0.0;

  const double a = ts[std::max(0, best_i - 1)];
  const double b = ts[std::min(kGrid - 1, best_i + 1)];
  const double t_star = golden_section_min([&](double t) { return -average(t); }, a, b, 1e-9);
  return std::max(best, average(t_star));
}

double hedberg_near(double delta, const ProblemParams& params) {
  params.validate();
  if (!(delta > 0.0)) throw std::domain_error("hedberg_near: delta must be > 0");
  return unit_ball_volume(params.d) * (double(params.d) / params.alpha) *
         std::pow(delta, params.alpha);
}

double hedberg_far(double p, double delta, const ProblemParams& params) {
  params.validate();
  if (!(delta > 0.0)) throw std::domain_error("hedberg_far: delta must be > 0");
  if (!(p > 1.0)) throw std::domain_error("hedberg_far: p must be > 1");
  const double d = params.d;
  if (!(p < d / params.alpha)) {
    throw DivergenceError("hedberg_far: far kernel tail is not in L^" + std::to_string(p) +
                          "' for p >= d/alpha");
  }
  const double s = conjugate_exponent(p);
  const double denom = (d - params.alpha) * s - d;
  return unit_sphere_area(params.d) * std::pow(std::pow(delta, d - (d - params.alpha) * s) / denom,
                                               1.0 / s);
}

HedbergSplit hedberg_bound(const RadialProfile& f, double p, const ProblemParams& params,
                           double R, const QuadratureSpec& quad) {
  const double mf = maximal_radial(f, params, R, quad);
  const bool closed = f.kind() == RadialProfile::Kind::power_outside ||
                      f.kind() == RadialProfile::Kind::power_inside;
  const double norm =
      (closed ? lp_norm_closed(f, p, params) : lp_norm_numeric(f, p, params, quad)).value;

  const double c1 = hedberg_near(1.0, params) * mf;       // near(delta) = c1 delta^alpha
  const double c2 = hedberg_far(p, 1.0, params) * norm;   // far(delta)  = c2 delta^-kappa
  const double kappa = double(params.d) / p - params.alpha;

  if (c1 == 0.0 && c2 == 0.0) return {1.0, 0.0, 0.0};
  if (c1 == 0.0) return {kInf, 0.0, 0.0};
  if (c2 == 0.0) return {0.0, 0.0, 0.0};

  double delta = std::pow(kappa * c2 / (params.alpha * c1), 1.0 / (params.alpha + kappa));
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    const double log_delta = golden_section_min(
        [&](double ld) {
          const double dl = std::exp(ld);
          return c1 * std::pow(dl, params.alpha) + c2 * std::pow(dl, -kappa);
        },
        std::log(1e-8), std::log(1e8), 1e-10);
    delta = std::exp(log_delta);
  }
  return {delta, c1 * std::pow(delta, params.alpha), c2 * std::pow(delta, -kappa)};
}

double stein_ratio_probe(const RadialProfile& f, double p, const ProblemParams& params,
                         const QuadratureSpec& quad) {
  params.validate();
  if (!(p > 1.0)) throw std::domain_error("stein_ratio_probe: p must be > 1");
  const std::string violation = lp_integrability_violation(f, p, params);
  if (!violation.empty()) throw DivergenceError("stein_ratio_probe: " + violation);

  const bool closed = f.kind() == RadialProfile::Kind::power_outside ||
                      f.kind() == RadialProfile::Kind::power_inside;
  const double norm =
      (closed ? lp_norm_closed(f, p, params) : lp_norm_numeric(f, p, params, quad)).value;
  if (norm == 0.0) throw std::domain_error("stein_ratio_probe: profile has zero norm");

  const int d = params.d;
  auto integrand = [&](double R) {
    const double mf = maximal_radial(f, params, R, quad);
    if (mf == 0.0) return 0.0;
    return std::pow(mf, p) * std::pow(R, d - 1);
  };

  std::set<double> cut_set = {0.0};
  for (double b : f.breakpoints()) cut_set.insert(b);
  cut_set.insert(f.characteristic_radius());
  const std::vector<double> cuts(cut_set.begin(), cut_set.end());
  const double gamma0 = f.origin_amplitude() > 0.0 ? f.origin_exponent() : 0.0;

  double total = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const bool sing_left = (i == 0 && gamma0 > 0.0);
    const double hint = sing_left ? std::exp2(-(d - gamma0 * p)) : -1.0;
    const IntegralResult seg =
        integrate(integrand, cuts[i], cuts[i + 1], quad, sing_left, false, hint);
    total += seg.value;
    err += seg.est_error;
  }
  // Mf decays like R^-min(gamma_tail, d) (times slowly varying factors), so
  // near the critical p the tail loses only a fixed fraction per octave and
  // plain R-shells would crawl; in x = log R the integrand is a falling
  // exponential and the shell count stays logarithmic in the tolerance.
  const double tail_start = std::max(1.0, 2.0 * cuts.back());
  const IntegralResult mid = integrate(integrand, cuts.back(), tail_start, quad);
  const IntegralResult tail = integrate_to_infinity(
      [&](double x) {
        const double radius = std::exp(x);
        return integrand(radius) * radius;
      },
      std::log(tail_start), quad);
  total += mid.value + tail.value;
  err += mid.est_error + tail.est_error;
  (void)err;

  const double m_norm = std::pow(unit_sphere_area(d) * total, 1.0 / p);
  return m_norm * (p - 1.0) / (p * norm);
}

}  // namespace riesz
