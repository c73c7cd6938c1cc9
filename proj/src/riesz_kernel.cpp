#include "riesz/riesz_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Distance weight w(t) = t^(alpha-d) * L(t)^beta * Q(L(t)), integrated only
// over t <= cutoff.
struct Weight {
  double alpha = 1.0;
  int d = 2;
  double cutoff = kInf;
  double beta = 0.0;
  const SlowlyVarying* q = nullptr;  // null means Q == 1
  bool shifted = false;

  bool truncated() const { return std::isfinite(cutoff); }
  bool plain_power() const { return beta == 0.0 && q == nullptr; }
  bool has_log() const { return !plain_power(); }

  double operator()(double t) const {
    double w = std::pow(t, alpha - d);
    if (has_log()) {
      const double l = std::fabs(std::log(t));
      const double arg = shifted ? 1.0 + l : l;
      if (beta != 0.0) w *= std::pow(arg, beta);
      if (q != nullptr) w *= (*q)(arg);
    }
    return w;
  }
};

double agm(double x, double y) {
  for (int i = 0; i < 64 && std::fabs(x - y) > 1e-17 * (x + y); ++i) {
    const double ax = 0.5 * (x + y);
    y = std::sqrt(x * y);
    x = ax;
  }
  return 0.5 * (x + y);
}

QuadratureSpec inner_spec(const QuadratureSpec& outer, double rel_factor, double abs_factor) {
  QuadratureSpec s = outer;
  s.rel_tol = std::max(outer.rel_tol * rel_factor, 1e-14);
  s.abs_tol = std::max(outer.abs_tol * abs_factor, 1e-290);
  return s;
}

double clamp_cos(double c) { return std::min(1.0, std::max(-1.0, c)); }

// Angular transform kappa(R, r) = integral of w(dist) over the unit sphere,
// with dist^2 = (R - r)^2 + 4 R r sin^2(theta/2) (cancellation-free form).
double angular_transform(double R, double r, const Weight& w, const ProblemParams& params,
                         const QuadratureSpec& quad) {
  const int d = params.d;
  if (R == 0.0 && r == 0.0)
    throw std::domain_error("angular transform: R and r cannot both be zero");
  if (R == 0.0 || r == 0.0) {
    const double rho = R + r;
    if (rho > w.cutoff) return 0.0;
    return unit_sphere_area(d) * w(rho);
  }
  if (R == r && w.alpha <= 1.0)
    throw DivergenceError("angular transform: diagonal R = r diverges for alpha <= 1");

  const double t_near = std::fabs(R - r), t_far = R + r;

  if (d == 1) {
    double v = 0.0;
    if (t_near <= w.cutoff) v += w(t_near);
    if (t_far <= w.cutoff) v += w(t_far);
    return v;
  }

  if (d == 3) {
    // Flat-measure reduction: (2 pi / (R r)) * integral of t w(t) dt.
    const double lo = t_near, hi = std::min(t_far, w.cutoff);
    if (!(hi > lo)) return 0.0;
    const double pref = 2.0 * M_PI / (R * r);
    if (w.plain_power()) {
      const double a = w.alpha;
      if (a == 1.0) return pref * std::log(hi / lo);
      return pref * (std::pow(hi, a - 1.0) - std::pow(lo, a - 1.0)) / (a - 1.0);
    }
    auto flat = [&](double t) { return t * w(t); };
    std::vector<double> cuts{lo};
    if (w.has_log() && 1.0 > lo && 1.0 < hi) cuts.push_back(1.0);
    cuts.push_back(hi);
    double total = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      // Only t = 0 is a genuine singular endpoint; for lo > 0 the integrand
      // is a resolvable boundary layer and plain bisection must handle it.
      const bool sing = i == 0 && lo == 0.0;
      total += integrate(flat, cuts[i], cuts[i + 1], quad, sing, false).value;
    }
    return pref * total;
  }

  if (d == 2 && w.plain_power() && w.alpha == 1.0 && !w.truncated()) {
    // Complete elliptic integral via AGM: kappa = 4 K(k) / (R + r) with
    // complementary modulus k' = |R - r| / (R + r).
    const double kp = t_near / t_far;
    return 4.0 * M_PI / (2.0 * agm(1.0, kp) * t_far);
  }

  // Polar-angle quadrature. Truncation caps the angle at dist = cutoff; a
  // log weight kinks the integrand where dist crosses 1.
  double theta_max = M_PI;
  if (w.truncated()) {
    if (t_far <= w.cutoff) {
      theta_max = M_PI;
    } else if (t_near >= w.cutoff) {
      return 0.0;
    } else {
      theta_max = std::acos(clamp_cos((R * R + r * r - w.cutoff * w.cutoff) / (2.0 * R * r)));
    }
  }
  std::set<double> cutset{0.0, theta_max};
  if (w.has_log() && t_near < 1.0 && t_far > 1.0) {
    const double theta1 = std::acos(clamp_cos((R * R + r * r - 1.0) / (2.0 * R * r)));
    if (theta1 > 0.0 && theta1 < theta_max) cutset.insert(theta1);
  }
  if (t_near > 0.0) {
    // Below theta_layer the distance is pinned near |R - r| and the integrand
    // is flat; above it the kernel rolls off like a power of theta. Cutting at
    // the layer keeps each side tractable for plain bisection.
    const double s_layer = 0.5 * t_near / std::sqrt(R * r);
    if (s_layer < 1.0) {
      const double theta_layer = 2.0 * std::asin(s_layer);
      if (theta_layer > 0.0 && theta_layer < theta_max) cutset.insert(theta_layer);
    }
  }
  std::vector<double> cuts(cutset.begin(), cutset.end());

  const double dm = static_cast<double>(d);
  auto integrand = [&](double theta) {
    const double s = std::sin(0.5 * theta);
    const double dist = std::sqrt(t_near * t_near + 4.0 * R * r * s * s);
    return w(dist) * std::pow(std::sin(theta), dm - 2.0);
  };
  double total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    // theta = 0 is a genuine singular endpoint only on the diagonal R = r;
    // off the diagonal the peak is finite and bisection resolves it.
    const bool sing = i == 0 && t_near == 0.0;
    total += integrate(integrand, cuts[i], cuts[i + 1], quad, sing, false).value;
  }
  return unit_sphere_area(d - 1) * total;
}

void check_local_finiteness(const RadialProfile& f, const Weight& w, const ProblemParams& params,
                            double R, double lo, bool unbounded) {
  const double d = params.d;
  if (lo == 0.0 && f.origin_amplitude() > 0.0) {
    const double need = R == 0.0 ? w.alpha : d;
    if (f.origin_exponent() >= need)
      throw DivergenceError(
          R == 0.0
              ? "potential diverges at the origin: profile origin exponent >= alpha"
              : "potential diverges: profile origin exponent >= d breaks local integrability");
  }
  if (unbounded && f.tail_amplitude() > 0.0 && f.tail_exponent() <= w.alpha)
    throw DivergenceError("potential diverges: profile tail exponent <= alpha");
}

double potential_impl(const RadialProfile& f, const Weight& w, const ProblemParams& params,
                      double R, const QuadratureSpec& quad) {
  params.validate();
  if (!(R >= 0.0)) throw std::domain_error("riesz potential: radius must be >= 0");

  double lo = f.support_lo(), hi = f.support_hi();
  if (w.truncated()) {
    lo = std::max(lo, R - w.cutoff);
    hi = std::min(hi, R + w.cutoff);
    if (!(hi > lo)) return 0.0;
    lo = std::max(lo, 0.0);
  }
  const bool unbounded = std::isinf(hi);
  check_local_finiteness(f, w, params, R, lo, unbounded);

  const double d = params.d;
  const QuadratureSpec kq = inner_spec(quad, 0.2, 1e-3);

  if (R == 0.0) {
    // Kernel constant on spheres: omega(d) * integral of r^(alpha-1) f(r) L-weight.
    auto integrand = [&](double r) { return f(r) * std::pow(r, d - 1.0) * w(r); };
    std::set<double> cutset{lo};
    for (double b : f.breakpoints())
      if (b > lo && b < hi) cutset.insert(b);
    if (w.has_log() && 1.0 > lo && 1.0 < hi) cutset.insert(1.0);
    std::vector<double> cuts(cutset.begin(), cutset.end());
    double finite_end = hi;
    if (unbounded) {
      finite_end = std::max({1.0, cuts.back(), f.characteristic_radius()});
      if (finite_end > cuts.back()) cuts.push_back(finite_end);
    } else if (hi > cuts.back()) {
      cuts.push_back(hi);
    }
    double total = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      const bool sing_left = i == 0 && lo == 0.0;
      const double hint =
          sing_left ? std::exp2(-(w.alpha - f.origin_exponent())) : -1.0;
      total += integrate(integrand, cuts[i], cuts[i + 1], quad, sing_left, false, hint).value;
    }
    if (unbounded)
      total += integrate_to_infinity(integrand, cuts.back(), quad,
                                     std::exp2(-(f.tail_exponent() - w.alpha)))
                   .value;
    return unit_sphere_area(params.d) * total;
  }

  auto integrand = [&](double r) {
    const double fr = f(r);
    if (fr == 0.0) return 0.0;
    return fr * std::pow(r, d - 1.0) * angular_transform(R, r, w, params, kq);
  };

  std::set<double> cutset{lo};
  if (R > lo && R < hi) {
    cutset.insert(R);
    // An origin-singular profile makes the integrand scale like a pure power
    // of r well above the diagonal; cutting at 2R confines the diagonal
    // singularity to [R, 2R] and leaves that power stretch to plain panels.
    if (2.0 * R < hi) cutset.insert(2.0 * R);
  }
  for (double b : f.breakpoints())
    if (b > lo && b < hi) cutset.insert(b);
  if (w.has_log()) {
    for (double b : {std::fabs(R - 1.0), R + 1.0})
      if (b > lo && b < hi) cutset.insert(b);
  }
  std::vector<double> cuts(cutset.begin(), cutset.end());
  double finite_end = hi;
  if (unbounded) {
    finite_end = std::max({1.0, 2.0 * R + 1.0, cuts.back(), f.characteristic_radius()});
    if (finite_end > cuts.back()) cuts.push_back(finite_end);
  } else if (hi > cuts.back()) {
    cuts.push_back(hi);
  }

  const double diag_hint = std::exp2(-std::min(w.alpha, 1.0));
  double total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    const bool sing_origin = i == 0 && lo == 0.0 && f.origin_exponent() > 0.0;
    const bool diag_right = b == R;
    const bool diag_left = a == R;
    double hint = -1.0;
    if (diag_left || diag_right) hint = diag_hint;
    if (sing_origin) hint = std::exp2(-(d - f.origin_exponent()));
    if (!sing_origin && !diag_left && !diag_right && a > 0.0 && b > 16.0 * a) {
      // A wide smooth stretch between cuts behaves like a power of r; in log
      // coordinates that is a mild exponential, so the cost stays bounded even
      // when b/a spans hundreds of octaves (tiny R against a fixed breakpoint).
      total += integrate_log_scaled(integrand, a, b, quad).value;
      continue;
    }
    total += integrate(integrand, a, b, quad, sing_origin || diag_left, diag_right, hint).value;
  }
  if (unbounded)
    total += integrate_to_infinity(integrand, cuts.back(), quad,
                                   std::exp2(-(f.tail_exponent() - w.alpha)))
                 .value;
  return total;
}

Weight plain_weight(double alpha, const ProblemParams& params, double cutoff = kInf) {
  Weight w;
  w.alpha = alpha;
  w.d = params.d;
  w.cutoff = cutoff;
  return w;
}

double bilinear_impl(const RadialProfile& f, const RadialProfile& g, const Weight& w,
                     const ProblemParams& params, const QuadratureSpec& quad) {
  params.validate();
  const double d = params.d;

  // Inner-potential divergence at any single R poisons the pairing; check the
  // same metadata conditions up front, plus the outer-integral asymptotics.
  if (f.support_lo() == 0.0 && f.origin_amplitude() > 0.0 && f.origin_exponent() >= d)
    throw DivergenceError("bilinear form diverges: f origin exponent >= d");
  const bool f_unbounded = std::isinf(f.support_hi()) && f.tail_amplitude() > 0.0;
  if (!w.truncated() && f_unbounded && f.tail_exponent() <= w.alpha)
    throw DivergenceError("bilinear form diverges: f tail exponent <= alpha");

  const bool g_unbounded = std::isinf(g.support_hi()) && g.tail_amplitude() > 0.0;
  if (g_unbounded && !w.truncated()) {
    const double reach = std::min(f.tail_exponent(), d);
    if (g.tail_exponent() + reach <= w.alpha + d)
      throw DivergenceError("bilinear form diverges: combined tails too heavy");
  }
  if (g_unbounded && w.truncated() && f_unbounded &&
      g.tail_exponent() + f.tail_exponent() <= d)
    throw DivergenceError("bilinear form diverges: combined tails too heavy");
  if (g.support_lo() == 0.0 && g.origin_amplitude() > 0.0) {
    const double sigma = std::max(0.0, f.origin_exponent() - w.alpha);
    if (g.origin_exponent() + sigma >= d)
      throw DivergenceError("bilinear form diverges: combined origin singularities too strong");
  }

  const QuadratureSpec pq = inner_spec(quad, 0.3, 0.1);
  auto integrand = [&](double R) {
    const double gr = g(R);
    if (gr == 0.0) return 0.0;
    return gr * std::pow(R, d - 1.0) * potential_impl(f, w, params, R, pq);
  };

  double lo = g.support_lo(), hi = g.support_hi();
  // A truncated kernel with compactly supported f reaches nothing beyond
  // support_hi(f) + cutoff.
  if (w.truncated() && std::isfinite(f.support_hi()))
    hi = std::min(hi, f.support_hi() + w.cutoff);
  if (!(hi > lo)) return 0.0;

  std::set<double> cutset{lo};
  for (const RadialProfile* prof : {&g, &f})
    for (double b : prof->breakpoints())
      if (b > lo && b < hi) cutset.insert(b);
  if (w.truncated()) {
    // The inner potential kinks where the truncation sphere crosses an f kink.
    std::vector<double> fb = f.breakpoints();
    fb.push_back(f.support_lo());
    if (std::isfinite(f.support_hi())) fb.push_back(f.support_hi());
    for (double b : fb)
      for (double c : {std::fabs(b - w.cutoff), b + w.cutoff})
        if (c > lo && c < hi) cutset.insert(c);
  }
  std::vector<double> cuts(cutset.begin(), cutset.end());
  double finite_end = hi;
  if (std::isinf(hi)) {
    finite_end = std::max({1.0, cuts.back(), g.characteristic_radius(),
                           f.characteristic_radius()});
    if (finite_end > cuts.back()) cuts.push_back(finite_end);
  } else if (hi > cuts.back()) {
    cuts.push_back(hi);
  }

  double total = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const bool sing_left = i == 0 && lo == 0.0;
    total += integrate(integrand, cuts[i], cuts[i + 1], quad, sing_left, false).value;
  }
  if (std::isinf(hi)) {
    const double reach = w.truncated() ? f.tail_exponent()
                                       : std::min(f.tail_exponent(), d) - w.alpha;
    const double decay = g.tail_exponent() + reach - d;
    total += integrate_to_infinity(integrand, cuts.back(), quad, std::exp2(-decay)).value;
  }
  return unit_sphere_area(params.d) * total;
}

}  // namespace

SlowlyVarying SlowlyVarying::one() {
  return {[](double) { return 1.0; }, "one", true};
}

SlowlyVarying SlowlyVarying::log_shifted() {
  return {[](double z) { return std::log(std::exp(1.0) + z); }, "log(e+z)", false};
}

void GeneralizedKernelSpec::validate(const ProblemParams& params) const {
  params.validate();
  if (!(alpha > 0.0) || !(alpha < params.d))
    throw std::domain_error("generalized kernel: alpha must lie in (0, d)");
  if (!(beta >= 0.0)) throw std::domain_error("generalized kernel: beta must be >= 0");
  if (!slowly_varying.fn)
    throw std::domain_error("generalized kernel: slowly varying factor must be callable");
}

double angular_kernel(double R, double r, const ProblemParams& params,
                      const QuadratureSpec& quad) {
  params.validate();
  if (!(R >= 0.0) || !(r >= 0.0))
    throw std::domain_error("angular kernel: radii must be >= 0");
  return angular_transform(R, r, plain_weight(params.alpha, params), params, quad);
}

double riesz_potential(const RadialProfile& f, const ProblemParams& params, double R,
                       const QuadratureSpec& quad) {
  return potential_impl(f, plain_weight(params.alpha, params), params, R, quad);
}

double riesz_potential_truncated(const RadialProfile& f, const ProblemParams& params, double R,
                                 const QuadratureSpec& quad) {
  return potential_impl(f, plain_weight(params.alpha, params, 1.0), params, R, quad);
}

double riesz_potential_generalized(const RadialProfile& f, const GeneralizedKernelSpec& kernel,
                                   const ProblemParams& params, double R,
                                   const QuadratureSpec& quad) {
  kernel.validate(params);
  if (kernel.beta == 0.0 && kernel.slowly_varying.is_identity_one)
    return potential_impl(f, plain_weight(kernel.alpha, params), params, R, quad);
  Weight w = plain_weight(kernel.alpha, params);
  w.beta = kernel.beta;
  w.q = kernel.slowly_varying.is_identity_one ? nullptr : &kernel.slowly_varying;
  w.shifted = kernel.form == LogWeightForm::shifted_log;
  return potential_impl(f, w, params, R, quad);
}

double bilinear_functional(const RadialProfile& f, const RadialProfile& g,
                           const ProblemParams& params, const QuadratureSpec& quad) {
  return bilinear_impl(f, g, plain_weight(params.alpha, params), params, quad);
}

double bilinear_truncated(const RadialProfile& f, const RadialProfile& g,
                          const ProblemParams& params, const QuadratureSpec& quad) {
  return bilinear_impl(f, g, plain_weight(params.alpha, params, 1.0), params, quad);
}

double witness_potential_lower(WitnessKind which, const ProblemParams& params, double R) {
  params.validate();
  if (!(R >= 0.0)) throw std::domain_error("witness lower bound: radius must be >= 0");
  const double d = params.d, alpha = params.alpha;
  if (which == WitnessKind::u0) {
    if (R <= 1.0) return 0.0;
    const double c = 4.0 * std::pow(5.0, alpha - d) * unit_sphere_area(params.d);
    return c * std::pow(R, alpha - d) * std::log(R);
  }
  if (R >= 1.0) return 0.0;
  const double c =
      (4.0 * M_PI / 3.0) * unit_sphere_area(params.d - 1) * std::exp2(-d);
  if (R == 0.0) return kInf;
  return c * std::fabs(std::log(R));
}

}  // namespace riesz
