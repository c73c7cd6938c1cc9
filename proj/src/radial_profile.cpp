#include "riesz/radial_profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace riesz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

RadialProfile RadialProfile::power_outside(double c, double gamma, double r0) {
  if (!(c > 0.0)) throw std::domain_error("power_outside: amplitude c must be > 0");
  if (!(r0 > 0.0)) throw std::domain_error("power_outside: radius r0 must be > 0");
  RadialProfile f;
  f.kind_ = Kind::power_outside;
  f.c_ = c;
  f.gamma_ = gamma;
  f.r0_ = r0;
  f.support_lo_ = r0;
  f.support_hi_ = kInf;
  f.origin_exponent_ = 0.0;
  f.origin_amplitude_ = 0.0;  // vanishes near 0
  f.origin_valid_to_ = r0;
  f.tail_exponent_ = gamma;
  f.tail_amplitude_ = c;
  f.tail_valid_from_ = r0;
  return f;
}

RadialProfile RadialProfile::power_inside(double c, double gamma, double r0) {
  if (!(c > 0.0)) throw std::domain_error("power_inside: amplitude c must be > 0");
  if (!(r0 > 0.0)) throw std::domain_error("power_inside: radius r0 must be > 0");
  RadialProfile f;
  f.kind_ = Kind::power_inside;
  f.c_ = c;
  f.gamma_ = gamma;
  f.r0_ = r0;
  f.support_lo_ = 0.0;
  f.support_hi_ = r0;
  f.origin_exponent_ = std::max(gamma, 0.0);
  f.origin_amplitude_ = c * (gamma < 0.0 ? std::pow(r0, -gamma) : 1.0);
  f.origin_valid_to_ = kInf;  // c r^-gamma majorizes f everywhere
  f.tail_exponent_ = kInf;
  f.tail_amplitude_ = 0.0;
  f.tail_valid_from_ = r0;
  return f;
}

RadialProfile RadialProfile::ball_indicator(double r0) { return power_inside(1.0, 0.0, r0); }

RadialProfile RadialProfile::bump(double lambda_scale, double exponent) {
  if (!(lambda_scale > 0.0)) throw std::domain_error("bump: lambda_scale must be > 0");
  if (!(exponent > 0.0)) throw std::domain_error("bump: exponent must be > 0");
  RadialProfile f;
  f.kind_ = Kind::bump;
  f.lambda_ = lambda_scale;
  f.exponent_ = exponent;
  f.support_lo_ = 0.0;
  f.support_hi_ = kInf;
  f.origin_exponent_ = 0.0;
  f.origin_amplitude_ = 1.0;
  f.origin_valid_to_ = kInf;
  f.tail_exponent_ = 2.0 * exponent;
  f.tail_amplitude_ = std::pow(lambda_scale, 2.0 * exponent);  // (1+x^2)^-e <= x^-2e
  f.tail_valid_from_ = lambda_scale;
  return f;
}

RadialProfile RadialProfile::sum(std::vector<RadialProfile> parts) {
  if (parts.empty()) throw std::domain_error("sum: needs at least one part");
  RadialProfile f;
  f.kind_ = Kind::sum;
  // Flatten nested sums so metadata and breakpoints see every leaf.
  for (auto& p : parts) {
    if (p.kind_ == Kind::sum)
      for (auto& q : p.parts_) f.parts_.push_back(std::move(q));
    else
      f.parts_.push_back(std::move(p));
  }
  f.derive_sum_metadata();
  return f;
}

void RadialProfile::derive_sum_metadata() {
  support_lo_ = kInf;
  support_hi_ = 0.0;
  origin_exponent_ = 0.0;
  origin_amplitude_ = 0.0;
  origin_valid_to_ = kInf;
  tail_exponent_ = kInf;
  tail_amplitude_ = 0.0;
  tail_valid_from_ = 1.0;
  bool mixed_origin = false, mixed_tail = false;
  for (const auto& p : parts_) {
    support_lo_ = std::min(support_lo_, p.support_lo_);
    support_hi_ = std::max(support_hi_, p.support_hi_);
    if (p.support_lo_ == 0.0) {
      if (origin_amplitude_ > 0.0 && p.origin_exponent_ != origin_exponent_) mixed_origin = true;
      origin_exponent_ = std::max(origin_exponent_, p.origin_exponent_);
      origin_amplitude_ += p.origin_amplitude_;
      origin_valid_to_ = std::min(origin_valid_to_, p.origin_valid_to_);
    }
    if (std::isinf(p.support_hi_)) {
      if (tail_amplitude_ > 0.0 && p.tail_exponent_ != tail_exponent_) mixed_tail = true;
      tail_exponent_ = std::min(tail_exponent_, p.tail_exponent_);
      tail_amplitude_ += p.tail_amplitude_;
      tail_valid_from_ = std::max(tail_valid_from_, p.tail_valid_from_);
    }
  }
  // With mixed exponents the summed envelope amplitude is only valid where
  // every r^-gamma_i is dominated by r^-gamma_extreme.
  if (mixed_origin) origin_valid_to_ = std::min(origin_valid_to_, 1.0);
  if (mixed_tail) tail_valid_from_ = std::max(tail_valid_from_, 1.0);
}

RadialProfile RadialProfile::generic(std::function<double(double)> evaluator,
                                     double origin_exponent, double tail_exponent,
                                     double support_hi, std::string label) {
  if (!evaluator) throw std::domain_error("generic: evaluator must be callable");
  RadialProfile f;
  f.kind_ = Kind::generic;
  f.eval_ = std::move(evaluator);
  f.label_ = std::move(label);
  f.support_lo_ = 0.0;
  f.support_hi_ = support_hi;
  f.origin_exponent_ = origin_exponent;
  f.tail_exponent_ = std::isinf(support_hi) ? tail_exponent : kInf;

  // Envelope amplitudes are estimated from samples (x4 headroom); negative
  // values anywhere reject the profile.
  double amp0 = 0.0, ampt = 0.0;
  const double hi = std::isinf(support_hi) ? 1e6 : support_hi;
  for (int i = 0; i <= 160; ++i) {
    const double r = 1e-6 * std::pow(hi / 1e-6, i / 160.0);
    const double v = f.eval_(r);
    if (v < 0.0) throw std::domain_error("generic: profile must be nonnegative");
    if (r <= 1.0) amp0 = std::max(amp0, v * std::pow(r, origin_exponent));
    if (r >= 1.0 && std::isinf(support_hi))
      ampt = std::max(ampt, v * std::pow(r, tail_exponent));
  }
  f.origin_amplitude_ = 4.0 * amp0;
  f.origin_valid_to_ = 1.0;
  f.tail_amplitude_ = 4.0 * ampt;
  f.tail_valid_from_ = 1.0;
  return f;
}

double RadialProfile::operator()(double r) const {
  if (r < 0.0) throw std::domain_error("RadialProfile: radius must be >= 0");
  switch (kind_) {
    case Kind::power_outside:
      return r > r0_ ? c_ * std::pow(r, -gamma_) : 0.0;
    case Kind::power_inside:
      return r < r0_ && r > 0.0 ? c_ * std::pow(r, -gamma_)
                                : (r == 0.0 && gamma_ <= 0.0 ? (gamma_ == 0.0 ? c_ : 0.0) : 0.0);
    case Kind::bump: {
      const double t = r / lambda_;
      return std::pow(1.0 + t * t, -exponent_);
    }
    case Kind::sum: {
      double v = 0.0;
      for (const auto& p : parts_) v += p(r);
      return v;
    }
    case Kind::generic:
      return eval_(r);
  }
  return 0.0;
}

std::vector<double> RadialProfile::breakpoints() const {
  std::set<double> bp;
  switch (kind_) {
    case Kind::power_outside:
    case Kind::power_inside:
      bp.insert(r0_);
      break;
    case Kind::sum:
      for (const auto& p : parts_)
        for (double b : p.breakpoints()) bp.insert(b);
      break;
    case Kind::bump:
      break;
    case Kind::generic:
      if (!std::isinf(support_hi_) && support_hi_ > 0.0) bp.insert(support_hi_);
      break;
  }
  return {bp.begin(), bp.end()};
}

double RadialProfile::characteristic_radius() const {
  double scale = kind_ == Kind::bump ? lambda_ : 1.0;
  for (double b : breakpoints()) scale = std::max(scale, b);
  if (kind_ == Kind::sum)
    for (const auto& p : parts_) scale = std::max(scale, p.characteristic_radius());
  return scale;
}

std::string RadialProfile::descriptor() const {
  switch (kind_) {
    case Kind::power_outside:
      return "power_outside c=" + fmt(c_) + " gamma=" + fmt(gamma_) + " r0=" + fmt(r0_);
    case Kind::power_inside:
      return "power_inside c=" + fmt(c_) + " gamma=" + fmt(gamma_) + " r0=" + fmt(r0_);
    case Kind::bump:
      return "bump lambda=" + fmt(lambda_) + " exponent=" + fmt(exponent_);
    case Kind::sum: {
      std::string s = "sum(";
      for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += " + ";
        s += " " + parts_[i].descriptor() + " ";
      }
      return s + ")";
    }
    case Kind::generic:
      throw UnsupportedShapeError("descriptor: generic profile '" + label_ +
                                  "' is not serializable");
  }
  return {};
}

namespace {

double parse_kv(std::istringstream& in, const std::string& key, const std::string& ctx) {
  std::string tok;
  if (!(in >> tok) || tok.rfind(key + "=", 0) != 0)
    throw ConfigError("profile parse: expected " + key + "=<value> in " + ctx);
  size_t pos = 0;
  double v;
  try {
    v = std::stod(tok.substr(key.size() + 1), &pos);
  } catch (const std::exception&) {
    throw ConfigError("profile parse: bad number for " + key + " in " + ctx);
  }
  if (pos != tok.size() - key.size() - 1)
    throw ConfigError("profile parse: bad number for " + key + " in " + ctx);
  return v;
}

}  // namespace

RadialProfile RadialProfile::parse(const std::string& text) {
  std::string t = text;
  // sum( a + b + ... ): split on top-level '+' tokens surrounded by spaces.
  auto strip = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  t = strip(t);
  if (t.rfind("sum(", 0) == 0) {
    if (t.back() != ')') throw ConfigError("profile parse: unterminated sum(...)");
    std::string inner = t.substr(4, t.size() - 5);
    std::vector<RadialProfile> parts;
    size_t start = 0;
    while (start <= inner.size()) {
      size_t plus = inner.find(" + ", start);
      std::string piece = strip(plus == std::string::npos ? inner.substr(start)
                                                          : inner.substr(start, plus - start));
      if (piece.empty()) throw ConfigError("profile parse: empty term in sum(...)");
      parts.push_back(parse(piece));
      if (plus == std::string::npos) break;
      start = plus + 3;
    }
    return sum(std::move(parts));
  }
  std::istringstream in(t);
  std::string name;
  in >> name;
  if (name == "power_outside") {
    const double c = parse_kv(in, "c", t), g = parse_kv(in, "gamma", t),
                 r0 = parse_kv(in, "r0", t);
    return power_outside(c, g, r0);
  }
  if (name == "power_inside") {
    const double c = parse_kv(in, "c", t), g = parse_kv(in, "gamma", t),
                 r0 = parse_kv(in, "r0", t);
    return power_inside(c, g, r0);
  }
  if (name == "bump") {
    const double l = parse_kv(in, "lambda", t), e = parse_kv(in, "exponent", t);
    return bump(l, e);
  }
  throw ConfigError("profile parse: unknown profile kind '" + name + "'");
}

RadialProfile make_f0(const ProblemParams& params) {
  params.validate();
  return RadialProfile::power_outside(1.0, params.d, 1.0);
}

RadialProfile make_g0(const ProblemParams& params) {
  params.validate();
  return RadialProfile::power_inside(1.0, params.alpha, 1.0);
}

RadialProfile make_h(const ProblemParams& params) {
  return RadialProfile::sum({make_f0(params), make_g0(params)});
}

RadialProfile parse_profile(const std::string& text, const ProblemParams& params) {
  if (text == "f0") return make_f0(params);
  if (text == "g0") return make_g0(params);
  if (text == "h") return make_h(params);
  if (text == "ball") return RadialProfile::ball_indicator();
  if (text == "bump") return RadialProfile::bump(1.0, 0.5 * (params.d + params.alpha));
  return RadialProfile::parse(text);
}

std::string lp_integrability_violation(const RadialProfile& f, double p,
                                       const ProblemParams& params) {
  const double d = params.d;
  auto check_leaf = [&](const RadialProfile& g) -> std::string {
    if (g.support_lo() == 0.0 && g.origin_exponent() * p >= d && g.origin_amplitude() > 0.0)
      return "|f|_p divergent at the origin: origin_exponent * p = " +
             std::to_string(g.origin_exponent() * p) + " >= d";
    if (std::isinf(g.support_hi()) && g.tail_exponent() * p <= d && g.tail_amplitude() > 0.0)
      return "|f|_p divergent at infinity: tail_exponent * p = " +
             std::to_string(g.tail_exponent() * p) + " <= d";
    return {};
  };
  if (f.kind() == RadialProfile::Kind::sum) {
    for (const auto& part : f.parts()) {
      auto v = check_leaf(part);
      if (!v.empty()) return v;
    }
    return {};
  }
  return check_leaf(f);
}

NormResult lp_norm_closed(const RadialProfile& f, double p, const ProblemParams& params) {
  params.validate();
  if (!(p >= 1.0)) throw std::domain_error("lp_norm_closed: p must be >= 1");
  const double d = params.d;
  const double omega = unit_sphere_area(params.d);
  const double c = f.amplitude(), gamma = f.power(), r0 = f.radius();
  double denom;
  switch (f.kind()) {
    case RadialProfile::Kind::power_outside:
      denom = gamma * p - d;
      if (!(denom > 0.0))
        throw DivergenceError("lp_norm_closed: tail not integrable, needs gamma*p > d");
      break;
    case RadialProfile::Kind::power_inside:
      denom = d - gamma * p;
      if (!(denom > 0.0))
        throw DivergenceError("lp_norm_closed: origin not integrable, needs gamma*p < d");
      break;
    default:
      throw std::domain_error("lp_norm_closed: closed form exists only for power profiles");
  }
  const double val =
      std::pow(omega * std::pow(c, p) * std::pow(r0, d - gamma * p) / denom, 1.0 / p);
  return {val, NormMethod::closed_form, 0.0};
}

NormResult lp_norm_numeric(const RadialProfile& f, double p, const ProblemParams& params,
                           const QuadratureSpec& spec) {
  params.validate();
  if (!(p >= 1.0)) throw std::domain_error("lp_norm_numeric: p must be >= 1");
  const std::string violation = lp_integrability_violation(f, p, params);
  if (!violation.empty()) throw DivergenceError("lp_norm_numeric: " + violation);

  const double d = params.d;
  const double omega = unit_sphere_area(params.d);
  // The early return on f(r) == 0 avoids 0 * inf once r^(d-1) overflows on
  // deep tail shells.
  auto integrand = [&](double r) {
    const double fr = f(r);
    if (fr == 0.0) return 0.0;
    return std::pow(fr, p) * std::pow(r, d - 1.0);
  };

  // Segment at profile kinks; geometric shells absorb the origin singularity
  // and the power tail, so no hard cutoff radii are needed.
  const double lo = f.support_lo(), hi = f.support_hi();
  std::vector<double> cuts{lo};
  for (double b : f.breakpoints())
    if (b > lo && b < hi) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  if (std::isinf(hi)) {
    const double tail_start = std::max({1.0, cuts.back(), f.characteristic_radius()});
    if (tail_start > cuts.back()) cuts.push_back(tail_start);
  } else if (hi > cuts.back()) {
    cuts.push_back(hi);
  }

  double total = 0.0, err = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const bool sing_left = i == 0 && lo == 0.0 && f.origin_exponent() > 0.0;
    const double hint = sing_left ? std::exp2(-(d - f.origin_exponent() * p)) : -1.0;
    IntegralResult seg = integrate(integrand, cuts[i], cuts[i + 1], spec, sing_left, false, hint);
    total += seg.value;
    err += seg.est_error;
  }
  if (std::isinf(hi)) {
    IntegralResult tail = integrate_to_infinity(integrand, cuts.back(), spec,
                                                std::exp2(-(f.tail_exponent() * p - d)));
    total += tail.value;
    err += tail.est_error;
  }
  if (!(total > 0.0)) return {0.0, NormMethod::quadrature, std::pow(err * omega, 1.0 / p)};
  const double value = std::pow(omega * total, 1.0 / p);
  return {value, NormMethod::quadrature, err / total * value / p};
}

NormResult weak_lq_norm(const RadialProfile& f, double q, const ProblemParams& params,
                        const QuadratureSpec& spec) {
  params.validate();
  if (!(q > 1.0)) throw std::domain_error("weak_lq_norm: q must be > 1");
  const double d = params.d;

  // The centered-ball formula computes the norm only for radially
  // nonincreasing profiles; verify on a wide log grid.
  const double scale = f.characteristic_radius();
  double prev = kInf;
  for (int i = 0; i <= 256; ++i) {
    const double r = 1e-6 * scale * std::pow(1e12, i / 256.0);
    const double v = f(r);
    if (v > prev * (1.0 + 1e-12) + 1e-300)
      throw UnsupportedShapeError("weak_lq_norm: profile is not radially nonincreasing");
    prev = v;
  }

  // Divergence screens: f ~ r^-g0 at 0 needs g0 <= d/q; tail r^-gt needs gt >= d/q.
  if (f.support_lo() == 0.0 && f.origin_amplitude() > 0.0 && f.origin_exponent() * q > d)
    throw DivergenceError("weak_lq_norm: origin_exponent * q > d, weak norm infinite");
  if (std::isinf(f.support_hi()) && f.tail_amplitude() > 0.0 && f.tail_exponent() * q < d)
    throw DivergenceError("weak_lq_norm: tail_exponent * q < d, weak norm infinite");

  const double omega = unit_sphere_area(params.d);
  const double ball = unit_ball_volume(params.d);
  auto integrand = [&](double r) {
    const double fr = f(r);
    return fr == 0.0 ? 0.0 : fr * std::pow(r, d - 1.0);
  };
  const bool sing0 = f.support_lo() == 0.0 && f.origin_exponent() > 0.0;

  // Prefix integrals over a fixed log grid, then golden refinement around the
  // best grid radius.
  const int n = 400;
  const double lo = 1e-6 * scale, hi = 1e6 * scale;
  std::vector<double> radii(n + 1), prefix(n + 1, 0.0);
  for (int i = 0; i <= n; ++i) radii[i] = lo * std::pow(hi / lo, static_cast<double>(i) / n);
  IntegralResult head = integrate(integrand, 0.0, radii[0], spec, sing0, false);
  prefix[0] = head.value;
  double err = head.est_error;
  for (int i = 1; i <= n; ++i) {
    std::vector<double> cuts{radii[i - 1], radii[i]};
    for (double b : f.breakpoints())
      if (b > radii[i - 1] && b < radii[i]) cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double seg = 0.0;
    for (size_t j = 0; j + 1 < cuts.size(); ++j) {
      IntegralResult part = integrate(integrand, cuts[j], cuts[j + 1], spec);
      seg += part.value;
      err += part.est_error;
    }
    prefix[i] = prefix[i - 1] + seg;
  }

  auto weak_at = [&](double R, double cum) {
    return std::pow(ball * std::pow(R, d), 1.0 / q - 1.0) * omega * cum;
  };
  int best = 0;
  double best_val = -1.0;
  for (int i = 0; i <= n; ++i) {
    const double w = weak_at(radii[i], prefix[i]);
    if (w > best_val) {
      best_val = w;
      best = i;
    }
  }
  const double ra = radii[std::max(0, best - 1)], rb = radii[std::min(n, best + 1)];
  auto neg_w = [&](double R) {
    const auto it = std::upper_bound(radii.begin(), radii.end(), R);
    const int j = std::max(0, static_cast<int>(it - radii.begin()) - 1);
    IntegralResult tail_part = integrate(integrand, radii[j], R, spec);
    return -weak_at(R, prefix[j] + tail_part.value);
  };
  const double r_star = golden_section_min(neg_w, ra, rb, 1e-10);
  const double refined = -neg_w(r_star);
  best_val = std::max(best_val, refined);
  return {best_val, NormMethod::quadrature, err * omega};
}

}  // namespace riesz
