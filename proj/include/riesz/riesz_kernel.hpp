#pragma once

// Riesz potentials of radial profiles and the bilinear pairing they induce.
//
// For radial f the d-dimensional convolution with a distance weight w(t)
// collapses to one radial integral against the angular transform
//
//   kappa(R, r) = integral over the unit sphere of w(|R e1 - r sigma|),
//
// so I_w f(R) = integral of f(r) r^(d-1) kappa(R, r) dr. The angular
// transform has exact forms in d = 1 (two-point sum) and d = 3 (a flat
// t-integral of t w(t) over [|R-r|, R+r], closed form for pure powers), and
// a complete-elliptic AGM evaluation for the plain d = 2, alpha = 1 kernel.
// All other cases integrate over the polar angle with geometric shells
// absorbing the near-diagonal peak. Radial integrals are split at the
// diagonal r = R, at profile kinks, and at the radii where the distance-one
// sphere enters the picture (log-weight kink, truncation edge).
//
// Divergent potentials are detected from profile metadata before any
// quadrature runs and raise DivergenceError.

#include <functional>
#include <string>

#include "riesz/quadrature.hpp"
#include "riesz/radial_profile.hpp"
#include "riesz/special_functions.hpp"

namespace riesz {

// Positive continuous slowly varying factor Q(z) for the generalized kernel.
// is_identity_one marks the exact Q == 1 case, enabling the plain-kernel
// shortcut when beta == 0.
struct SlowlyVarying {
  std::function<double(double)> fn;
  std::string label;
  bool is_identity_one = false;

  static SlowlyVarying one();
  // Q(z) = log(e + z), slowly varying and positive at z = 0.
  static SlowlyVarying log_shifted();

  double operator()(double z) const { return fn(z); }
};

enum class LogWeightForm { plain_log, shifted_log };

// Kernel weight w(t) = t^(alpha - d) * L(t)^beta * Q(L(t)) with
// L(t) = |log t| (plain_log) or 1 + |log t| (shifted_log).
struct GeneralizedKernelSpec {
  double alpha = 1.0;
  double beta = 0.0;
  SlowlyVarying slowly_varying = SlowlyVarying::one();
  LogWeightForm form = LogWeightForm::plain_log;

  // alpha in (0, d), beta >= 0, callable Q; throws std::domain_error.
  void validate(const ProblemParams& params) const;
};

// Integral of |R e1 - r sigma|^(alpha - d) over the unit sphere S^(d-1).
// Diverges on the diagonal R = r when alpha <= 1 (DivergenceError).
double angular_kernel(double R, double r, const ProblemParams& params,
                      const QuadratureSpec& quad);

// I_alpha f(R) with the plain kernel |x - y|^(alpha - d).
double riesz_potential(const RadialProfile& f, const ProblemParams& params, double R,
                       const QuadratureSpec& quad);

// Same kernel restricted to distances |x - y| <= 1.
double riesz_potential_truncated(const RadialProfile& f, const ProblemParams& params, double R,
                                 const QuadratureSpec& quad);

// Log-weighted kernel per GeneralizedKernelSpec; reduces exactly to
// riesz_potential when beta == 0 and Q is the identity one.
double riesz_potential_generalized(const RadialProfile& f, const GeneralizedKernelSpec& kernel,
                                   const ProblemParams& params, double R,
                                   const QuadratureSpec& quad);

// B(f, g) = (I_alpha f, g) = omega(d) * integral of g(R) R^(d-1) I_alpha f(R).
double bilinear_functional(const RadialProfile& f, const RadialProfile& g,
                           const ProblemParams& params, const QuadratureSpec& quad);

// Bilinear form of the truncated potential; g still ranges over all of R^d.
double bilinear_truncated(const RadialProfile& f, const RadialProfile& g,
                          const ProblemParams& params, const QuadratureSpec& quad);

// Closed-form pointwise lower bounds for the witness potentials:
//   u0(R) >= 4 * 5^(alpha-d) * omega(d) * R^(alpha-d) * log R   for R > 1,
//   v0(R) >= (4 pi / 3) * omega(d-1) * 2^(-d) * |log R|         for R < 1,
// and zero outside the stated ranges (v0 at R = 0 reports +infinity).
enum class WitnessKind { u0, v0 };
double witness_potential_lower(WitnessKind which, const ProblemParams& params, double R);

}  // namespace riesz
