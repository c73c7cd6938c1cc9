#pragma once

// One-dimensional adaptive quadrature used by every integral in the library.
//
// Smooth panels are handled by Gauss7/Kronrod15 pairs with heap-driven
// bisection (the |K15 - G7| difference is the per-panel error estimate).
// Integrable endpoint singularities and infinite tails are handled by
// geometric shells toward the bad endpoint: the shell sums of an integrand
// behaving like t^s (s > -1 at a finite endpoint, s < -1 at infinity) decay
// geometrically, so the remainder can be extrapolated from the measured
// shell-to-shell ratio, and a ratio that refuses to drop below 1 exposes a
// divergent integral instead of silently truncating it.
//
// Everything is deterministic: fixed node tables, fixed splitting order, no
// randomness, no threads.

#include <functional>

#include "riesz/errors.hpp"

namespace riesz {

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_depth = 72;             // bisection depth limit per panel
  bool singularity_split = true;  // disable to force plain adaptive panels
};

struct IntegralResult {
  double value = 0.0;
  double est_error = 0.0;
};

using Integrand = std::function<double(double)>;

// Single Gauss7/Kronrod15 application on [a, b]; err is |K15 - G7|.
IntegralResult gauss_kronrod_15(const Integrand& f, double a, double b);

// Integrate f over finite [a, b]. The integrand must be finite on the open
// interval; integrable endpoint singularities are announced via the flags.
// ratio_hint, when finite, is the expected geometric decay of shell
// contributions toward a singular endpoint (2^-(1+s) for f ~ t^s).
// Throws AccuracyError when the tolerance is unreachable and DivergenceError
// when shell contributions do not decay.
IntegralResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec,
                         bool singular_left = false, bool singular_right = false,
                         double ratio_hint = -1.0);

// Integrate f over [a, inf), a >= 0. tail_ratio_hint is the expected doubling
// ratio 2^(1+s) for f ~ t^s, s < -1.
IntegralResult integrate_to_infinity(const Integrand& f, double a, const QuadratureSpec& spec,
                                     double tail_ratio_hint = -1.0, bool singular_left = false);

// Integrate f over finite [a, b], 0 < a < b, through the substitution
// x = log t. A stretch spanning many octaves of a near-power integrand turns
// into a gentle exponential in x, so the panel count grows with log(b/a)
// instead of with the bisection depth needed to resolve the short end.
IntegralResult integrate_log_scaled(const Integrand& f, double a, double b,
                                    const QuadratureSpec& spec);

// Golden-section minimizer on [a, b] for unimodal-ish f; returns argmin.
// Deterministic; stops when the bracket shrinks below tol * (|x| + tol).
double golden_section_min(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-10, int max_iter = 200);

}  // namespace riesz
