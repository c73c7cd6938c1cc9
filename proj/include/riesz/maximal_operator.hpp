#pragma once

// Hardy-Littlewood maximal function of radial profiles, the near/far split of
// the potential through the maximal function, and empirical probes of the
// maximal-operator norm constant.
//
// The maximal function Mf(R) = sup over t > 0 of the average of f over the
// ball of radius t centered at radius R. Averages reduce to radial integrals
// weighted by the angular share of each sphere lying inside the ball; the
// supremum is located on a log-spaced grid with golden-section refinement, so
// computed values are certified lower estimates of the true supremum.

#include <optional>

#include "riesz/quadrature.hpp"
#include "riesz/radial_profile.hpp"
#include "riesz/special_functions.hpp"

namespace riesz {

// Known envelopes for the maximal-operator constant S(d) in
// |Mf|_p <= S(d) * p/(p-1) * |f|_p. The dimension-free sqrt form has an
// unspecified leading constant, left unset unless supplied by the caller.
struct SteinEnvelope {
  int d = 1;
  double classic_bound = 10.0;                // 2 * 5^d
  std::optional<double> dim2_bound;           // 2, present only when d == 2
  std::optional<double> sqrt_bound_constant;  // C in C * sqrt(d), caller-set

  static SteinEnvelope for_dimension(int d);
  // Tightest of the envelopes currently set.
  double best() const;
};

// Pointwise split of the potential at radius R: the part of the kernel within
// distance delta is controlled by Mf, the rest by Hoelder against |f|_p.
struct HedbergSplit {
  double delta = 0.0;
  double near_part = 0.0;  // A(delta) * Mf(R)
  double far_part = 0.0;   // D(p, delta) * |f|_p
};

// Lower estimate of Mf(R). Returns +infinity at R = 0 for profiles with a
// genuine power singularity there (small-ball averages are unbounded);
// profiles failing local integrability raise DivergenceError.
double maximal_radial(const RadialProfile& f, const ProblemParams& params, double R,
                      const QuadratureSpec& search);

// Near-kernel coefficient A(delta) = Omega(d) * (d / alpha) * delta^alpha.
double hedberg_near(double delta, const ProblemParams& params);

// Far-kernel coefficient D(p, delta) =
// omega(d) * [delta^(d - (d-alpha)s) / ((d-alpha)s - d)]^(1/s), s = p/(p-1);
// finite only for 1 < p < d/alpha (DivergenceError otherwise).
double hedberg_far(double p, double delta, const ProblemParams& params);

// Split at the delta minimizing near(delta)*Mf(R) + far(p,delta)*|f|_p, using
// the closed-form stationary point of c1 delta^alpha + c2 delta^(-kappa).
HedbergSplit hedberg_bound(const RadialProfile& f, double p, const ProblemParams& params,
                           double R, const QuadratureSpec& quad);

// |Mf|_p (p-1) / (p |f|_p): an empirical lower estimate of S(d).
double stein_ratio_probe(const RadialProfile& f, double p, const ProblemParams& params,
                         const QuadratureSpec& quad);

}  // namespace riesz
