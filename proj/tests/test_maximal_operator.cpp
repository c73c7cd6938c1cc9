// Centered maximal operator on radial profiles: hand values in d = 1, the
// pointwise splitting bound, and the norm-ratio probes.
#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "riesz/errors.hpp"
#include "riesz/maximal_operator.hpp"
#include "riesz/riesz_kernel.hpp"
#include "riesz/special_functions.hpp"

using namespace riesz;

namespace {
const QuadratureSpec kSpec;
const ProblemParams kD1 = make_params(1, 0.5);
const ProblemParams kD2 = make_params(2, 1.0);
}  // namespace

TEST_CASE("maximal function of the interval indicator") {
  const RadialProfile ball = RadialProfile::ball_indicator();
  // Mf(x) = 1 on |x| < 1 and 1/(1+x) beyond: the best interval about x
  // stretches exactly to the far edge of the support.
  CHECK(maximal_radial(ball, kD1, 0.5, kSpec) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(maximal_radial(ball, kD1, 2.0, kSpec) == doctest::Approx(1.0 / 3.0).epsilon(1e-7));
  CHECK(maximal_radial(ball, kD1, 4.0, kSpec) == doctest::Approx(0.2).epsilon(1e-7));
}

TEST_CASE("maximal function dominates continuous profiles pointwise") {
  const RadialProfile bump = RadialProfile::bump(1.0, 1.5);
  for (double R : {0.3, 1.0, 2.0}) {
    CHECK(maximal_radial(bump, kD2, R, kSpec) >= bump(R) * (1.0 - 1e-6));
  }
}

TEST_CASE("maximal function is sublinear at a point") {
  const double mh = maximal_radial(make_h(kD1), kD1, 2.0, kSpec);
  const double mf = maximal_radial(make_f0(kD1), kD1, 2.0, kSpec);
  const double mg = maximal_radial(make_g0(kD1), kD1, 2.0, kSpec);
  CHECK(mh <= (mf + mg) * (1.0 + 1e-6));
}

TEST_CASE("origin singularities and non-integrable profiles") {
  CHECK(std::isinf(maximal_radial(make_g0(kD2), kD2, 0.0, kSpec)));
  // r^-d near the origin is not locally integrable: averages diverge.
  CHECK_THROWS_AS(
      maximal_radial(RadialProfile::power_inside(1.0, 2.0, 1.0), kD2, 0.5, kSpec),
      DivergenceError);
}

TEST_CASE("splitting bound pieces against hand values") {
  // near(delta=1) = Omega(d) (d/alpha) delta^alpha = 2 pi at d=2, alpha=1.
  CHECK(hedberg_near(1.0, kD2) == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
  CHECK(hedberg_near(2.0, kD2) == doctest::Approx(4.0 * M_PI).epsilon(1e-12));
  // far(p=1.5, delta=1) = omega(d) [1/((d-alpha)s - d)]^(1/s) with s = 3: 2 pi.
  CHECK(hedberg_far(1.5, 1.0, kD2) == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
  // p >= d/alpha puts the far integral on or past the divergence line.
  CHECK_THROWS_AS(hedberg_far(2.0, 1.0, kD2), DivergenceError);
}

TEST_CASE("splitting bound dominates the potential") {
  QuadratureSpec pot_spec;
  pot_spec.rel_tol = 1e-8;
  const RadialProfile g0 = make_g0(kD2);
  for (double R : {0.5, 2.0}) {
    const HedbergSplit split = hedberg_bound(g0, 1.5, kD2, R, kSpec);
    CHECK(split.delta > 0.0);
    CHECK(split.near_part >= 0.0);
    CHECK(split.far_part > 0.0);
    const double pot = riesz_potential(g0, kD2, R, pot_spec);
    CHECK(pot <= (split.near_part + split.far_part) * (1.0 + 1e-6));
  }
}

TEST_CASE("norm-ratio probe against the d = 1 hand value") {
  // For the interval indicator: |Mf|_2 = sqrt(3), |f|_2 = sqrt(2), p = 2,
  // so the probe (p-1)/p * |Mf|_p/|f|_p = sqrt(3/8).
  const double probe = stein_ratio_probe(RadialProfile::ball_indicator(), 2.0, kD1, kSpec);
  CHECK(probe == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-4));
}

TEST_CASE("norm-ratio probes respect the envelope constants") {
  QuadratureSpec spec;
  spec.rel_tol = 1e-5;
  const SteinEnvelope env = SteinEnvelope::for_dimension(2);
  for (double p : {1.5, 2.0}) {
    const double probe = stein_ratio_probe(RadialProfile::ball_indicator(), p, kD2, spec);
    CHECK(probe <= env.classic_bound);
    CHECK(probe <= *env.dim2_bound * (1.0 + 1e-3));
  }
  CHECK_THROWS_AS(stein_ratio_probe(make_g0(kD2), 4.0, kD2, spec), DivergenceError);
}

TEST_CASE("envelope bookkeeping") {
  const SteinEnvelope d1 = SteinEnvelope::for_dimension(1);
  CHECK(d1.classic_bound == doctest::Approx(10.0));
  CHECK_FALSE(d1.dim2_bound.has_value());
  CHECK(d1.best() == doctest::Approx(10.0));

  SteinEnvelope d2 = SteinEnvelope::for_dimension(2);
  CHECK(d2.classic_bound == doctest::Approx(50.0));
  CHECK(d2.dim2_bound.has_value());
  CHECK(d2.best() == doctest::Approx(2.0));
  d2.sqrt_bound_constant = 0.5;  // C sqrt(d) = 0.5 sqrt(2)
  CHECK(d2.best() == doctest::Approx(0.5 * std::sqrt(2.0)));
}
