#pragma once

// Closed-form constants and bounds for the bilinear Riesz functional
// B(f, g) = omega(d) * integral of g(R) R^(d-1) (I_alpha f)(R) dR on radial
// functions, over admissible exponent pairs 1/r + 1/s = 1 + alpha/d.
//
// The catalog collects: the sharp diagonal constant (attained in the limit by
// concentrating bump profiles), two explicit upper envelopes, the two
// single-exponent coefficients controlling |I_alpha f|_q by |f|_p, the
// explicit lower envelope built from the witness pair, the truncated-kernel
// coefficient Z(p), and the envelope shape for kernels carrying slowly
// varying factors. All formulas are evaluated literally; free normalization
// constants default to 1 and are echoed next to each value.

#include <functional>
#include <optional>

#include "riesz/maximal_operator.hpp"
#include "riesz/special_functions.hpp"

namespace riesz {

// The six explicit constants entering the witness-pair lower bound machinery.
struct ConstantBundle {
  double a = 0.0;        // denominator coefficient on the (p-1) side
  double m = 0.0;        // min(1, (omega/d)^(1-alpha/d))
  double A = 0.0;        // numerator coefficient on the (p-1) side
  double n = 0.0;        // denominator coefficient on the (d/alpha-p) side
  double D = 0.0;        // numerator coefficient on the (d/alpha-p) side
  double C_alpha = 0.0;  // witness potential tail constant 4 * 5^(alpha-d) * omega(d)
  bool omega0_convention = false;  // true when omega(d-1) used the omega(0)=2 convention
};

ConstantBundle constants_bundle(const ProblemParams& params);

enum class BoundKind {
  sharp_diagonal,
  upper_explicit,
  upper_shape,
  potential_coefficient,
  potential_coefficient_coarse,
  lower_explicit,
  truncated_coefficient,
  generalized_shape,
};

struct BoundValue {
  double value = 0.0;
  BoundKind kind = BoundKind::sharp_diagonal;
  std::optional<double> free_constant;  // set when the bound carries one
};

// Diagonal exponent r = s = 2d/(d+alpha).
double diagonal_pair(const ProblemParams& params);

// pi^((d-alpha)/2) Gamma(alpha/2)/Gamma((d+alpha)/2) *
// (Gamma(d)/Gamma(d/2))^(alpha/d): the best constant on the diagonal pair.
BoundValue sharp_constant_diag(const ProblemParams& params);

// Explicit upper envelope, valid on every admissible pair:
// (rs)^-1 alpha^-1 omega^(1-alpha/d) d^(alpha/d) *
//   [ (r/(r-1))^(1-alpha/d) + (s/(s-1))^(1-alpha/d) ],
// where omega is the area of the unit sphere S^(d-1). That normalization is
// forced: with it the ratio to the sharp diagonal constant tends to 1 as
// alpha -> 0, while any smaller constant drops below the sharp value.
BoundValue upper_bound_eq4(double r, double s, const ProblemParams& params);

// Shape-only upper envelope C * alpha^-1 * [(r-1)(s-1)]^(alpha/d - 1) with a
// free dimensional constant C (default 1).
BoundValue upper_bound_eq4a_shape(double r, double s, const ProblemParams& params,
                                  double c_free = 1.0);

// Coefficient of |f|_p in |I_alpha f|_q, q = pd/(d - alpha p), through the
// maximal-function route; the sharper product form and its coarse relaxation.
BoundValue potential_bound_eq6(double p, const ProblemParams& params, const SteinEnvelope& stein);
BoundValue potential_bound_eq7(double p, const ProblemParams& params, const SteinEnvelope& stein);

// Witness ratio floor
// F(p) = [A (p-1)^(1/p+(d-alpha)/alpha) + D (d/alpha-p)^(1/p+(2d-alpha)/d)] /
//        [2 (a (p-1)^(1/p) + n (d/alpha-p)^(alpha/d))]
// on the closed interval [1, d/alpha], and its infimum R(alpha, d).
double F_of_p(double p, const ProblemParams& params);
double R_of(const ProblemParams& params);

// Lower envelope R(alpha, d) / [(r-1)(s-1)]^(1-alpha/d).
BoundValue lower_bound_eq10(double r, double s, const ProblemParams& params);

// Truncated-kernel coefficient Z(p) = [omega/(d-alpha)]^(1/p) *
// (d/(d-alpha) - p)^(-1/p), the L^p norm of |x|^(alpha-d) on the unit ball,
// finite for 1 <= p < d/(d-alpha).
double Z_of_p(double p, const ProblemParams& params);

// p(r, s) = r's'/(r' + s'); defined whenever r, s >= 1 and 1/r + 1/s >= 1.
double p_of_rs(double r, double s);

// Coefficient Z(p(r, s)) for the truncated bilinear functional; requires
// additionally 1/r + 1/s < 1 + alpha/d.
BoundValue thm3_bound(double r, double s, const ProblemParams& params);

// Envelope shape c * alpha^(-1-beta+alpha/d) * Q(1/alpha) *
// [(r-1)(s-1)]^(alpha/d - 1 - beta) for kernels weighted by
// |log|^beta * Q(|log|); c is free (default 1).
BoundValue thm4_envelope_shape(double r, double s, const ProblemParams& params, double beta,
                               const std::function<double(double)>& Q, double c_free = 1.0);

}  // namespace riesz
