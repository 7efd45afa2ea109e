#pragma once

#include "radonw/errors.hpp"

namespace radonw::specfun {

/// Default half-width of the rejection window around excluded arguments.
inline constexpr double kPoleMargin = 1e-9;

/// ln Gamma(x) for x > 0.  Relative error <= 1e-13 on [1e-6, 1e6].
double log_gamma(double x);

/// ln |Gamma(x)| together with the sign of Gamma(x); x must not be a
/// non-positive integer (within `margin`).
struct SignedLogGamma {
  double log_abs;
  int sign;  // +1 or -1
};
SignedLogGamma log_gamma_signed(double x, double margin = kPoleMargin);

/// Gamma(x) on the real line minus the non-positive integers.
/// Negative arguments go through the reflection formula.
double gamma_extended(double x, double margin = kPoleMargin);

/// Surface area sigma_m of the unit sphere S^m, m >= 0.
double sphere_area(int m);

/// Riesz normalizer gamma_d(alpha) = 2^alpha pi^{d/2} Gamma(alpha/2) / Gamma((d-alpha)/2).
/// Rejects alpha within `margin` of {0,-2,-4,...} (poles) or {d,d+2,...} (zeros).
double riesz_gamma(int d, double alpha, double margin = kPoleMargin);

/// Throws PoleError iff riesz_gamma(d, alpha) would reject alpha.
void check_riesz_alpha(int d, double alpha, double margin = kPoleMargin);

}  // namespace radonw::specfun
