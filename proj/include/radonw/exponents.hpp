#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "radonw/errors.hpp"

namespace radonw {

/// The four theorem regimes.  The hyperplane kinds require k = n-1; their
/// exponent relations coincide with the k-plane ones at k = n-1, so a single
/// validation path serves both.
enum class Kind {
  HyperplaneFractional,
  HyperplaneRadon,
  KPlaneFractional,
  KPlaneRadon,
};

const char* kind_name(Kind k);
Kind parse_kind(const std::string& name);  // "semyanistyi" | "radon" | "ksemyanistyi" | "kplane"
bool kind_fractional(Kind k);
bool kind_hyperplane(Kind k);

inline constexpr double kInfExponent = std::numeric_limits<double>::infinity();

/// Completed, admissible parameter tuple of one of the four theorems.
struct ExponentConfig {
  int n = 2;            // ambient dimension, >= 2
  int k = 1;            // plane dimension, 1 <= k <= n-1
  double p = 2.0;       // Lebesgue exponent in [1, inf]; infinity is explicit
  double p_conj = 2.0;  // conjugate exponent, 1/p + 1/p' = 1
  double alpha = 0.0;   // fractional order (0 selects the plain transforms)
  double mu = 0.0;      // source weight power
  double nu = 0.0;      // image weight power, derived
  Kind kind = Kind::HyperplaneRadon;

  double inv_p() const { return std::isinf(p) ? 0.0 : 1.0 / p; }
  double inv_p_conj() const { return std::isinf(p_conj) ? 0.0 : 1.0 / p_conj; }
  double lambda() const { return mu + n * inv_p(); }
  int codim() const { return n - k; }  // m = n - k
};

/// Open interval of admissible mu (upper bound +inf for the alpha = 0 kinds).
std::pair<double, double> mu_window(int n, int k, double p, double alpha, Kind kind);

/// Validates the tuple, derives nu, and checks the admissibility window and
/// the Riesz-normalizer exclusion set.  `p` may be infinity.
ExponentConfig validate(int n, int k, double p, double alpha, double mu, Kind kind);

/// Convenience overload: kind inferred from alpha and k (k = n-1 selects the
/// hyperplane kinds).
ExponentConfig validate(int n, int k, double p, double alpha, double mu);

/// Dilation exponents of the source and image norms under f -> f(lambda .).
/// Boundedness forces them to coincide; the pair is returned for reporting.
std::pair<double, double> scaling_exponents(const ExponentConfig& cfg);

}  // namespace radonw
