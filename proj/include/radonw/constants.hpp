#pragma once

#include "radonw/exponents.hpp"
#include "radonw/profiles.hpp"

namespace radonw::constants {

/// Closed-form sharp constant and its provenance.
struct ConstantReport {
  double value = 0.0;       // the sharp constant
  Kind kind = Kind::HyperplaneRadon;
  double lambda = 0.0;      // mu + n/p
  double factor_c1 = 0.0;   // ball/sphere Gamma factor
  double factor_c2 = 1.0;   // Riesz-composition factor (1 for alpha = 0)
  bool has_oracle = false;
  double oracle_value = 0.0;
  double oracle_error = 0.0;
};

/// c_alpha of the fractional hyperplane theorem.
ConstantReport sharp_semyanistyi(const ExponentConfig& cfg);

/// c of the Radon theorem (alpha = 0).
ConstantReport sharp_radon(const ExponentConfig& cfg);

/// c_{alpha,k} of the fractional k-plane theorem.
ConstantReport sharp_k_semyanistyi(const ExponentConfig& cfg);

/// c_k of the plain k-plane theorem.
ConstantReport sharp_k_plane(const ExponentConfig& cfg);

/// Dispatch on cfg.kind.
ConstantReport sharp_constant(const ExponentConfig& cfg);

/// Independent quadrature evaluation of the defining integral (the transform
/// of the pure power |x|^{-lambda} evaluated at unit offset, with the measure
/// prefactor of the matching theorem).  No Gamma-product formulas are used.
struct OracleResult {
  double value = 0.0;
  double error = 0.0;
};
OracleResult constant_oracle(const ExponentConfig& cfg,
                             const QuadratureSpec& spec = {});

/// sharp_constant with the oracle fields filled in.
ConstantReport sharp_constant_with_oracle(const ExponentConfig& cfg,
                                          const QuadratureSpec& spec = {});

}  // namespace radonw::constants
