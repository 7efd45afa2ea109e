#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "radonw/errors.hpp"

namespace radonw {

/// Evaluable radial function f_0(r) with power-law decay envelopes used for
/// truncating integrals:  |f_0(r)| <= c0 r^{-a0} near 0 and
/// |f_0(r)| <= c_inf r^{-a_inf} near infinity.
struct RadialProfile {
  std::function<double(double)> eval;
  /// Optional: u = log r  ->  log f_0(e^u) on the support interior.  Lets the
  /// norm integrals run in log coordinates without under/overflow; power-law
  /// tails with decay rates of order epsilon need truncation radii far beyond
  /// double range, so r itself is never materialized.
  std::function<double(double)> log_eval;
  double a0 = 0.0;
  double a_inf = 0.0;
  double c0 = 1.0;
  double c_inf = 1.0;
  double support_min = 0.0;  // f_0 == 0 below this radius
  double support_max = std::numeric_limits<double>::infinity();
  std::string label;

  double operator()(double r) const {
    if (r < support_min || r > support_max) return 0.0;
    return eval(r);
  }
  bool zero() const { return support_min >= support_max; }
};

/// Profile on the offset variable t of the image space; structurally identical.
struct ImageProfile : RadialProfile {
  ImageProfile() = default;
  explicit ImageProfile(RadialProfile base) : RadialProfile(std::move(base)) {}
};

/// Quadrature controls shared by the transform/norm/verification paths.
struct QuadratureSpec {
  double rel_tol = 1e-9;       // target relative tolerance of adaptive rules
  int max_depth = 4000;        // adaptive panel budget
  double r_max = 0.0;          // truncation radius override (0 = from envelopes)
  int jacobi_nodes = 31;       // node count for the fixed angular rules
  long mc_samples = 200000;    // Monte Carlo sample count
  std::uint64_t seed = 0x5eed5eedULL;
  double tail_budget = 1e-13;  // relative tail mass allowed past truncation
  double mc_scale = 3.0;       // proposal length scale for Monte Carlo
};

// Built-in profile family (also the CLI mini-language):
//   "gauss"            e^{-r^2}
//   "exp"              e^{-r}
//   "ball"             indicator of the unit ball
//   "power:a[,cutoff]" r^{-a} for r > cutoff (default cutoff 1), 0 below
RadialProfile gaussian_profile();
RadialProfile exp_profile();
RadialProfile ball_profile();
RadialProfile power_profile(double a, double cutoff = 1.0);
RadialProfile zero_profile();

RadialProfile parse_profile(const std::string& spec);

/// f -> f(lambda .): rescales envelopes and support exactly.
RadialProfile dilate(const RadialProfile& f, double lambda);

}  // namespace radonw
