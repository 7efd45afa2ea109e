#pragma once

#include <vector>

#include "radonw/exponents.hpp"
#include "radonw/profiles.hpp"

namespace radonw::verify {

/// Sharpness certification run: pairing ratios along a shrinking-epsilon
/// schedule against the closed-form constant.
struct SweepResult {
  std::vector<double> epsilons;
  std::vector<double> ratios;   // I / (||f|| ||phi||~) per epsilon
  std::vector<double> gaps;     // target - ratio
  double target = 0.0;          // closed-form sharp constant
  double extrapolated = 0.0;    // Richardson limit assuming first-order gaps

  std::string to_csv() const;   // header eps,ratio,target,gap
};

/// Truncated power profile r^{-mu-n/p-eps} 1_{r>1}; its weighted p-norm is
/// sigma_{n-1}/(eps p) exactly (p < inf).
RadialProfile extremal_profile(const ExponentConfig& cfg, double eps);

/// The proof's matching image profile:
///   p in (1,inf): phi_0(t) = t^{mu p - alpha} f_0(t)^{p-1}
///   p = 1:        phi_0(t) = t^{mu - alpha}
///   p = inf:      phi_0(t) = t^{-delta} 1_{t>1} (delta defaults to nu + 2,
///                 raised when needed for dual integrability)
ImageProfile conjugate_profile(const RadialProfile& f, const ExponentConfig& cfg,
                               double delta = 0.0);

/// Smallest admissible delta (exclusive) for the p = inf conjugate profile.
double min_conjugate_delta(const ExponentConfig& cfg);

/// Pairing ratio I / (||f||_{p,mu} ||phi||~_{p',-nu}) for one extremal pair.
double pairing_ratio(const ExponentConfig& cfg, double eps,
                     const QuadratureSpec& spec, double delta = 0.0);

/// Full sweep over a geometric epsilon schedule (default 0.1 * 0.5^j, 8 steps).
/// Throws SharpnessError if any ratio exceeds target * (1 + rel_tol_margin).
SweepResult sharpness_sweep(const ExponentConfig& cfg,
                            const std::vector<double>& eps_schedule,
                            const QuadratureSpec& spec = {},
                            double rel_tol_margin = 1e-3);

std::vector<double> default_eps_schedule();

/// Rayleigh quotients ||T f||~ / ||f|| for a batch of profiles (zero profiles
/// are skipped and reported as NaN).
std::vector<double> rayleigh_check(const std::vector<RadialProfile>& profiles,
                                   const ExponentConfig& cfg,
                                   const QuadratureSpec& spec = {});

/// Max relative residual |R^alpha f - R f| over a t-grid, one entry per alpha.
std::vector<double> limit_check_alpha0(const RadialProfile& f, int n,
                                       const std::vector<double>& alphas,
                                       const std::vector<double>& t_grid,
                                       const QuadratureSpec& spec = {});

}  // namespace radonw::verify
