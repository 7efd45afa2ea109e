#pragma once

#include <functional>

#include <Eigen/Dense>

#include "radonw/exponents.hpp"
#include "radonw/geometry.hpp"
#include "radonw/profiles.hpp"

namespace radonw::transforms {

/// Plain k-plane transform of a radial profile at offset radius |t| = t_norm:
/// (R_k f)(v,t) = sigma_{k-1} int_{|t|}^inf f_0(r) r (r^2-|t|^2)^{(k-2)/2} dr,
/// evaluated after r = |t| cosh(s) which removes the k=1 endpoint singularity.
double kplane_radial(const RadialProfile& f, int n, int k, double t_norm,
                     const QuadratureSpec& spec = {});

/// Hyperplane Radon transform: kplane_radial with k = n-1.
double radon_radial(const RadialProfile& f, int n, double t,
                    const QuadratureSpec& spec = {});

/// Fractional k-plane transform (Semyanistyi integral) of a radial profile:
/// (R_k^alpha f)(v,t) = (1/gamma_{n-k}(alpha)) int_0^inf rho^{n-1} f_0(rho)
///                      rho^{alpha-m} M(|t|/rho) drho,
/// M the cached sphere kernel.
double k_semyanistyi_radial(const RadialProfile& f, int n, int k, double t_norm,
                            double alpha, const QuadratureSpec& spec = {});

/// Hyperplane case k = n-1.
double semyanistyi_radial(const RadialProfile& f, int n, double alpha, double t,
                          const QuadratureSpec& spec = {});

/// Transform of a radial profile for a validated config (dispatches on kind).
double transform_radial(const RadialProfile& f, const ExponentConfig& cfg,
                        double t_norm, const QuadratureSpec& spec = {});

/// Image profile s -> (R_k^alpha f)(s) with decay envelopes derived from the
/// source envelopes.
ImageProfile transform_image_profile(const RadialProfile& f,
                                     const ExponentConfig& cfg,
                                     const QuadratureSpec& spec = {});

struct McResult {
  double value = 0.0;
  double stderr_est = 0.0;
};

/// Importance-sampled Monte Carlo estimate of the defining integral
///   (1/gamma_m(alpha)) int f(x) |v^T x - t|^{alpha+k-n} dx      (alpha > 0)
///   int over the plane {v^T x = t} of f                         (alpha = 0)
/// for a general (not necessarily radial) integrand at small n.  The proposal
/// concentrates near the singular set using the |.|^{alpha-m} weight itself.
McResult transform_general_mc(const std::function<double(const Eigen::VectorXd&)>& f,
                              const geometry::KPlaneCoords& coords, double alpha,
                              const QuadratureSpec& spec = {});

/// Radial fast path vs Monte Carlo agreement; throws EvaluationError when the
/// discrepancy exceeds 5 combined standard errors.
void mc_consistency_check(const RadialProfile& f, int n, int k, double t_norm,
                          double alpha, const QuadratureSpec& spec = {});

}  // namespace radonw::transforms
