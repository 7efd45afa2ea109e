#pragma once

#include "radonw/exponents.hpp"
#include "radonw/profiles.hpp"

namespace radonw::norms {

/// Weighted source norm of a radial function,
/// (sigma_{n-1} int_0^inf r^{n-1+mu p} f_0^p(r) dr)^{1/p};
/// for p = inf the essential sup of r^mu f_0(r) (log-grid + golden section).
double source_norm(const RadialProfile& f, const ExponentConfig& cfg,
                   const QuadratureSpec& spec = {});

/// Weighted image norm.  Hyperplane kinds use the cylinder measure
/// (2 sigma_{n-1} int t^{nu p} phi_0^p dt)^{1/p}; k-plane kinds the
/// Grassmannian-normalized (sigma_{n-k-1} int s^{nu p + n-k-1} phi_0^p ds)^{1/p}.
double image_norm(const ImageProfile& g, const ExponentConfig& cfg,
                  const QuadratureSpec& spec = {});

/// Dual norm of a test profile on the image side, same measure with weight
/// s^{-nu} and the conjugate exponent p'.
double image_dual_norm(const ImageProfile& phi, const ExponentConfig& cfg,
                       const QuadratureSpec& spec = {});

/// Pairing I = int (transform of f) * phi over the image manifold, reduced to
/// the radial integral (2 sigma_{n-1} or sigma_{n-k-1}) int s^{n-k-1} g phi ds.
double dual_pairing(const ImageProfile& g, const ImageProfile& phi,
                    const ExponentConfig& cfg, const QuadratureSpec& spec = {});

/// ess sup over r of r^{w} f_0(r); exposed for tests.
double weighted_sup(const RadialProfile& f, double w,
                    const QuadratureSpec& spec = {});

}  // namespace radonw::norms
