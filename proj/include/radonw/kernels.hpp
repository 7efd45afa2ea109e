#pragma once

#include <cmath>
#include <memory>
#include <mutex>
#include <vector>

#include "radonw/errors.hpp"

namespace radonw::kernels {

/// Chebyshev interpolant on [a, b] (first-kind nodes, Clenshaw evaluation).
struct ChebFit {
  double a = 0.0, b = 1.0;
  std::vector<double> coef;

  bool empty() const { return coef.empty(); }
  double operator()(double x) const;

  template <class F>
  static ChebFit fit(F&& f, double a, double b, int n) {
    ChebFit c;
    c.a = a;
    c.b = b;
    std::vector<double> vals(n);
    for (int j = 0; j < n; ++j) {
      const double xj = std::cos(M_PI * (j + 0.5) / n);
      vals[j] = f(0.5 * (xj + 1.0) * (b - a) + a);
    }
    c.coef.resize(n);
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int j = 0; j < n; ++j)
        s += vals[j] * std::cos(M_PI * k * (j + 0.5) / n);
      c.coef[k] = 2.0 * s / n;
    }
    return c;
  }
};

/// The spherical factor of the fractional k-plane kernel:
///
///   M(z) = integral over S^{n-1} of |P eta - z e_1|^{alpha + k - n} dsigma,
///
/// P the projection onto the first m = n-k coordinates.  The full kernel is
/// K(s, rho) = rho^{alpha-m} M(s/rho).  M blows up at z = 1 like
/// |1-z|^{psi} with psi = alpha + k/2 - 1 when psi < 0 (log when psi = 0) and
/// behaves like sigma_{n-1} z^{alpha-m} at infinity.
///
/// direct() evaluates by adaptive quadrature of the reduced integrals (the
/// projection density (1 - |y|^2)^{k/2-1} for m >= 2); operator() uses
/// Chebyshev tables in log coordinates around z = 1, built on first use.
class SphereKernel {
 public:
  SphereKernel(int n, int k, double alpha);

  int n() const { return n_; }
  int k() const { return k_; }
  int m() const { return m_; }
  double alpha() const { return alpha_; }
  double psi() const { return psi_; }

  /// Quadrature evaluation, independent of the tables.  z >= 0, z != 1.
  double direct(double z) const;

  /// Table-backed evaluation (builds tables on first call).
  double operator()(double z) const;

  /// M(z) with the singular factor |1-z|^{psi} divided out (psi < 0 only;
  /// otherwise equals operator()).  Finite and smooth across z = 1.
  double regular(double z) const;

  /// Closed-form M(0) = sigma_{k-1} sigma_{m-1} B(alpha/2, k/2) / 2.
  double m0() const;

  /// Leading large-z coefficient sigma_{n-1} (M ~ sigma_{n-1} z^{alpha-m}).
  double asymptotic_coeff() const;

  /// Memoized shared instances keyed on (n, k, alpha).
  static const SphereKernel& cached(int n, int k, double alpha);

 private:
  double direct_codim1(double z) const;
  double direct_codim_ge2(double z) const;
  double angular(double z, double tau, double sum_m1) const;
  double regular_direct_near_one(double delta, bool below) const;
  void ensure_tables() const;

  int n_, k_, m_;
  double alpha_, psi_;

  mutable std::once_flag built_;
  mutable ChebFit below_, above_, far_;  // z in [0,1), (1,2], [2,inf)
};

}  // namespace radonw::kernels
