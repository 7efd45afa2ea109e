#include "radonw/transforms.hpp"

#include <cmath>

#include "radonw/kernels.hpp"
#include "radonw/quadrature.hpp"
#include "radonw/specfun.hpp"

namespace radonw::transforms {
namespace {

quad::Options opts_from(const QuadratureSpec& spec) {
  quad::Options o;
  o.rel_tol = spec.rel_tol;
  o.max_panels = spec.max_depth;
  return o;
}

// Truncation radius for int r^{power} f_0(r) ... dr given the profile's decay
// envelope; support_max wins when finite.
double upper_radius(const RadialProfile& f, double power, double extra_decay,
                    const QuadratureSpec& spec) {
  double r = f.support_max;
  if (!std::isfinite(r))
    r = quad::tail_radius(f.c_inf, f.a_inf + extra_decay, power,
                          spec.tail_budget);
  if (spec.r_max > 0.0) r = std::min(r, spec.r_max);
  return r;
}

double lower_radius(const RadialProfile& f, double power,
                    const QuadratureSpec& spec) {
  if (f.support_min > 0.0) return f.support_min;
  return quad::head_radius(f.c0, f.a0, power, spec.tail_budget);
}

}  // namespace

double kplane_radial(const RadialProfile& f, int n, int k, double t_norm,
                     const QuadratureSpec& spec) {
  if (n < 2 || k < 1 || k > n - 1)
    throw DomainError("kplane_radial: need n >= 2 and 1 <= k <= n-1");
  const double t = std::fabs(t_norm);
  const double sig = specfun::sphere_area(k - 1);
  const auto o = opts_from(spec);
  if (f.zero()) return 0.0;
  if (t == 0.0) {
    // integral over a k-plane through the origin
    const double lo = lower_radius(f, k - 1, spec);
    const double hi = upper_radius(f, k - 1, 0.0, spec);
    if (!(lo < hi)) return 0.0;
    auto g = [&](double r) { return std::pow(r, k - 1) * f(r); };
    return sig * quad::integrate_log(g, lo, hi, o).value;
  }
  // r = t cosh(s) turns the Abel-type weight (r^2-t^2)^{(k-2)/2} smooth,
  // including the k=1 inverse square root.  The truncation in s must be
  // relative to t: the substituted integrand decays like e^{-(a_inf - k) s}
  // whatever the offset.
  double s_max;
  double r_cap = f.support_max;
  if (spec.r_max > 0.0) r_cap = std::min(r_cap, spec.r_max);
  if (std::isfinite(r_cap)) {
    if (r_cap <= t) return 0.0;
    s_max = std::acosh(r_cap / t);
  } else {
    const double rate = f.a_inf - k;
    if (!(rate > 0.0))
      throw IntegrabilityError(
          "kplane_radial: envelope decay r^-" + std::to_string(f.a_inf) +
          " is not integrable over a " + std::to_string(k) + "-plane");
    s_max = (std::log(1.0 / spec.tail_budget) +
             std::fabs(std::log(std::max(f.c_inf, 1e-300)))) / rate + 5.0;
  }
  auto g = [&](double s) {
    const double ch = std::cosh(s), sh = std::sinh(s);
    return std::pow(t, k) * std::pow(sh, k - 1) * ch * f(t * ch);
  };
  return sig * quad::integrate(g, 0.0, s_max, o).value;
}

double radon_radial(const RadialProfile& f, int n, double t,
                    const QuadratureSpec& spec) {
  return kplane_radial(f, n, n - 1, t, spec);
}

double k_semyanistyi_radial(const RadialProfile& f, int n, int k, double t_norm,
                            double alpha, const QuadratureSpec& spec) {
  if (n < 2 || k < 1 || k > n - 1)
    throw DomainError("k_semyanistyi_radial: need n >= 2 and 1 <= k <= n-1");
  if (!(alpha > 0.0))
    throw DomainError("k_semyanistyi_radial: alpha must be positive");
  if (f.zero()) return 0.0;
  const int m = n - k;
  const double s = std::fabs(t_norm);
  const auto& ker = kernels::SphereKernel::cached(n, k, alpha);
  const double gamma_m = specfun::riesz_gamma(m, alpha);
  const double psi = ker.psi();
  const auto o = opts_from(spec);

  double hi = upper_radius(f, n - 1, m - alpha, spec);
  // past rho ~ s the kernel sits on its M(0) plateau and the integrand decays
  // like rho^{-1-rate} with rate = a_inf + m - alpha - n; the truncation must
  // scale with the offset (in log form: the radius itself can overflow)
  if (!std::isfinite(f.support_max) && s > 1.0) {
    const double rate = f.a_inf + m - alpha - n;
    const double log_hi =
        std::log(s) + std::log(1.0 / spec.tail_budget) / std::max(rate, 1e-8);
    hi = std::max(hi, std::exp(std::min(log_hi, 667.0)));
    if (spec.r_max > 0.0) hi = std::min(hi, spec.r_max);
  }
  double lo = lower_radius(f, n - 1, spec);
  if (!(lo < hi)) return 0.0;

  if (s == 0.0) {
    const double m0 = ker.m0();
    auto g = [&](double rho) {
      return std::pow(rho, n - 1 + alpha - m) * f(rho) * m0;
    };
    return quad::integrate_log(g, lo, hi, o).value / gamma_m;
  }

  auto g_full = [&](double rho) {
    const double fv = f(rho);
    if (fv == 0.0) return 0.0;
    return std::pow(rho, n - 1 + alpha - m) * fv * ker(s / rho);
  };
  quad::Result res;
  // z = s/rho >= 2: far table
  if (lo < 0.5 * s)
    res += quad::integrate_log(g_full, lo, std::min(0.5 * s, hi), o);
  // the singular factor |1 - s/rho|^psi = |rho - s|^psi rho^{-psi} is pulled
  // out exactly on both sides of rho = s when psi < 0
  auto g_reg = [&](double rho) {
    const double fv = f(rho);
    if (fv == 0.0) return 0.0;
    return std::pow(rho, n - 1 + alpha - m - psi) * fv * ker.regular(s / rho);
  };
  const double a2 = std::max(lo, 0.5 * s), b2 = std::min(s, hi);
  if (a2 < b2) {
    // the endpoint factor is |rho - s|^psi; it belongs to the rule only when
    // the segment actually reaches rho = s (a support cap can stop it short,
    // leaving a perfectly regular integrand)
    if (psi < 0.0 && b2 == s)
      res += quad::integrate_power_endpoint(g_reg, a2, b2, psi, false, o);
    else
      res += quad::integrate(g_full, a2, b2, o);
  }
  const double a3 = std::max(lo, s), b3 = std::min(2.0 * s, hi);
  if (a3 < b3) {
    if (psi < 0.0 && a3 == s)
      res += quad::integrate_power_endpoint(g_reg, a3, b3, psi, true, o);
    else
      res += quad::integrate(g_full, a3, b3, o);
  }
  if (hi > 2.0 * s)
    res += quad::integrate_log(g_full, std::max(lo, 2.0 * s), hi, o);
  return res.value / gamma_m;
}

double semyanistyi_radial(const RadialProfile& f, int n, double alpha, double t,
                          const QuadratureSpec& spec) {
  return k_semyanistyi_radial(f, n, n - 1, t, alpha, spec);
}

double transform_radial(const RadialProfile& f, const ExponentConfig& cfg,
                        double t_norm, const QuadratureSpec& spec) {
  if (kind_fractional(cfg.kind))
    return k_semyanistyi_radial(f, cfg.n, cfg.k, t_norm, cfg.alpha, spec);
  return kplane_radial(f, cfg.n, cfg.k, t_norm, spec);
}

ImageProfile transform_image_profile(const RadialProfile& f,
                                     const ExponentConfig& cfg,
                                     const QuadratureSpec& spec) {
  RadialProfile g;
  g.eval = [f, cfg, spec](double s) { return transform_radial(f, cfg, s, spec); };
  g.label = std::string(kind_fractional(cfg.kind) ? "R^a[" : "R[") + f.label + "]";
  g.a0 = 0.0;
  const bool compact = std::isfinite(f.support_max);
  if (kind_fractional(cfg.kind)) {
    const double via_tail = f.a_inf - cfg.k - cfg.alpha;
    const double via_head = cfg.codim() - cfg.alpha;
    g.a_inf = compact ? via_head : std::min(via_tail, via_head);
  } else {
    g.a_inf = f.a_inf - cfg.k;
    g.support_max = f.support_max;
  }
  // envelope constants by probing (safety factor 10); they only steer
  // truncation budgets
  double c0 = 0.0, ci = 0.0;
  for (double s : {0.125, 0.5}) c0 = std::max(c0, std::fabs(g.eval(s)));
  for (double s : {2.0, 8.0}) {
    if (s >= g.support_max) continue;
    ci = std::max(ci, std::fabs(g.eval(s)) * std::pow(s, g.a_inf));
  }
  g.c0 = std::max(10.0 * c0, 1e-300);
  g.c_inf = std::max(10.0 * ci, 1e-300);
  return ImageProfile(g);
}

McResult transform_general_mc(const std::function<double(const Eigen::VectorXd&)>& f,
                              const geometry::KPlaneCoords& coords, double alpha,
                              const QuadratureSpec& spec) {
  const int n = coords.n();
  const int m = coords.codim();
  const int k = n - m;
  if (n > 4) throw DomainError("transform_general_mc: n <= 4 required");
  if (coords.v.cols() != m || m < 1 || m > n - 1)
    throw DomainError("transform_general_mc: bad frame shape");
  if (alpha < 0.0) throw DomainError("transform_general_mc: alpha must be >= 0");

  const Eigen::MatrixXd W = geometry::orthogonal_complement(coords.v);
  geometry::Sampler rng(spec.seed);
  const double sc = spec.mc_scale;
  const long N = std::max<long>(spec.mc_samples, 1);
  const double gauss_norm = std::pow(2.0 * M_PI * sc * sc, -0.5 * k);

  double sum = 0.0, sum2 = 0.0;
  if (alpha == 0.0) {
    // plain transform: integral over the plane {v^T x = t}
    const Eigen::VectorXd base = coords.v * coords.t;
    for (long i = 0; i < N; ++i) {
      const Eigen::VectorXd a = rng.gaussian(k, sc);
      const double q = gauss_norm * std::exp(-0.5 * a.squaredNorm() / (sc * sc));
      const double w = f(base + W * a) / q;
      if (!std::isfinite(w))
        throw EvaluationError("transform_general_mc: non-finite sample");
      sum += w;
      sum2 += w * w;
    }
  } else {
    const double gamma_m = specfun::riesz_gamma(m, alpha);
    const double sigma_m1 = specfun::sphere_area(m - 1);
    const double gauss_norm_m = std::pow(2.0 * M_PI * sc * sc, -0.5 * m);
    for (long i = 0; i < N; ++i) {
      const Eigen::VectorXd a = rng.gaussian(k, sc);
      const double qa =
          gauss_norm * std::exp(-0.5 * a.squaredNorm() / (sc * sc));
      // b sampled from a half/half mixture: radial |.|^{alpha} law inside
      // radius sc around t (matches the kernel singularity), Gaussian tail
      Eigen::VectorXd b(m);
      if (rng.uniform01() < 0.5) {
        const double tau =
            sc * std::pow(std::max(rng.uniform01(), 1e-300), 1.0 / alpha);
        b = coords.t + tau * rng.sphere(m);
      } else {
        b = coords.t + rng.gaussian(m, sc);
      }
      const double tau = std::max((b - coords.t).norm(), 1e-300);
      double q_sing = 0.0;
      if (tau < sc)
        q_sing = alpha * std::pow(tau, alpha - 1.0) /
                 (std::pow(sc, alpha) * sigma_m1 * std::pow(tau, m - 1.0));
      const double q_gauss =
          gauss_norm_m * std::exp(-0.5 * tau * tau / (sc * sc));
      const double qb = 0.5 * (q_sing + q_gauss);
      const double x_weight = std::pow(tau, alpha - m) / gamma_m;
      const double w =
          f(coords.v * b + W * a) * x_weight / (qb * qa);
      if (!std::isfinite(w))
        throw EvaluationError("transform_general_mc: non-finite sample");
      sum += w;
      sum2 += w * w;
    }
  }
  McResult r;
  r.value = sum / N;
  const double var = std::max(sum2 / N - r.value * r.value, 0.0);
  r.stderr_est = std::sqrt(var / N);
  return r;
}

void mc_consistency_check(const RadialProfile& f, int n, int k, double t_norm,
                          double alpha, const QuadratureSpec& spec) {
  geometry::Sampler rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
  geometry::KPlaneCoords coords;
  coords.v = rng.stiefel(n, n - k);
  coords.t = t_norm * rng.sphere(n - k);
  auto fx = [&f](const Eigen::VectorXd& x) { return f(x.norm()); };
  const McResult mc = transform_general_mc(fx, coords, alpha, spec);
  const double det = alpha > 0.0
                         ? k_semyanistyi_radial(f, n, k, t_norm, alpha, spec)
                         : kplane_radial(f, n, k, t_norm, spec);
  const double sigma = std::sqrt(mc.stderr_est * mc.stderr_est +
                                 std::pow(spec.rel_tol * det, 2.0));
  if (std::fabs(mc.value - det) > 5.0 * sigma)
    throw EvaluationError(
        "mc_consistency_check: Monte Carlo and radial paths disagree beyond 5 "
        "sigma (mc " + std::to_string(mc.value) + ", radial " +
        std::to_string(det) + ")");
}

}  // namespace radonw::transforms
