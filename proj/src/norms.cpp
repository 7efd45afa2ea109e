#include "radonw/norms.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "radonw/quadrature.hpp"
#include "radonw/specfun.hpp"

namespace radonw::norms {
namespace {

quad::Options opts_from(const QuadratureSpec& spec) {
  quad::Options o;
  o.rel_tol = spec.rel_tol;
  o.max_panels = spec.max_depth;
  return o;
}

// (int_0^inf r^{d + w p} |f_0(r)|^p dr)^{1/p} without the measure prefactor.
double lp_radial(const RadialProfile& f, double d, double w, double p,
                 const QuadratureSpec& spec) {
  if (f.zero()) return 0.0;
  double lo = f.support_min;
  if (lo <= 0.0)
    lo = quad::head_radius(std::pow(f.c0, p), p * (f.a0 - w), d,
                           spec.tail_budget);

  // With a log-space evaluator the integrand exp((d+1)u + p(wu + log f)) never
  // under/overflows, so slow power tails (decay rate of order epsilon, whose
  // truncation radii exceed double range) integrate as near-exact exponentials
  // in u = log r.
  if (f.log_eval && !std::isfinite(f.support_max)) {
    const double rate = p * (f.a_inf - w) - d - 1.0;
    if (!(rate > 0.0))
      throw IntegrabilityError("lp_radial: tail integrand r^" +
                               std::to_string(-rate - 1.0) +
                               " is not integrable at infinity");
    double u_hi = (p * std::log(std::max(f.c_inf, 1e-300)) -
                   std::log(rate * spec.tail_budget)) /
                  rate;
    if (spec.r_max > 0.0) u_hi = std::min(u_hi, std::log(spec.r_max));
    const double u_lo = std::log(lo);
    if (!(u_lo < u_hi)) return 0.0;
    auto g = [&](double u) {
      return std::exp((d + 1.0) * u + p * (w * u + f.log_eval(u)));
    };
    const double v = quad::integrate(g, u_lo, u_hi, opts_from(spec)).value;
    return std::pow(v, 1.0 / p);
  }

  double hi = f.support_max;
  if (!std::isfinite(hi))
    hi = quad::tail_radius(std::pow(f.c_inf, p), p * (f.a_inf - w), d,
                           spec.tail_budget);
  if (spec.r_max > 0.0) hi = std::min(hi, spec.r_max);
  if (!(lo < hi)) return 0.0;
  auto g = [&](double r) {
    return std::pow(r, d) * std::pow(std::pow(r, w) * std::fabs(f(r)), p);
  };
  const double v = quad::integrate_log(g, lo, hi, opts_from(spec)).value;
  return std::pow(v, 1.0 / p);
}

}  // namespace

double weighted_sup(const RadialProfile& f, double w,
                    const QuadratureSpec& spec) {
  if (f.zero()) return 0.0;
  const double lo = std::max(f.support_min, 1e-6);
  const double hi = std::min(f.support_max, 1e6);
  if (!(lo <= hi)) return 0.0;
  auto h = [&](double r) { return std::pow(r, w) * std::fabs(f(r)); };
  const int grid = 4000;
  const double llo = std::log(lo), lhi = std::log(hi);
  double best = 0.0, best_x = llo;
  for (int i = 0; i <= grid; ++i) {
    const double x = llo + (lhi - llo) * i / grid;
    const double v = h(std::exp(x));
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  // golden-section refinement inside the bracketing grid cell
  const double step = (lhi - llo) / grid;
  double a = std::max(llo, best_x - step), b = std::min(lhi, best_x + step);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = h(std::exp(x1)), f2 = h(std::exp(x2));
  for (int it = 0; it < 80 && (b - a) > 1e-14; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = h(std::exp(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = h(std::exp(x1));
    }
  }
  return std::max({best, f1, f2});
}

double source_norm(const RadialProfile& f, const ExponentConfig& cfg,
                   const QuadratureSpec& spec) {
  if (std::isinf(cfg.p)) return weighted_sup(f, cfg.mu, spec);
  const double v = lp_radial(f, cfg.n - 1.0, cfg.mu, cfg.p, spec);
  return std::pow(specfun::sphere_area(cfg.n - 1), cfg.inv_p()) * v;
}

namespace {

double image_front(const ExponentConfig& cfg) {
  if (kind_hyperplane(cfg.kind)) return 2.0 * specfun::sphere_area(cfg.n - 1);
  return specfun::sphere_area(cfg.codim() - 1);
}

}  // namespace

double image_norm(const ImageProfile& g, const ExponentConfig& cfg,
                  const QuadratureSpec& spec) {
  if (std::isinf(cfg.p)) return weighted_sup(g, cfg.nu, spec);
  const double v = lp_radial(g, cfg.codim() - 1.0, cfg.nu, cfg.p, spec);
  return std::pow(image_front(cfg), cfg.inv_p()) * v;
}

double image_dual_norm(const ImageProfile& phi, const ExponentConfig& cfg,
                       const QuadratureSpec& spec) {
  if (std::isinf(cfg.p_conj)) return weighted_sup(phi, -cfg.nu, spec);
  const double v = lp_radial(phi, cfg.codim() - 1.0, -cfg.nu, cfg.p_conj, spec);
  return std::pow(image_front(cfg), cfg.inv_p_conj()) * v;
}

double dual_pairing(const ImageProfile& g, const ImageProfile& phi,
                    const ExponentConfig& cfg, const QuadratureSpec& spec) {
  if (g.zero() || phi.zero()) return 0.0;
  const double d = cfg.codim() - 1.0;
  double lo = std::max(g.support_min, phi.support_min);
  if (lo <= 0.0)
    lo = quad::head_radius(g.c0 * phi.c0, g.a0 + phi.a0, d, spec.tail_budget);
  double hi = std::min(g.support_max, phi.support_max);
  if (!std::isfinite(hi))
    hi = quad::tail_radius(g.c_inf * phi.c_inf, g.a_inf + phi.a_inf, d,
                           spec.tail_budget);
  if (spec.r_max > 0.0) hi = std::min(hi, spec.r_max);
  if (!(lo < hi)) return 0.0;
  auto integrand = [&](double s) { return std::pow(s, d) * g(s) * phi(s); };
  const double v = quad::integrate_log(integrand, lo, hi, opts_from(spec)).value;
  return image_front(cfg) * v;
}

}  // namespace radonw::norms
