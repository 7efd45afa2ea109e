#include "radonw/constants.hpp"

#include <cmath>

#include "radonw/kernels.hpp"
#include "radonw/quadrature.hpp"
#include "radonw/specfun.hpp"

namespace radonw::constants {
namespace {

double lg(double x) { return specfun::log_gamma_signed(x).log_abs; }

// Gamma factor of Step 1 (transform of the pure power on the unit sphere of
// planes):
//   hyperplane: 2^{1/p} pi^{(n-1)/2} Gamma((lambda-k)/2)/Gamma(lambda/2)
//   k-plane:    (sigma_{n-k-1}/sigma_{n-1})^{1/p} pi^{k/2} * same quotient
double factor_c1(const ExponentConfig& cfg) {
  const double lam = cfg.lambda();
  double log_v = lg(0.5 * (lam - cfg.k)) - lg(0.5 * lam);
  if (kind_hyperplane(cfg.kind)) {
    log_v += cfg.inv_p() * std::log(2.0) +
             0.5 * (cfg.n - 1) * std::log(M_PI);
  } else {
    log_v += cfg.inv_p() * (std::log(specfun::sphere_area(cfg.codim() - 1)) -
                            std::log(specfun::sphere_area(cfg.n - 1))) +
             0.5 * cfg.k * std::log(M_PI);
  }
  return std::exp(log_v);
}

// Riesz-composition factor gamma_m(n-lambda)/gamma_m(n-lambda+alpha), written
// as the Gamma quotient that is manifestly finite on the window:
//   2^{-alpha} G((n-l)/2) G((l-k-a)/2) / [G((l-k)/2) G((n-l+a)/2)]
double factor_c2(const ExponentConfig& cfg) {
  if (!kind_fractional(cfg.kind)) return 1.0;
  const double lam = cfg.lambda();
  const double log_v = -cfg.alpha * std::log(2.0) +
                       lg(0.5 * (cfg.n - lam)) +
                       lg(0.5 * (lam - cfg.k - cfg.alpha)) -
                       lg(0.5 * (lam - cfg.k)) -
                       lg(0.5 * (cfg.n - lam + cfg.alpha));
  return std::exp(log_v);
}

ConstantReport make_report(const ExponentConfig& cfg) {
  ConstantReport r;
  r.kind = cfg.kind;
  r.lambda = cfg.lambda();
  r.factor_c1 = factor_c1(cfg);
  r.factor_c2 = factor_c2(cfg);
  r.value = r.factor_c1 * r.factor_c2;
  return r;
}

void require_kind(const ExponentConfig& cfg, Kind want, const char* who) {
  if (cfg.kind != want)
    throw DomainError(std::string(who) + ": config kind is " +
                      kind_name(cfg.kind));
}

}  // namespace

ConstantReport sharp_semyanistyi(const ExponentConfig& cfg) {
  require_kind(cfg, Kind::HyperplaneFractional, "sharp_semyanistyi");
  return make_report(cfg);
}

ConstantReport sharp_radon(const ExponentConfig& cfg) {
  require_kind(cfg, Kind::HyperplaneRadon, "sharp_radon");
  return make_report(cfg);
}

ConstantReport sharp_k_semyanistyi(const ExponentConfig& cfg) {
  require_kind(cfg, Kind::KPlaneFractional, "sharp_k_semyanistyi");
  return make_report(cfg);
}

ConstantReport sharp_k_plane(const ExponentConfig& cfg) {
  require_kind(cfg, Kind::KPlaneRadon, "sharp_k_plane");
  return make_report(cfg);
}

ConstantReport sharp_constant(const ExponentConfig& cfg) {
  return make_report(cfg);
}

namespace {

double measure_prefactor(const ExponentConfig& cfg) {
  if (kind_hyperplane(cfg.kind)) return std::pow(2.0, cfg.inv_p());
  return std::pow(specfun::sphere_area(cfg.codim() - 1) /
                      specfun::sphere_area(cfg.n - 1),
                  cfg.inv_p());
}

// alpha > 0: J = int_0^inf z^{lambda-k-alpha-1} M(z) dz, evaluated from the
// kernel quadrature (direct for codimension 1, tables otherwise), with the
// analytic large-z tail M ~ sigma_{n-1} z^{alpha-m} appended.
OracleResult fractional_oracle(const ExponentConfig& cfg,
                               const QuadratureSpec& spec) {
  const int n = cfg.n, k = cfg.k, m = cfg.codim();
  const double alpha = cfg.alpha, lam = cfg.lambda();
  const double beta0 = lam - k - alpha - 1.0;  // in (-1, ...) on the window
  const kernels::SphereKernel& ker = kernels::SphereKernel::cached(n, k, alpha);
  const bool use_direct = (m == 1);
  auto M = [&](double z) { return use_direct ? ker.direct(z) : ker(z); };
  const double psi = ker.psi();

  quad::Options o;
  o.rel_tol = spec.rel_tol;
  o.max_panels = spec.max_depth;

  quad::Result res;
  res += quad::integrate_power_endpoint([&](double z) { return M(z); }, 0.0,
                                        0.5, beta0, true, o);
  if (psi < 0.0) {
    auto reg = [&](double z) {
      return std::pow(z, beta0) *
             (use_direct ? ker.direct(z) * std::pow(std::fabs(1.0 - z), -psi)
                         : ker.regular(z));
    };
    res += quad::integrate_power_endpoint(reg, 0.5, 1.0, psi, false, o);
    res += quad::integrate_power_endpoint(reg, 1.0, 2.0, psi, true, o);
  } else {
    auto g = [&](double z) { return std::pow(z, beta0) * M(z); };
    res += quad::integrate(g, 0.5, 1.0, o);
    res += quad::integrate(g, 1.0, 2.0, o);
  }
  const double Z = 1e5;
  res += quad::integrate_log([&](double z) { return std::pow(z, beta0) * M(z); },
                             2.0, Z, o);
  const double tail =
      ker.asymptotic_coeff() * std::pow(Z, lam - n) / (n - lam);
  OracleResult out;
  out.value = measure_prefactor(cfg) *
              (res.value + tail) / specfun::riesz_gamma(m, alpha);
  out.error = measure_prefactor(cfg) *
              (res.error + tail * 2.0 / (Z * Z)) /
              std::fabs(specfun::riesz_gamma(m, alpha));
  if (!use_direct) out.error += 1e-8 * std::fabs(out.value);
  return out;
}

// alpha = 0: the plain transform of |x|^{-lambda} at unit offset,
// J0 = sigma_{k-1} int_0^inf u^{k-1} (1+u^2)^{-lambda/2} du.
OracleResult plain_oracle(const ExponentConfig& cfg,
                          const QuadratureSpec& spec) {
  const int k = cfg.k;
  const double lam = cfg.lambda();
  quad::Options o;
  o.rel_tol = spec.rel_tol;
  o.max_panels = spec.max_depth;
  auto g = [&](double u) {
    return std::pow(u, k - 1.0) * std::pow(1.0 + u * u, -0.5 * lam);
  };
  const double U = 1e6;
  quad::Result res = quad::integrate(g, 0.0, 1.0, o);
  res += quad::integrate_log(g, 1.0, U, o);
  const double tail = std::pow(U, k - lam) / (lam - k);
  OracleResult out;
  const double pref = measure_prefactor(cfg) * specfun::sphere_area(k - 1);
  out.value = pref * (res.value + tail);
  out.error = pref * (res.error + tail / (U * U));
  return out;
}

}  // namespace

OracleResult constant_oracle(const ExponentConfig& cfg,
                             const QuadratureSpec& spec) {
  return kind_fractional(cfg.kind) ? fractional_oracle(cfg, spec)
                                   : plain_oracle(cfg, spec);
}

ConstantReport sharp_constant_with_oracle(const ExponentConfig& cfg,
                                          const QuadratureSpec& spec) {
  ConstantReport r = sharp_constant(cfg);
  const OracleResult o = constant_oracle(cfg, spec);
  r.has_oracle = true;
  r.oracle_value = o.value;
  r.oracle_error = o.error;
  return r;
}

}  // namespace radonw::constants
