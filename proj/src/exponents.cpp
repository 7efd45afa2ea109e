#include "radonw/exponents.hpp"

#include <cmath>
#include <sstream>

#include "radonw/specfun.hpp"

namespace radonw {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::HyperplaneFractional: return "hyperplane-fractional";
    case Kind::HyperplaneRadon: return "hyperplane-radon";
    case Kind::KPlaneFractional: return "kplane-fractional";
    case Kind::KPlaneRadon: return "kplane-radon";
  }
  return "?";
}

Kind parse_kind(const std::string& name) {
  if (name == "semyanistyi" || name == "hyperplane-fractional") return Kind::HyperplaneFractional;
  if (name == "radon" || name == "hyperplane-radon") return Kind::HyperplaneRadon;
  if (name == "ksemyanistyi" || name == "kplane-fractional") return Kind::KPlaneFractional;
  if (name == "kplane" || name == "kplane-radon") return Kind::KPlaneRadon;
  throw DomainError("unknown kind: " + name);
}

bool kind_fractional(Kind k) {
  return k == Kind::HyperplaneFractional || k == Kind::KPlaneFractional;
}

bool kind_hyperplane(Kind k) {
  return k == Kind::HyperplaneFractional || k == Kind::HyperplaneRadon;
}

namespace {

double conjugate_exponent(double p) {
  if (std::isinf(p)) return 1.0;
  if (p == 1.0) return kInfExponent;
  return p / (p - 1.0);
}

}  // namespace

std::pair<double, double> mu_window(int n, int k, double p, double alpha, Kind kind) {
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  const double n_over_pc = n * (1.0 - inv_p);
  if (kind_fractional(kind))
    return {alpha + k - n * inv_p, n_over_pc};
  return {k - n * inv_p, kInfExponent};
}

ExponentConfig validate(int n, int k, double p, double alpha, double mu, Kind kind) {
  if (n < 2) throw DomainError("validate: n must be >= 2");
  if (k < 1 || k > n - 1) throw DomainError("validate: k must satisfy 1 <= k <= n-1");
  if (!(p >= 1.0)) throw DomainError("validate: p must lie in [1, inf]");
  if (!std::isfinite(mu)) throw DomainError("validate: mu must be finite");
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw DomainError("validate: alpha must be finite and >= 0");
  if (kind_hyperplane(kind) && k != n - 1)
    throw DomainError("validate: hyperplane kinds require k = n-1");
  if (kind_fractional(kind) != (alpha > 0.0))
    throw DomainError(kind_fractional(kind)
                          ? "validate: fractional kinds require alpha > 0"
                          : "validate: alpha must be 0 for the plain transforms");
  if (alpha > 0.0) specfun::check_riesz_alpha(n - k, alpha);

  const auto [lo, hi] = mu_window(n, k, p, alpha, kind);
  if (!(mu > lo && mu < hi)) {
    std::ostringstream os;
    os << "mu = " << mu << " violates the open admissibility window (";
    os << lo << ", ";
    if (std::isinf(hi))
      os << "inf";
    else
      os << hi;
    os << ")";
    if (mu <= lo)
      os << ": mu must exceed " << lo;
    else
      os << ": mu must lie strictly below n/p' = " << hi;
    throw AdmissibilityError(os.str(), lo, hi);
  }

  ExponentConfig cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.p = p;
  cfg.p_conj = conjugate_exponent(p);
  cfg.alpha = alpha;
  cfg.mu = mu;
  cfg.kind = kind;
  // nu = mu - alpha - k/p' (alpha = 0 gives the plain-transform relation).
  cfg.nu = mu - alpha - k * (1.0 - cfg.inv_p());
  return cfg;
}

ExponentConfig validate(int n, int k, double p, double alpha, double mu) {
  Kind kind;
  if (k == n - 1)
    kind = alpha > 0.0 ? Kind::HyperplaneFractional : Kind::HyperplaneRadon;
  else
    kind = alpha > 0.0 ? Kind::KPlaneFractional : Kind::KPlaneRadon;
  return validate(n, k, p, alpha, mu, kind);
}

std::pair<double, double> scaling_exponents(const ExponentConfig& cfg) {
  const double source = -cfg.mu - cfg.n * cfg.inv_p();
  double image;
  if (kind_hyperplane(cfg.kind))
    image = -cfg.nu - cfg.n - cfg.alpha + cfg.inv_p_conj();
  else
    image = -cfg.nu - cfg.alpha - cfg.k * (1.0 - cfg.inv_p()) - cfg.n * cfg.inv_p();
  return {source, image};
}

}  // namespace radonw
