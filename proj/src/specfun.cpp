#include "radonw/specfun.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace radonw::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficient set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

double lanczos_sum(double x) {
  // x >= 1; series evaluated at z = x - 1.
  double s = kLanczos[0];
  for (int i = 1; i < 15; ++i) s += kLanczos[i] / (x - 1.0 + i);
  return s;
}

double log_gamma_core(double x) {
  // Valid for x >= 1.
  const double base = x + kLanczosG - 0.5;
  return (x - 0.5) * std::log(base) - base + 0.5 * std::log(2.0 * kPi) +
         std::log(lanczos_sum(x));
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("log_gamma: argument must be positive and finite");
  if (x >= 1.0) return log_gamma_core(x);
  // Gamma(x) = Gamma(x+2) / (x (x+1)); keeps the Lanczos argument >= 1.
  return log_gamma_core(x + 2.0) - std::log(x) - std::log1p(x);
}

SignedLogGamma log_gamma_signed(double x, double margin) {
  if (!std::isfinite(x)) throw DomainError("log_gamma_signed: non-finite argument");
  if (x > 0.0) return {log_gamma(x), +1};
  const double r = std::round(x);
  if (std::fabs(x - r) < margin) {
    std::ostringstream os;
    os << "Gamma pole at non-positive integer " << static_cast<long long>(r)
       << " (argument " << x << ")";
    throw PoleError(os.str(), r);
  }
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
  // sin(pi x) computed against the nearest integer for accuracy at large |x|.
  const double frac = x - r;
  const double sin_pix = (static_cast<long long>(r) % 2 == 0 ? 1.0 : -1.0) *
                         std::sin(kPi * frac);
  const double log_abs = std::log(kPi) - std::log(std::fabs(sin_pix)) - log_gamma(1.0 - x);
  return {log_abs, sin_pix > 0.0 ? +1 : -1};
}

double gamma_extended(double x, double margin) {
  const SignedLogGamma g = log_gamma_signed(x, margin);
  return g.sign * std::exp(g.log_abs);
}

double sphere_area(int m) {
  if (m < 0) throw DomainError("sphere_area: dimension must be >= 0");
  return 2.0 * std::exp(0.5 * (m + 1) * std::log(kPi) - log_gamma(0.5 * (m + 1)));
}

void check_riesz_alpha(int d, double alpha, double margin) {
  if (d < 1) throw DomainError("riesz_gamma: dimension must be >= 1");
  if (!std::isfinite(alpha)) throw DomainError("riesz_gamma: non-finite alpha");
  // Poles of Gamma(alpha/2): alpha in {0, -2, -4, ...}.
  if (alpha < margin) {
    const double r = 2.0 * std::round(alpha / 2.0);
    if (r <= 0.0 && std::fabs(alpha - r) < margin) {
      std::ostringstream os;
      os << "riesz_gamma pole: alpha = " << alpha << " is in the excluded set {0,-2,-4,...}";
      throw PoleError(os.str(), r);
    }
  }
  // Zeros from Gamma((d-alpha)/2) poles: alpha in {d, d+2, d+4, ...}.
  if (alpha > d - margin) {
    const double r = d + 2.0 * std::round((alpha - d) / 2.0);
    if (r >= d - 0.5 && std::fabs(alpha - r) < margin) {
      std::ostringstream os;
      os << "riesz_gamma excluded: alpha = " << alpha << " is in the set {" << d << ","
         << d + 2 << ",...}";
      throw PoleError(os.str(), r);
    }
  }
}

double riesz_gamma(int d, double alpha, double margin) {
  check_riesz_alpha(d, alpha, margin);
  const SignedLogGamma num = log_gamma_signed(0.5 * alpha, 0.25 * margin);
  const SignedLogGamma den = log_gamma_signed(0.5 * (d - alpha), 0.25 * margin);
  const double log_val = alpha * std::log(2.0) + 0.5 * d * std::log(kPi) +
                         num.log_abs - den.log_abs;
  return num.sign * den.sign * std::exp(log_val);
}

}  // namespace radonw::specfun
