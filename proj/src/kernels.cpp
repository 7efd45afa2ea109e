#include "radonw/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "radonw/quadrature.hpp"
#include "radonw/specfun.hpp"

namespace radonw::kernels {
namespace {

constexpr double kEdge = 1e-8;  // |1-z| below this is clamped onto the tables
const double kLogEdge = std::log(kEdge);

// sin(u/2)/u with its u=0 limit; u >= 0.
double sinc_half(double u) { return u < 1e-150 ? 0.5 : std::sin(0.5 * u) / u; }

// phi solving cos(phi) = c, from the stable half-angle form 1-c.
double acos_stable(double one_minus_c) {
  const double s = std::sqrt(std::clamp(0.5 * one_minus_c, 0.0, 1.0));
  return 2.0 * std::asin(s);
}

quad::Options inner_opts() {
  quad::Options o;
  o.rel_tol = 1e-11;
  o.max_panels = 600;
  return o;
}

quad::Options outer_opts() {
  quad::Options o;
  o.rel_tol = 1e-11;
  o.max_panels = 1500;
  return o;
}

}  // namespace

double ChebFit::operator()(double x) const {
  const double t = (2.0 * x - a - b) / (b - a);
  double d = 0.0, dd = 0.0;
  for (std::size_t j = coef.size() - 1; j >= 1; --j) {
    const double sv = d;
    d = 2.0 * t * d - dd + coef[j];
    dd = sv;
  }
  return t * d - dd + 0.5 * coef[0];
}

SphereKernel::SphereKernel(int n, int k, double alpha)
    : n_(n), k_(k), m_(n - k), alpha_(alpha), psi_(alpha + 0.5 * k - 1.0) {
  if (n < 2 || k < 1 || k > n - 1)
    throw DomainError("SphereKernel: need n >= 2 and 1 <= k <= n-1");
  if (!(alpha > 0.0)) throw DomainError("SphereKernel: alpha must be positive");
  specfun::check_riesz_alpha(m_, alpha);
}

double SphereKernel::m0() const {
  const double lb = specfun::log_gamma(0.5 * alpha_) +
                    specfun::log_gamma(0.5 * k_) -
                    specfun::log_gamma(0.5 * (alpha_ + k_));
  return 0.5 * specfun::sphere_area(k_ - 1) * specfun::sphere_area(m_ - 1) *
         std::exp(lb);
}

double SphereKernel::asymptotic_coeff() const {
  return specfun::sphere_area(n_ - 1);
}

// m = 1: M(z) = sigma_{n-2} int_0^pi sin^{n-2}(phi) |cos(phi) - z|^{alpha-1}.
// The interior singularity at phi* = acos(z) is absorbed by the power-endpoint
// substitution using cos(phi) - cos(phi*) = 2 sin((phi+phi*)/2) sin((phi*-phi)/2).
double SphereKernel::direct_codim1(double z) const {
  const double am1 = alpha_ - 1.0;
  const int sp = n_ - 2;
  quad::Result res;
  if (z < 1.0) {
    const double ps = acos_stable(1.0 - z);
    auto side = [&](double len, double sign) {
      // integrand over u = |phi - phi*| in (0, len): u^{alpha-1} * g(u)
      auto g = [&](double u) {
        const double phi = ps + sign * u;
        const double mid = std::sin(ps + sign * 0.5 * u);
        return std::pow(std::sin(phi), sp) *
               std::pow(2.0 * mid * sinc_half(u), am1);
      };
      return quad::integrate_power_endpoint(g, 0.0, len, am1, true, inner_opts());
    };
    res = side(ps, -1.0);
    res += side(M_PI - ps, +1.0);
  } else {
    const double d = z - 1.0;
    auto g = [&](double phi) {
      const double s = std::sin(0.5 * phi);
      return std::pow(std::sin(phi), sp) * std::pow(d + 2.0 * s * s, am1);
    };
    res = quad::integrate(g, 0.0, M_PI, outer_opts());
  }
  return specfun::sphere_area(sp) * res.value;
}

// m >= 2 angular factor: A(z,tau) = sigma_{m-2} * integral of
// sin^{m-2}(phi) (1-w^2)_+^{k/2-1} over the admissible phi, where
// w^2 = z^2 + tau^2 + 2 z tau cos(phi).  The caller supplies
// sum_m1 = z + tau - 1 computed without cancellation; along sum_m1 = 0 the
// factor has a genuine (integrable, log-type for k = 1) singularity in tau,
// so callers keep their tau nodes strictly away from it.
double SphereKernel::angular(double z, double tau, double sum_m1) const {
  const double ex = 0.5 * k_ - 1.0;
  const int sp = m_ - 2;
  quad::Result res;
  if (sum_m1 <= 0.0) {
    // whole sphere admissible; 1-w^2 = (1-(z+tau)^2) + 4 z tau sin^2(phi/2)
    const double base = -sum_m1 * (2.0 + sum_m1);
    auto g = [&](double phi) {
      const double s = std::sin(0.5 * phi);
      return std::pow(std::sin(phi), sp) *
             std::pow(base + 4.0 * z * tau * s * s, ex);
    };
    res = quad::integrate(g, 0.0, M_PI, inner_opts());
  } else {
    if (std::fabs(z - tau) >= 1.0) return 0.0;
    const double omc = sum_m1 * (2.0 + sum_m1) / (2.0 * z * tau);  // 1-cos(phi*)
    const double ps = acos_stable(omc);
    const double len = M_PI - ps;
    // u = phi - phi*; 1-w^2 = 4 z tau sin(phi* + u/2) sin(u/2)
    auto g = [&](double u) {
      const double mid = std::sin(ps + 0.5 * u);
      return std::pow(std::sin(ps + u), sp) *
             std::pow(4.0 * z * tau * mid * sinc_half(u), ex);
    };
    res = quad::integrate_power_endpoint(g, 0.0, len, ex, true, inner_opts());
  }
  return specfun::sphere_area(sp) * res.value;
}

// m >= 2: polar decomposition of the ball integral around z e_1,
// M(z) = sigma_{k-1} int_0^{1+z} tau^{alpha-1} A(z, tau) dtau.
// A is singular (log-type for k = 1) along tau = |1-z|, so the tau range is
// segmented with that point as an endpoint and approached in exact offset
// coordinates u = |tau - |1-z||, keeping z + tau - 1 cancellation-free.
double SphereKernel::direct_codim_ge2(double z) const {
  if (z == 0.0) return m0();
  const double hi = 1.0 + z;
  quad::Result res;
  if (z < 1.0) {
    const double D = 1.0 - z;  // the singular tau
    // [0, D/2]: tau^{alpha-1} endpoint, A smooth
    auto g1 = [&](double tau) { return angular(z, tau, tau - D); };
    res = quad::integrate_power_endpoint(g1, 0.0, 0.5 * D, alpha_ - 1.0, true,
                                         outer_opts());
    // (D/2, D): u = D - tau; log coordinates resolve the endpoint singularity,
    // the skipped sliver below u_min carries O(u_min log u_min) mass
    const double u_min = std::max(D * 1e-13, 1e-300);
    auto g2 = [&](double u) {
      return std::pow(D - u, alpha_ - 1.0) * angular(z, D - u, -u);
    };
    if (u_min < 0.5 * D)
      res += quad::integrate_log(g2, u_min, 0.5 * D, outer_opts());
    // (D, 1]: u = tau - D; log coordinates soak up tau^{alpha-1} as well when
    // D is near 0
    auto g3 = [&](double u) {
      return std::pow(D + u, alpha_ - 1.0) * angular(z, D + u, u);
    };
    if (u_min < z) res += quad::integrate_log(g3, u_min, z, outer_opts());
    // [1, 1+z]
    auto f = [&](double tau) {
      return std::pow(tau, alpha_ - 1.0) * angular(z, tau, z + (tau - 1.0));
    };
    res += quad::integrate(f, 1.0, hi, outer_opts());
  } else {
    // A vanishes outside (z-1, z+1); sum_m1 = (z-1) + tau has no cancellation
    const double d = z - 1.0;
    auto f = [&](double tau) {
      return std::pow(tau, alpha_ - 1.0) * angular(z, tau, d + tau);
    };
    const double split = std::max(1.0, d);
    if (d < split)
      res = quad::integrate_log(f, std::max(d, 1e-300), split, outer_opts());
    res += quad::integrate(f, split, hi, outer_opts());
  }
  return specfun::sphere_area(k_ - 1) * res.value;
}

double SphereKernel::direct(double z) const {
  if (!(z >= 0.0)) throw DomainError("SphereKernel::direct: z must be >= 0");
  if (z == 1.0 && psi_ <= 0.0)
    throw DomainError("SphereKernel::direct: z = 1 is singular");
  return m_ == 1 ? direct_codim1(z) : direct_codim_ge2(z);
}

double SphereKernel::regular_direct_near_one(double delta, bool below) const {
  const double z = below ? 1.0 - delta : 1.0 + delta;
  double v = direct(z);
  if (psi_ < 0.0) v *= std::pow(delta, -psi_);
  return v;
}

void SphereKernel::ensure_tables() const {
  std::call_once(built_, [this] {
    below_ = ChebFit::fit(
        [this](double w) { return regular_direct_near_one(std::exp(w), true); },
        kLogEdge, 0.0, 96);
    above_ = ChebFit::fit(
        [this](double w) { return regular_direct_near_one(std::exp(w), false); },
        kLogEdge, 0.0, 96);
    const double tail = m_ - alpha_;
    far_ = ChebFit::fit(
        [this, tail](double s) {
          return s <= 0.0 ? asymptotic_coeff()
                          : direct(1.0 / s) * std::pow(s, -tail);
        },
        0.0, 0.5, 48);
  });
}

double SphereKernel::regular(double z) const {
  if (!(z >= 0.0)) throw DomainError("SphereKernel::regular: z must be >= 0");
  ensure_tables();
  if (z > 2.0) {
    const double s = 1.0 / z;
    return far_(s) * std::pow(s, m_ - alpha_);
  }
  const double d = std::fabs(z - 1.0);
  const double w = std::max(std::log(std::max(d, 1e-300)), kLogEdge);
  return z <= 1.0 ? below_(w) : above_(w);
}

double SphereKernel::operator()(double z) const {
  double v = regular(z);
  if (psi_ < 0.0 && z <= 2.0) {
    const double d = std::max(std::fabs(z - 1.0), 1e-300);
    v *= std::pow(d, psi_);
  }
  return v;
}

const SphereKernel& SphereKernel::cached(int n, int k, double alpha) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, double>, std::unique_ptr<SphereKernel>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, k, alpha}];
  if (!slot) slot = std::make_unique<SphereKernel>(n, k, alpha);
  return *slot;
}

}  // namespace radonw::kernels
