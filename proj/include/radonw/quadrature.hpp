#pragma once

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "radonw/errors.hpp"
#include "radonw/simd.hpp"

namespace radonw::quad {

struct Options {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_panels = 4000;
  bool throw_on_failure = false;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
  long evals = 0;

  Result& operator+=(const Result& o) {
    value += o.value;
    error += o.error;
    converged = converged && o.converged;
    evals += o.evals;
    return *this;
  }
};

namespace detail {
// Gauss-Legendre nodes/weights on [-1, 1].
const std::array<double, 15>& gl15_nodes();
const std::array<double, 15>& gl15_weights();
const std::array<double, 31>& gl31_nodes();
const std::array<double, 31>& gl31_weights();

template <class F>
void panel_eval(F& f, double a, double b, double& coarse, double& fine) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double v15[15], v31[31];
  const auto& x15 = gl15_nodes();
  const auto& x31 = gl31_nodes();
  for (int i = 0; i < 15; ++i) v15[i] = f(mid + half * x15[i]);
  for (int i = 0; i < 31; ++i) v31[i] = f(mid + half * x31[i]);
  coarse = half * simd::dot(gl15_weights().data(), v15, 15);
  fine = half * simd::dot(gl31_weights().data(), v31, 31);
}
}  // namespace detail

/// Globally adaptive Gauss quadrature on a finite interval.  The integrand is
/// only evaluated at interior nodes, so endpoint-integrable singularities are
/// tolerated (with slow convergence; use the substitution helpers below when
/// the local exponent is known).
template <class F>
Result integrate(F&& f, double a, double b, const Options& opt = {}) {
  Result res;
  if (!(a < b)) return res;

  struct Panel {
    double a, b, val, err;
    bool operator<(const Panel& o) const { return err < o.err; }
  };
  auto make_panel = [&](double lo, double hi) {
    double coarse, fine;
    detail::panel_eval(f, lo, hi, coarse, fine);
    res.evals += 46;
    if (!std::isfinite(fine) || !std::isfinite(coarse))
      throw EvaluationError("integrate: non-finite integrand value");
    return Panel{lo, hi, fine, std::fabs(fine - coarse)};
  };

  std::priority_queue<Panel> heap;
  heap.push(make_panel(a, b));
  double total = heap.top().val, err_total = heap.top().err;
  int panels = 1;
  while (err_total > std::max(opt.abs_tol, opt.rel_tol * std::fabs(total)) &&
         panels < opt.max_panels) {
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval at rounding limit
      worst.err = 0.0;
      heap.push(worst);
      continue;
    }
    Panel left = make_panel(worst.a, mid);
    Panel right = make_panel(mid, worst.b);
    total += left.val + right.val - worst.val;
    err_total += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  res.value = total;
  res.error = err_total;
  res.converged = err_total <= std::max(opt.abs_tol, opt.rel_tol * std::fabs(total)) +
                                1e-300;
  if (!res.converged && opt.throw_on_failure)
    throw ConvergenceError("integrate: adaptive refinement did not converge", err_total);
  return res;
}

/// Integral of g(x) |x - c|^beta over [a, b], where c is the endpoint a
/// (singular_left) or b, beta > -1, and g is smooth.  The algebraic factor is
/// absorbed exactly by the substitution |x - c| = L w^{1/(1+beta)}.
template <class G>
Result integrate_power_endpoint(G&& g, double a, double b, double beta,
                                bool singular_left, const Options& opt = {}) {
  Result res;
  if (!(a < b)) return res;
  const double len = b - a;
  const double q = 1.0 / (1.0 + beta);
  const double scale = std::pow(len, 1.0 + beta) * q;
  auto h = [&](double w) {
    const double off = len * std::pow(w, q);
    const double x = singular_left ? a + off : b - off;
    return g(x);
  };
  res = integrate(h, 0.0, 1.0, opt);
  res.value *= scale;
  res.error *= std::fabs(scale);
  return res;
}

/// Integral of f over [r_lo, r_hi] evaluated in log coordinates.
template <class F>
Result integrate_log(F&& f, double r_lo, double r_hi, const Options& opt = {}) {
  if (!(r_lo > 0.0) || !(r_hi > r_lo)) return {};
  auto h = [&](double s) {
    const double r = std::exp(s);
    return f(r) * r;
  };
  return integrate(h, std::log(r_lo), std::log(r_hi), opt);
}

/// Radius beyond which C r^{power - decay} integrates to less than `budget`.
/// Requires decay - power > 1.
double tail_radius(double envelope_const, double decay, double power, double budget);

/// Radius below which C r^{power - growth_at_zero} integrates to less than
/// `budget`; requires power - growth_at_zero > -1.
double head_radius(double envelope_const, double growth_at_zero, double power,
                   double budget);

/// (1 - exp(-d)) / d, stable near d = 0.
inline double one_minus_exp_over(double d) {
  if (std::fabs(d) < 1e-8) return 1.0 - 0.5 * d;
  return -std::expm1(-d) / d;
}

}  // namespace radonw::quad
