#include "radonw/quadrature.hpp"

#include <cmath>

namespace radonw::quad {
namespace detail {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Newton iteration on the Legendre recurrence; accurate to machine precision.
template <int N>
void compute_gl(std::array<double, N>& nodes, std::array<double, N>& weights) {
  for (int i = 0; i < (N + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (N + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= N; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = N * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[N - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[N - 1 - i] = w;
  }
}

template <int N>
struct GlTable {
  std::array<double, N> nodes, weights;
  GlTable() { compute_gl<N>(nodes, weights); }
};

const GlTable<15>& t15() {
  static const GlTable<15> t;
  return t;
}
const GlTable<31>& t31() {
  static const GlTable<31> t;
  return t;
}

}  // namespace

const std::array<double, 15>& gl15_nodes() { return t15().nodes; }
const std::array<double, 15>& gl15_weights() { return t15().weights; }
const std::array<double, 31>& gl31_nodes() { return t31().nodes; }
const std::array<double, 31>& gl31_weights() { return t31().weights; }

}  // namespace detail

double tail_radius(double envelope_const, double decay, double power, double budget) {
  const double rate = decay - power - 1.0;
  if (!(rate > 0.0))
    throw IntegrabilityError("tail_radius: integrand tail r^" +
                             std::to_string(power - decay) + " is not integrable");
  const double c = std::max(envelope_const, 1e-300);
  double r = std::pow(c / (rate * budget), 1.0 / rate);
  return std::max(r, 1.0);
}

double head_radius(double envelope_const, double growth_at_zero, double power,
                   double budget) {
  const double rate = power - growth_at_zero + 1.0;
  if (!(rate > 0.0))
    throw IntegrabilityError("head_radius: integrand r^" +
                             std::to_string(power - growth_at_zero) +
                             " is not integrable at 0");
  const double c = std::max(envelope_const, 1e-300);
  double r = std::pow(budget * rate / c, 1.0 / rate);
  return std::min(r, 1.0);
}

}  // namespace radonw::quad
