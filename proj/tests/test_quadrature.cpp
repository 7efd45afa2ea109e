#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radonw/quadrature.hpp"

using namespace radonw;

TEST_CASE("smooth integrals to tight tolerance") {
  auto r = quad::integrate([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(r.converged);

  r = quad::integrate([](double x) { return std::sin(x); }, 0.0, M_PI);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));

  // empty interval
  CHECK(quad::integrate([](double) { return 1.0; }, 1.0, 1.0).value == 0.0);
}

TEST_CASE("power endpoint substitution absorbs algebraic singularities") {
  // int_0^1 x^{-1/2} (1 + x) dx = 2 + 2/3
  auto r = quad::integrate_power_endpoint([](double x) { return 1.0 + x; },
                                          0.0, 1.0, -0.5, true);
  CHECK(r.value == doctest::Approx(2.0 + 2.0 / 3.0).epsilon(1e-12));

  // singular right endpoint: int_0^1 (1-x)^{-0.7} dx = 1/0.3
  auto l = quad::integrate_power_endpoint([](double) { return 1.0; }, 0.0, 1.0,
                                          -0.7, false);
  CHECK(l.value == doctest::Approx(1.0 / 0.3).epsilon(1e-12));

  // beta > 0 also exact: int_0^2 x^{1.5} dx
  auto p = quad::integrate_power_endpoint([](double) { return 1.0; }, 0.0, 2.0,
                                          1.5, true);
  CHECK(p.value == doctest::Approx(std::pow(2.0, 2.5) / 2.5).epsilon(1e-12));
}

TEST_CASE("log coordinates handle wide ranges") {
  auto r = quad::integrate_log([](double x) { return 1.0 / (x * x); }, 1.0, 1e6);
  CHECK(r.value == doctest::Approx(1.0 - 1e-6).epsilon(1e-12));
}

TEST_CASE("truncation radii") {
  // int_R^inf r^{1 - 4} dr = R^{-2} / 2 <= budget
  const double R = quad::tail_radius(1.0, 4.0, 1.0, 1e-8);
  CHECK(0.5 * std::pow(R, -2.0) == doctest::Approx(1e-8).epsilon(1e-6));
  CHECK_THROWS_AS(quad::tail_radius(1.0, 1.5, 1.0, 1e-8), IntegrabilityError);

  const double r0 = quad::head_radius(1.0, 0.5, 1.0, 1e-8);
  CHECK(r0 > 0.0);
  CHECK(r0 < 1.0);
  CHECK_THROWS_AS(quad::head_radius(1.0, 3.0, 1.0, 1e-8), IntegrabilityError);
}

TEST_CASE("non-finite integrand values are reported") {
  CHECK_THROWS_AS(
      quad::integrate([](double) { return std::nan(""); }, 0.0, 1.0),
      EvaluationError);
}

TEST_CASE("one_minus_exp_over is stable near zero") {
  CHECK(quad::one_minus_exp_over(0.0) == doctest::Approx(1.0));
  CHECK(quad::one_minus_exp_over(1e-12) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(quad::one_minus_exp_over(1.0) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-13));
}
