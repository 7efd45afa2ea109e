#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radonw/profiles.hpp"

using namespace radonw;

TEST_CASE("built-in profiles evaluate and carry sane envelopes") {
  const auto g = gaussian_profile();
  CHECK(g(0.0) == doctest::Approx(1.0));
  CHECK(g(1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(std::isfinite(g.support_max));

  const auto e = exp_profile();
  CHECK(e(2.0) == doctest::Approx(std::exp(-2.0)));

  const auto b = ball_profile();
  CHECK(b(0.5) == 1.0);
  CHECK(b(1.5) == 0.0);
  CHECK(b.support_max == doctest::Approx(1.0));

  const auto p = power_profile(2.0);
  CHECK(p(0.5) == 0.0);  // below the cutoff
  CHECK(p(2.0) == doctest::Approx(0.25));
  CHECK(p.support_min == doctest::Approx(1.0));
  CHECK(p.a_inf == doctest::Approx(2.0));

  CHECK(zero_profile().zero());
}

TEST_CASE("power profile log path") {
  const auto p = power_profile(3.5, 1.0);
  REQUIRE(static_cast<bool>(p.log_eval));
  // u = log r convention; must work far past double range in r
  CHECK(p.log_eval(2.0) == doctest::Approx(-7.0));
  CHECK(p.log_eval(5000.0) == doctest::Approx(-17500.0));
}

TEST_CASE("mini-language parsing") {
  CHECK(parse_profile("gauss")(1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(parse_profile("exp")(1.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(parse_profile("ball")(0.25) == 1.0);

  const auto p = parse_profile("power:1.5");
  CHECK(p(4.0) == doctest::Approx(0.125));
  const auto pc = parse_profile("power:2,0.5");
  CHECK(pc.support_min == doctest::Approx(0.5));
  CHECK(pc(0.75) == doctest::Approx(std::pow(0.75, -2.0)));

  CHECK_THROWS_AS(parse_profile("cauchy"), DomainError);
  CHECK_THROWS_AS(parse_profile("power:"), DomainError);
}

TEST_CASE("dilation rescales values, support, and envelopes exactly") {
  const auto f = power_profile(2.0, 1.0);
  const auto g = dilate(f, 3.0);
  CHECK(g(1.0) == doctest::Approx(f(3.0)));
  CHECK(g(2.0) == doctest::Approx(f(6.0)));
  CHECK(g.support_min == doctest::Approx(1.0 / 3.0));
  CHECK(g.a_inf == doctest::Approx(f.a_inf));
  REQUIRE(static_cast<bool>(g.log_eval));
  CHECK(g.log_eval(0.0) == doctest::Approx(f.log_eval(std::log(3.0))));
  CHECK(g.log_eval(100.0) == doctest::Approx(f.log_eval(100.0 + std::log(3.0))));

  const auto h = dilate(ball_profile(), 2.0);
  CHECK(h.support_max == doctest::Approx(0.5));
  CHECK(h(0.25) == 1.0);
  CHECK(h(0.75) == 0.0);
}
