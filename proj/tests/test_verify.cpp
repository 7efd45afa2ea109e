#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radonw/constants.hpp"
#include "radonw/norms.hpp"
#include "radonw/specfun.hpp"
#include "radonw/verify.hpp"

using namespace radonw;
using namespace radonw::verify;

TEST_CASE("extremal profile has the exact closed-form norm") {
  const auto cfg = validate(2, 1, 2.0, 0.0, 1.0);
  for (double eps : {0.1, 1e-3, 1e-7}) {
    const auto f = extremal_profile(cfg, eps);
    const double expect =
        std::pow(specfun::sphere_area(1) / (eps * cfg.p), 1.0 / cfg.p);
    CHECK(norms::source_norm(f, cfg) == doctest::Approx(expect).epsilon(1e-8));
  }
}

TEST_CASE("default schedule is geometric") {
  const auto s = default_eps_schedule();
  REQUIRE(s.size() == 8);
  CHECK(s.front() == doctest::Approx(0.1));
  for (std::size_t i = 1; i < s.size(); ++i)
    CHECK(s[i] == doctest::Approx(0.5 * s[i - 1]));
}

TEST_CASE("pairing ratios stay below the constant and approach it") {
  const auto cfg = validate(2, 1, 2.0, 0.0, 1.0);
  const double target = constants::sharp_constant(cfg).value;
  QuadratureSpec spec;
  double prev = 0.0;
  for (double eps : {0.1, 0.05, 0.025}) {
    const double r = pairing_ratio(cfg, eps, spec);
    CHECK(r <= target * (1.0 + 1e-3));
    CHECK(r > prev);
    prev = r;
  }
  CHECK(prev > 0.9 * target);
}

TEST_CASE("sweep converges with shrinking gaps and sane extrapolation") {
  const auto cfg = validate(2, 1, 2.0, 0.0, 1.0);
  const auto res = sharpness_sweep(cfg, {0.1, 0.05, 0.025, 0.0125});
  REQUIRE(res.ratios.size() == 4);
  for (std::size_t i = 1; i < res.gaps.size(); ++i)
    CHECK(res.gaps[i] < res.gaps[i - 1]);
  CHECK(res.extrapolated == doctest::Approx(res.target).epsilon(1e-2));

  const auto csv = res.to_csv();
  CHECK(csv.rfind("eps,ratio,target,gap\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("p = inf conjugate profile needs an admissible delta") {
  const auto cfg = validate(3, 2, kInfExponent, 0.0, 2.5);
  const double dmin = min_conjugate_delta(cfg);
  const auto f = extremal_profile(cfg, 0.1);
  const auto phi = conjugate_profile(f, cfg, dmin + 1.0);
  CHECK(!phi.zero());
  // the default delta is also admissible
  CHECK(!conjugate_profile(f, cfg).zero());
}

TEST_CASE("rayleigh quotients respect the sharp bound") {
  const auto cfg = validate(2, 1, 2.0, 0.0, 1.0);
  const double c = constants::sharp_constant(cfg).value;
  const auto r = rayleigh_check(
      {gaussian_profile(), exp_profile(), ball_profile(), zero_profile()}, cfg);
  REQUIRE(r.size() == 4);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::isfinite(r[i]));
    CHECK(r[i] <= c * (1.0 + 1e-3));
    CHECK(r[i] > 0.0);
  }
  CHECK(std::isnan(r[3]));
}

TEST_CASE("alpha -> 0 limit of the fractional transform") {
  const auto res = limit_check_alpha0(gaussian_profile(), 2,
                                      {1e-1, 1e-2, 1e-3}, {0.0, 0.5, 1.0});
  REQUIRE(res.size() == 3);
  CHECK(res[1] < res[0]);
  CHECK(res[2] < res[1]);
  CHECK(res[2] <= 0.01);
}
