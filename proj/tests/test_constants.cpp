#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radonw/constants.hpp"
#include "radonw/specfun.hpp"

using namespace radonw;
using namespace radonw::constants;

TEST_CASE("frozen closed-form fixtures (mpmath, 30 dps)") {
  // c_alpha(n=2, p=2, alpha=0.5, mu=0.75)
  CHECK(sharp_semyanistyi(validate(2, 1, 2.0, 0.5, 0.75)).value ==
        doctest::Approx(38.949618144623433642656407651).epsilon(1e-13));
  // c(n=2, p=2, mu=1) = sqrt(2) pi
  CHECK(sharp_radon(validate(2, 1, 2.0, 0.0, 1.0)).value ==
        doctest::Approx(4.44288293815836624701588099006).epsilon(1e-13));
  // c(n=3, p=inf, mu=2.5) = 4 pi
  CHECK(sharp_radon(validate(3, 2, kInfExponent, 0.0, 2.5)).value ==
        doctest::Approx(4.0 * M_PI).epsilon(1e-13));
  // c_{alpha,k}(n=3, k=1, p=2, alpha=0.5, mu=1) = 2 sqrt(pi)
  CHECK(sharp_k_semyanistyi(validate(3, 1, 2.0, 0.5, 1.0)).value ==
        doctest::Approx(3.54490770181103205459633496668).epsilon(1e-13));
  // c_k(n=3, k=1, p=2, mu=1)
  CHECK(sharp_k_plane(validate(3, 1, 2.0, 0.0, 1.0)).value ==
        doctest::Approx(1.69442616958795817321299824696).epsilon(1e-13));
}

TEST_CASE("dispatch matches the kind-specific entry points") {
  const auto c1 = validate(2, 1, 2.0, 0.5, 0.75);
  CHECK(sharp_constant(c1).value == sharp_semyanistyi(c1).value);
  const auto c2 = validate(3, 1, 2.0, 0.0, 1.0);
  CHECK(sharp_constant(c2).value == sharp_k_plane(c2).value);
}

TEST_CASE("hyperplane and k = n-1 constants differ by the sphere factor") {
  // c_{alpha,n-1} sigma_{n-1}^{1/p} = c_alpha, exactly
  for (int n : {2, 3, 4, 5}) {
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
      const double alpha = 0.5;
      const auto w = mu_window(n, n - 1, p, alpha, Kind::HyperplaneFractional);
      if (!(w.first < w.second)) continue;
      const double mu = 0.5 * (w.first + w.second);
      const auto hp = sharp_semyanistyi(validate(n, n - 1, p, alpha, mu));
      const auto kp = sharp_k_semyanistyi(
          validate(n, n - 1, p, alpha, mu, Kind::KPlaneFractional));
      const double s =
          std::pow(specfun::sphere_area(n - 1), p >= 1e300 ? 0.0 : 1.0 / p);
      CHECK(kp.value * s == doctest::Approx(hp.value).epsilon(1e-12));
    }
  }
}

TEST_CASE("alpha -> 0 recovers the plain constants") {
  const auto frac = sharp_semyanistyi(validate(2, 1, 2.0, 1e-8, 0.75));
  const auto plain = sharp_radon(validate(2, 1, 2.0, 0.0, 0.75));
  CHECK(std::fabs(frac.value - plain.value) <= 1e-6 * plain.value);
  CHECK(plain.factor_c2 == doctest::Approx(1.0));
}

TEST_CASE("report decomposes as c1 * c2") {
  const auto r = sharp_k_semyanistyi(validate(3, 1, 2.0, 0.5, 1.0));
  CHECK(r.value == doctest::Approx(r.factor_c1 * r.factor_c2).epsilon(1e-14));
  CHECK(r.lambda == doctest::Approx(2.5));
}

TEST_CASE("oracle reproduces the closed forms") {
  // hyperplane kinds to 1e-6 relative
  for (const auto& cfg : {validate(2, 1, 2.0, 0.5, 0.75),
                          validate(2, 1, 2.0, 0.0, 1.0),
                          validate(3, 2, 1.5, 0.0, 1.2)}) {
    const auto r = sharp_constant_with_oracle(cfg);
    REQUIRE(r.has_oracle);
    CHECK(r.oracle_value == doctest::Approx(r.value).epsilon(1e-6));
  }
  // genuine k-plane geometry to 1e-4
  for (const auto& cfg :
       {validate(3, 1, 2.0, 0.5, 1.0), validate(3, 1, 2.0, 0.0, 1.0)}) {
    const auto r = sharp_constant_with_oracle(cfg);
    CHECK(r.oracle_value == doctest::Approx(r.value).epsilon(1e-4));
  }
}
