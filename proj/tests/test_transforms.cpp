#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radonw/transforms.hpp"

using namespace radonw;
using namespace radonw::transforms;

TEST_CASE("Gaussian is an eigenfunction of the plain transforms") {
  const auto g = gaussian_profile();
  for (int n : {2, 3, 4})
    for (double t : {0.0, 0.5, 1.0, 2.0})
      CHECK(radon_radial(g, n, t) ==
            doctest::Approx(std::pow(M_PI, 0.5 * (n - 1)) * std::exp(-t * t))
                .epsilon(1e-10));
  for (const auto& [n, k] : {std::pair{3, 1}, {3, 2}, {4, 2}, {5, 3}})
    for (double t : {0.0, 0.5, 1.5})
      CHECK(kplane_radial(g, n, k, t) ==
            doctest::Approx(std::pow(M_PI, 0.5 * k) * std::exp(-t * t))
                .epsilon(1e-10));
}

TEST_CASE("ball transforms in closed form") {
  const auto b = ball_profile();
  // Radon in R^3: area of the slice disk, pi (1 - t^2)
  CHECK(radon_radial(b, 3, 0.5) == doctest::Approx(M_PI * 0.75).epsilon(1e-10));
  // X-ray in R^3: chord length, 2 sqrt(1 - t^2)
  CHECK(kplane_radial(b, 3, 1, 0.6) == doctest::Approx(1.6).epsilon(1e-10));
  CHECK(kplane_radial(b, 3, 2, 2.0) == 0.0);
}

TEST_CASE("fractional transform of the Gaussian matches frozen fixtures") {
  // (R^alpha e^{-|x|^2})(theta, t), n = 2, alpha = 0.5; mpmath, 30 dps
  const auto g = gaussian_profile();
  CHECK(semyanistyi_radial(g, 2, 0.5, 0.0) ==
        doctest::Approx(2.5636933520408192886703364086).epsilon(1e-8));
  CHECK(semyanistyi_radial(g, 2, 0.5, 0.5) ==
        doctest::Approx(2.27424820118427558104892839872).epsilon(1e-8));
  CHECK(semyanistyi_radial(g, 2, 0.5, 1.0) ==
        doctest::Approx(1.68687003462128282943438900295).epsilon(1e-8));
}

TEST_CASE("dilation covariance R_k^alpha f(lambda .) = lambda^{-k-alpha} (R_k^alpha f)(lambda t)") {
  const auto g = gaussian_profile();
  for (const auto& [cfg, t] :
       {std::pair{validate(3, 1, 2.0, 0.5, 1.0), 0.7},
        {validate(3, 2, 2.0, 0.0, 0.6), 0.7},
        {validate(2, 1, 2.0, 0.0, 0.25), 1.3}}) {
    for (double lam : {0.5, 2.0, 10.0}) {
      const double lhs = transform_radial(dilate(g, lam), cfg, t);
      const double rhs = std::pow(lam, -cfg.k - cfg.alpha) *
                         transform_radial(g, cfg, lam * t);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    }
  }
}

TEST_CASE("image profile wraps the pointwise transform") {
  const auto f = exp_profile();
  const auto cfg = validate(3, 1, 2.0, 0.5, 1.0);
  const auto img = transform_image_profile(f, cfg);
  for (double s : {0.2, 1.0, 3.0})
    CHECK(img(s) == doctest::Approx(transform_radial(f, cfg, s)).epsilon(1e-9));
  CHECK(img.a_inf > 0.0);
}

TEST_CASE("Monte Carlo agrees with the radial fast path") {
  QuadratureSpec spec;
  spec.mc_samples = 60000;
  CHECK_NOTHROW(mc_consistency_check(gaussian_profile(), 2, 1, 0.5, 0.0, spec));
  CHECK_NOTHROW(mc_consistency_check(gaussian_profile(), 3, 1, 0.5, 0.5, spec));
  CHECK_NOTHROW(mc_consistency_check(exp_profile(), 3, 2, 1.0, 0.0, spec));
}

TEST_CASE("Monte Carlo is reproducible from the seed") {
  const auto coords = geometry::canonical_v0(2, 1);
  auto f = [](const Eigen::VectorXd& x) { return std::exp(-x.squaredNorm()); };
  QuadratureSpec spec;
  spec.mc_samples = 20000;
  const auto a = transform_general_mc(f, coords, 0.0, spec);
  const auto b = transform_general_mc(f, coords, 0.0, spec);
  CHECK(a.value == b.value);
  CHECK(a.stderr_est == b.stderr_est);
  CHECK(a.value == doctest::Approx(std::sqrt(M_PI)).epsilon(0.02));
}
