#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radonw/kernels.hpp"
#include "radonw/specfun.hpp"

using namespace radonw;
using kernels::SphereKernel;

TEST_CASE("exponents and cached instances") {
  const auto& ker = SphereKernel::cached(3, 1, 0.5);
  CHECK(ker.m() == 2);
  CHECK(ker.psi() == doctest::Approx(0.0));
  CHECK(&ker == &SphereKernel::cached(3, 1, 0.5));
  CHECK(SphereKernel(4, 2, 0.75).psi() == doctest::Approx(0.75));
  CHECK(SphereKernel(4, 1, 0.3).psi() == doctest::Approx(-0.2));
}

TEST_CASE("closed-form M(0) matches quadrature near zero") {
  for (const auto& [n, k, a] : {std::tuple{2, 1, 0.5}, {3, 1, 0.5}, {3, 2, 0.75},
                                {4, 2, 0.75}, {4, 1, 0.5}, {5, 2, 1.25}}) {
    const SphereKernel ker(n, k, a);
    const double m0 = ker.m0();
    CHECK(ker.direct(1e-7) == doctest::Approx(m0).epsilon(1e-5));
    CHECK(ker(1e-7) == doctest::Approx(m0).epsilon(1e-5));
  }
}

TEST_CASE("tables agree with direct quadrature") {
  for (const auto& [n, k, a] : {std::tuple{2, 1, 0.5}, {3, 1, 0.5}, {4, 2, 0.75},
                                {4, 1, 0.3}}) {
    const auto& ker = SphereKernel::cached(n, k, a);
    for (double z : {0.1, 0.5, 0.9, 0.99, 1.01, 1.5, 2.0, 5.0, 50.0})
      CHECK(ker(z) == doctest::Approx(ker.direct(z)).epsilon(5e-9));
  }
}

TEST_CASE("large-z asymptotics") {
  for (const auto& [n, k, a] : {std::tuple{3, 1, 0.5}, {4, 2, 0.75}}) {
    const auto& ker = SphereKernel::cached(n, k, a);
    const double z = 1e5;
    const double lead = ker.asymptotic_coeff() * std::pow(z, a - (n - k));
    CHECK(ker.asymptotic_coeff() == doctest::Approx(specfun::sphere_area(n - 1)));
    CHECK(ker(z) == doctest::Approx(lead).epsilon(1e-4));
  }
}

TEST_CASE("regularized kernel is finite up to the table edge") {
  // psi = -0.2 < 0: raw M blows up like |1-z|^psi, regular() divides it out.
  // The one-sided limits differ (the singular set for z < 1 is a sphere, for
  // z > 1 a point), so each side is checked against direct quadrature.
  const SphereKernel ker(4, 1, 0.3);
  for (double d : {1e-5, 1e-7}) {
    const double below = ker.regular(1.0 - d);
    const double above = ker.regular(1.0 + d);
    CHECK(std::isfinite(below));
    CHECK(below ==
          doctest::Approx(ker.direct(1.0 - d) * std::pow(d, 0.2)).epsilon(1e-8));
    CHECK(above ==
          doctest::Approx(ker.direct(1.0 + d) * std::pow(d, 0.2)).epsilon(1e-8));
  }
  CHECK(std::isfinite(ker.regular(1.0)));
  CHECK_THROWS_AS(ker.direct(1.0), DomainError);
}

TEST_CASE("independent high-precision fixtures") {
  // mpmath (20 dps), reduced integral with the projection density
  struct Fix {
    int n, k;
    double a, z, value;
  };
  const Fix fixtures[] = {
      {3, 1, 0.5, 0.3, 33.534959475704885893},
      {3, 1, 0.5, 2.0, 4.9374947679544501473},
      {4, 2, 0.75, 0.5, 49.330506899816726766},
      {4, 2, 0.75, 3.0, 5.1136857934419877507},
      {4, 1, 0.5, 0.5, 69.918726195384936228},
  };
  for (const auto& f : fixtures) {
    const auto& ker = SphereKernel::cached(f.n, f.k, f.a);
    CHECK(ker(f.z) == doctest::Approx(f.value).epsilon(1e-9));
    CHECK(ker.direct(f.z) == doctest::Approx(f.value).epsilon(1e-9));
  }
}
