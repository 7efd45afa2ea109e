#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "radonw/simd.hpp"

using namespace radonw;

namespace {

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST_CASE("backend name is one of the two known strings") {
  const std::string b = simd::active_backend();
  CHECK((b == "avx2" || b == "scalar"));
}

TEST_CASE("dot matches scalar reference across sizes") {
  for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 15, 31, 64, 1000}) {
    const auto w = random_vec(n, 11 + n);
    const auto v = random_vec(n, 77 + n);
    const double ref = simd::dot_scalar(w.data(), v.data(), n);
    const double got = simd::dot(w.data(), v.data(), n);
    CHECK(got == doctest::Approx(ref).epsilon(1e-13));
  }
}

TEST_CASE("sum and max_abs match scalar reference") {
  for (std::size_t n : {1, 4, 13, 31, 257}) {
    const auto v = random_vec(n, 5 + n);
    CHECK(simd::sum(v.data(), n) ==
          doctest::Approx(simd::sum_scalar(v.data(), n)).epsilon(1e-13));
    CHECK(simd::max_abs(v.data(), n) == simd::max_abs_scalar(v.data(), n));
  }
}

TEST_CASE("known small cases") {
  const double w[3] = {1.0, 2.0, 3.0};
  const double v[3] = {4.0, -5.0, 6.0};
  CHECK(simd::dot(w, v, 3) == doctest::Approx(12.0));
  CHECK(simd::sum(v, 3) == doctest::Approx(5.0));
  CHECK(simd::max_abs(v, 3) == 6.0);
}
