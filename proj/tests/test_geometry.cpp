#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "radonw/geometry.hpp"

using namespace radonw;

TEST_CASE("sphere samples are unit vectors with vanishing mean") {
  geometry::Sampler s(1234);
  const int N = 4000;
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(3);
  for (int i = 0; i < N; ++i) {
    const auto v = s.sphere(3);
    CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
    mean += v;
  }
  mean /= N;
  // componentwise stderr is 1/sqrt(3N); allow 5 sigma
  CHECK(mean.norm() < 5.0 / std::sqrt(3.0 * N) * std::sqrt(3.0));
}

TEST_CASE("sphere second moments are isotropic") {
  geometry::Sampler s(99);
  const int N = 20000;
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (int i = 0; i < N; ++i) {
    const auto v = s.sphere(3);
    cov += v * v.transpose();
  }
  cov /= N;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(cov(i, j) == doctest::Approx(i == j ? 1.0 / 3.0 : 0.0).epsilon(0.05).scale(1.0));
}

TEST_CASE("stiefel frames are orthonormal") {
  geometry::Sampler s(7);
  for (int rep = 0; rep < 10; ++rep) {
    const auto v = s.stiefel(5, 2);
    CHECK((v.transpose() * v - Eigen::Matrix2d::Identity()).norm() < 1e-10);
  }
}

TEST_CASE("rotation samples are orthogonal") {
  geometry::Sampler s(31);
  const auto r = s.rotations(4, 2);
  CHECK((r.gamma.transpose() * r.gamma - Eigen::MatrixXd::Identity(4, 4)).norm() <
        1e-10);
  CHECK((r.omega.transpose() * r.omega - Eigen::MatrixXd::Identity(2, 2)).norm() <
        1e-10);
}

TEST_CASE("sampling is reproducible from the seed") {
  const auto a = geometry::sample_sphere(3, 5, 42);
  const auto b = geometry::sample_sphere(3, 5, 42);
  const auto c = geometry::sample_sphere(3, 5, 43);
  for (int i = 0; i < 5; ++i) CHECK((a[i] - b[i]).norm() == 0.0);
  CHECK((a[0] - c[0]).norm() > 0.0);
}

TEST_CASE("canonical frame") {
  const auto c = geometry::canonical_v0(5, 2);
  CHECK(c.n() == 5);
  CHECK(c.codim() == 3);
  CHECK((c.v.transpose() * c.v - Eigen::MatrixXd::Identity(3, 3)).norm() <
        1e-14);
  CHECK(c.t.norm() == 0.0);
  CHECK(c.v(0, 0) == 1.0);
  CHECK(c.v(4, 2) == 0.0);
}

TEST_CASE("hyperplane symmetry image flips both theta and t") {
  geometry::HyperplaneCoords h;
  h.theta = Eigen::Vector3d(0.0, 0.0, 1.0);
  h.t = 2.0;
  const auto g = geometry::symmetry_image(h);
  CHECK(g.t == doctest::Approx(-2.0));
  CHECK((g.theta + h.theta).norm() < 1e-14);
}

TEST_CASE("k-plane symmetry image preserves the offset norm") {
  geometry::Sampler s(5);
  auto c = geometry::canonical_v0(4, 2);
  c.t = Eigen::Vector2d(0.3, -0.4);
  const auto w = s.rotations(4, 2).omega;
  const auto g = geometry::symmetry_image(c, w);
  CHECK(g.offset_norm() == doctest::Approx(c.offset_norm()).epsilon(1e-12));
  CHECK((g.v.transpose() * g.v - Eigen::Matrix2d::Identity()).norm() < 1e-10);
  // non-orthogonal w is rejected
  Eigen::Matrix2d bad;
  bad << 1.0, 0.5, 0.0, 1.0;
  CHECK_THROWS_AS(geometry::symmetry_image(c, bad), DomainError);
}

TEST_CASE("orthogonal complement") {
  geometry::Sampler s(13);
  const auto v = s.stiefel(5, 2);
  const auto w = geometry::orthogonal_complement(v);
  CHECK(w.rows() == 5);
  CHECK(w.cols() == 3);
  CHECK((w.transpose() * w - Eigen::Matrix3d::Identity()).norm() < 1e-10);
  CHECK((v.transpose() * w).norm() < 1e-10);
}
