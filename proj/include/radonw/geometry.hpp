#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "radonw/errors.hpp"

namespace radonw::geometry {

/// Hyperplane {x : x . theta = t}; (theta, t) and (-theta, -t) are the same
/// plane.
struct HyperplaneCoords {
  Eigen::VectorXd theta;
  double t = 0.0;
};

/// k-plane {x : v^T x = t}, parametrized by its normal frame v (n x (n-k),
/// orthonormal columns) and the offset vector t in R^{n-k}.  (v, t) and
/// (v w^T, w t) name the same plane for every orthogonal w.
struct KPlaneCoords {
  Eigen::MatrixXd v;
  Eigen::VectorXd t;

  int n() const { return static_cast<int>(v.rows()); }
  int codim() const { return static_cast<int>(v.cols()); }
  double offset_norm() const { return t.norm(); }
};

struct RotationSample {
  Eigen::MatrixXd gamma;  // n x n orthogonal
  Eigen::MatrixXd omega;  // (n-k) x (n-k) orthogonal
  std::uint64_t seed = 0;
};

/// Stateful sampler; all randomness flows through one documented mt19937_64
/// stream (bitwise reproducibility promised within this implementation only).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  Eigen::VectorXd sphere(int n);          // uniform on S^{n-1}; n=1 gives +-1
  Eigen::MatrixXd stiefel(int n, int m);  // invariant measure on n x m frames
  RotationSample rotations(int n, int k);
  Eigen::VectorXd gaussian(int n, double sigma);
  double normal(double mean, double sigma);
  double uniform01();

  std::uint64_t seed() const { return seed_; }
  std::mt19937_64& rng() { return rng_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

std::vector<Eigen::VectorXd> sample_sphere(int n, int count, std::uint64_t seed);
std::vector<Eigen::MatrixXd> sample_stiefel(int n, int m, int count,
                                            std::uint64_t seed);

/// Canonical frame v_0 = [I_{n-k}; 0] with zero offset.
KPlaneCoords canonical_v0(int n, int k);

HyperplaneCoords symmetry_image(const HyperplaneCoords& c);

/// (v, t) -> (v w^T, w t); w must be (n-k) x (n-k) orthogonal to 1e-10.
KPlaneCoords symmetry_image(const KPlaneCoords& c, const Eigen::MatrixXd& w);

/// Orthonormal basis of the orthogonal complement of span(v): n x (n - cols).
Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd& v);

}  // namespace radonw::geometry
