#include "radonw/geometry.hpp"

#include <cmath>

namespace radonw::geometry {

Eigen::VectorXd Sampler::gaussian(int n, double sigma) {
  std::normal_distribution<double> d(0.0, sigma);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = d(rng_);
  return x;
}

double Sampler::normal(double mean, double sigma) {
  std::normal_distribution<double> d(mean, sigma);
  return d(rng_);
}

double Sampler::uniform01() {
  std::uniform_real_distribution<double> d(0.0, 1.0);
  return d(rng_);
}

Eigen::VectorXd Sampler::sphere(int n) {
  if (n < 1) throw DomainError("sphere: n must be >= 1");
  Eigen::VectorXd x;
  double norm = 0.0;
  do {
    x = gaussian(n, 1.0);
    norm = x.norm();
  } while (norm < 1e-12);
  return x / norm;
}

Eigen::MatrixXd Sampler::stiefel(int n, int m) {
  if (m < 1 || m > n) throw DomainError("stiefel: need 1 <= m <= n");
  Eigen::MatrixXd g(n, m);
  for (int j = 0; j < m; ++j) g.col(j) = gaussian(n, 1.0);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, m);
  Eigen::MatrixXd r = qr.matrixQR().topRows(m).triangularView<Eigen::Upper>();
  // Positive-diagonal sign convention makes the factorization unique, so the
  // law is exactly the invariant one.
  for (int j = 0; j < m; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

RotationSample Sampler::rotations(int n, int k) {
  RotationSample s;
  s.seed = seed_;
  s.gamma = stiefel(n, n);
  s.omega = stiefel(n - k, n - k);
  return s;
}

std::vector<Eigen::VectorXd> sample_sphere(int n, int count, std::uint64_t seed) {
  Sampler s(seed);
  std::vector<Eigen::VectorXd> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(s.sphere(n));
  return out;
}

std::vector<Eigen::MatrixXd> sample_stiefel(int n, int m, int count,
                                            std::uint64_t seed) {
  Sampler s(seed);
  std::vector<Eigen::MatrixXd> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(s.stiefel(n, m));
  return out;
}

KPlaneCoords canonical_v0(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1)
    throw DomainError("canonical_v0: need n >= 2 and 1 <= k <= n-1");
  KPlaneCoords c;
  c.v = Eigen::MatrixXd::Identity(n, n).leftCols(n - k);
  c.t = Eigen::VectorXd::Zero(n - k);
  return c;
}

HyperplaneCoords symmetry_image(const HyperplaneCoords& c) {
  return {-c.theta, -c.t};
}

KPlaneCoords symmetry_image(const KPlaneCoords& c, const Eigen::MatrixXd& w) {
  const int m = c.codim();
  if (w.rows() != m || w.cols() != m)
    throw DomainError("symmetry_image: w must be (n-k) x (n-k)");
  const double defect =
      (w.transpose() * w - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
  if (defect > 1e-10)
    throw DomainError("symmetry_image: w is not orthogonal (defect " +
                      std::to_string(defect) + ")");
  return {c.v * w.transpose(), w * c.t};
}

Eigen::MatrixXd orthogonal_complement(const Eigen::MatrixXd& v) {
  const int n = static_cast<int>(v.rows());
  const int m = static_cast<int>(v.cols());
  if (m >= n) throw DomainError("orthogonal_complement: frame already spans");
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(v);
  Eigen::MatrixXd full = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  return full.rightCols(n - m);
}

}  // namespace radonw::geometry
