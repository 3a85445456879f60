#include "freqrobust/dct.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace freqrobust {

namespace {

std::unique_ptr<DctBasis> build_basis(int d) {
  auto basis = std::make_unique<DctBasis>();
  basis->d = d;
  basis->matrix.resize(d, d);
  const double pi = 3.14159265358979323846;
  for (int k = 0; k < d; ++k) {
    const double alpha = (k == 0) ? 1.0 : 2.0;
    const double scale = std::sqrt(alpha / d);
    for (int j = 0; j < d; ++j) {
      basis->matrix(k, j) = scale * std::cos(pi / d * (j + 0.5) * k);
    }
  }
  return basis;
}

}  // namespace

const DctBasis& dct_matrix(int d) {
  if (d < 1) throw std::invalid_argument("dct_matrix: dimension must be >= 1");
  static std::mutex cache_mutex;
  static std::unordered_map<int, std::unique_ptr<DctBasis>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(d);
  if (it == cache.end()) {
    it = cache.emplace(d, build_basis(d)).first;
  }
  return *it->second;
}

Eigen::VectorXd dct_forward(const Eigen::VectorXd& x, const DctBasis& basis) {
  return basis.matrix * x;
}

Eigen::VectorXd dct_inverse(const Eigen::VectorXd& x_freq, const DctBasis& basis) {
  return basis.matrix.transpose() * x_freq;
}

Eigen::MatrixXd dct_forward2d(const Eigen::MatrixXd& x, const DctBasis& basis) {
  return basis.matrix * x * basis.matrix.transpose();
}

Eigen::MatrixXd dct_inverse2d(const Eigen::MatrixXd& x_freq, const DctBasis& basis) {
  return basis.matrix.transpose() * x_freq * basis.matrix;
}

double signal_energy(const Eigen::VectorXd& x) { return x.squaredNorm(); }

double signal_energy(const Eigen::MatrixXd& x) { return x.squaredNorm(); }

}  // namespace freqrobust
