#pragma once

#include <Eigen/Dense>

namespace freqrobust {

// Orthonormal type-II DCT basis for dimension d. Row k, column j:
//   sqrt(alpha_k / d) * cos(pi/d * (j + 1/2) * k),  alpha_0 = 1, alpha_k = 2.
// Rows are the frequency atoms; the matrix is orthogonal, so the inverse
// transform is the transpose.
struct DctBasis {
  int d;
  Eigen::MatrixXd matrix;
};

// Returns a process-lifetime cached basis. Throws std::invalid_argument for d < 1.
const DctBasis& dct_matrix(int d);

// x_freq = C x  (analysis); x = C^T x_freq (synthesis).
Eigen::VectorXd dct_forward(const Eigen::VectorXd& x, const DctBasis& basis);
Eigen::VectorXd dct_inverse(const Eigen::VectorXd& x_freq, const DctBasis& basis);

// Separable 2-D transform on d x d images: X_freq = C X C^T, X = C^T X_freq C.
Eigen::MatrixXd dct_forward2d(const Eigen::MatrixXd& x, const DctBasis& basis);
Eigen::MatrixXd dct_inverse2d(const Eigen::MatrixXd& x_freq, const DctBasis& basis);

// Squared l2 mass; preserved exactly by the transforms above.
double signal_energy(const Eigen::VectorXd& x);
double signal_energy(const Eigen::MatrixXd& x);

}  // namespace freqrobust
