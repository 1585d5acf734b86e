#pragma once

#include <Eigen/Dense>

namespace srkb {

// Symmetric eigen-decomposition with ascending eigenvalues. Uses LAPACK dsyevd
// when a one-time residual self-test passes on this machine, otherwise Eigen.
void symmetric_eigen(const Eigen::MatrixXd& a, Eigen::VectorXd& values, Eigen::MatrixXd* vectors);
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& a);

// Result of the self-test (computed on first call).
bool lapack_trusted();

}  // namespace srkb
