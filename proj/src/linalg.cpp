#include "srkb/linalg.hpp"

#include <lapacke.h>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace srkb {

namespace {

bool lapack_eigen(const Eigen::MatrixXd& a, Eigen::VectorXd& values, Eigen::MatrixXd* vectors) {
    const int n = int(a.rows());
    Eigen::MatrixXd work = a;
    values.resize(n);
    lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'L', n, work.data(), n, values.data());
    if (info != 0) return false;
    if (vectors) *vectors = std::move(work);
    return true;
}

bool self_test() {
    // Some optimized kernels misbehave only above a size threshold.
    const int n = 300;
    std::mt19937 gen(12345);
    std::uniform_real_distribution<double> dist(-1, 1);
    Eigen::MatrixXd a(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= j; ++i) a(i, j) = a(j, i) = dist(gen);
    Eigen::VectorXd w;
    Eigen::MatrixXd v;
    if (!lapack_eigen(a, w, &v)) return false;
    const double resid = (a * v - v * w.asDiagonal()).norm();
    const double orth = (v.transpose() * v - Eigen::MatrixXd::Identity(n, n)).norm();
    return resid <= 1e-9 * a.norm() && orth <= 1e-9;
}

}  // namespace

bool lapack_trusted() {
    static const bool ok = self_test();
    return ok;
}

void symmetric_eigen(const Eigen::MatrixXd& a, Eigen::VectorXd& values, Eigen::MatrixXd* vectors) {
    if (a.rows() != a.cols()) throw std::invalid_argument("symmetric_eigen: matrix not square");
    if (lapack_trusted() && lapack_eigen(a, values, vectors)) return;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("symmetric_eigen: solver did not converge");
    values = es.eigenvalues();
    if (vectors) *vectors = es.eigenvectors();
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& a) {
    Eigen::VectorXd w;
    symmetric_eigen(a, w, nullptr);
    return w;
}

}  // namespace srkb
