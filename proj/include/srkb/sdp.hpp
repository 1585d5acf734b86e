#pragma once

#include "srkb/bound.hpp"
#include "srkb/graphs.hpp"
#include "srkb/space.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace srkb {

// Programs of the form
//   maximize  offset + sum_{u >= 1} X_uu
//   subject to X_00 = 1, X_0u = X_uu, X_uv = 0 on forbidden pairs,
//              X_uv >= 0 everywhere if nonnegative, X PSD.
// Index 0 is a distinguished element; forbidden pairs are symmetric and may
// include diagonal entries (which forces X_0u = X_uu = 0).
struct SdpProblem {
    int dim = 0;
    double offset = 0;
    bool nonnegative = false;
    // dim x dim, row-major; entries at index 0 are ignored.
    std::vector<char> forbidden;

    bool is_forbidden(int u, int v) const { return forbidden[std::size_t(u) * dim + v]; }
    // Throws std::invalid_argument if the pattern is not symmetric.
    void validate() const;
    double objective(const Eigen::MatrixXd& X) const;
    // Largest violation of the linear constraints, and of PSD (as -lambda_min).
    double linear_violation(const Eigen::MatrixXd& X) const;
    bool feasible(const Eigen::MatrixXd& X, double tol = 1e-9) const;
};

struct SdpOptions {
    int max_iterations = 50000;
    // Stop once the certified bound is within this relative distance of the primal value.
    double gap_tol = 1e-6;
    // Seconds; <= 0 means unlimited.
    double time_budget = 0;
    double rho = 1.0;
    int check_every = 100;
    bool verbose = false;
};

struct SdpSolution {
    // Objective of the last iterate projected onto the linear constraints.
    double primal_value = 0;
    // Upper bound certified from the dual iterate (see certify).
    double certified_upper_bound = 0;
    double gap = 0;
    double primal_residual = 0;
    double dual_residual = 0;
    // Size of the PSD repair applied to the dual matrix.
    double lambda_min_repair = 0;
    double eta = 0;
    int iterations = 0;
    bool converged = false;
    double seconds = 0;
    std::string certification;
    Eigen::MatrixXd X;
    Eigen::MatrixXd dual;

    // Floor of the certified bound: the published integer bound.
    long long published_bound() const;
};

// ADMM on the split X (linear constraints) = Y (PSD cone).
SdpSolution solve_sdp(const SdpProblem& p, const SdpOptions& opt = {});

// Rigorous upper bound from any symmetric matrix S: with delta = max(0,
// -lambda_min(S)) the matrix M = C + S + delta I bounds the objective by the
// structure of the linear constraints. Returns +inf if the certificate fails.
double certify(const SdpProblem& p, const Eigen::MatrixXd& S, double* eta = nullptr, double* repair = nullptr);

// Lovasz theta of g in the lifted form: index 0 is an extra unit vector,
// vertex v is index v + 1.
SdpProblem lovasz_theta_problem(const ExplicitGraph& g);
SdpSolution lovasz_theta(const ExplicitGraph& g, const SdpOptions& opt = {});

// Three-point program indexed by the space: X_uv = 0 whenever two distinct
// elements of {0, u, v} are at distance in (0, d).
SdpProblem schrijver_problem(const ExplicitGraph& gamma_d_minus_1);
SdpSolution schrijver_sdp(const SpaceParams& sp, int d, const SdpOptions& opt = {},
                          std::uint64_t cap = 1024);

// z z^T for the indicator z of a code containing 0.
Eigen::MatrixXd code_indicator_matrix(int dim, const std::vector<int>& code);
// Whether the indicator matrix is feasible for the three-point program, with
// objective |C|.
bool code_indicator_feasible(const ExplicitGraph& gamma_d_minus_1, const std::vector<int>& code);

struct DominanceReport {
    double sdp = 0;
    BigRat delsarte;
    std::optional<int> alpha;
    double tol = 1e-6;
    bool ok() const;
};
// alpha <= SDP <= DLP + tol.
DominanceReport sdp_dominance_check(const SpaceParams& sp, int d, const SdpOptions& opt = {},
                                    double alpha_budget = 60, std::uint64_t cap = 1024);

BoundResult theta_bound(const SpaceParams& sp, int d, const SdpOptions& opt = {}, std::uint64_t cap = 1024);
BoundResult sdp_bound(const SpaceParams& sp, int d, const SdpOptions& opt = {}, std::uint64_t cap = 1024);

}  // namespace srkb
