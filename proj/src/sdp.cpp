#include "srkb/sdp.hpp"

#include "srkb/delsarte.hpp"
#include "srkb/linalg.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

namespace srkb {

void SdpProblem::validate() const {
    if (dim < 1) throw std::invalid_argument("SdpProblem: dimension must be positive");
    if (forbidden.size() != std::size_t(dim) * dim) throw std::invalid_argument("SdpProblem: pattern has wrong size");
    for (int u = 1; u < dim; ++u)
        for (int v = u + 1; v < dim; ++v)
            if (is_forbidden(u, v) != is_forbidden(v, u)) throw std::invalid_argument("SdpProblem: pattern not symmetric");
}

double SdpProblem::objective(const Eigen::MatrixXd& X) const {
    double s = offset;
    for (int u = 1; u < dim; ++u) s += X(u, u);
    return s;
}

double SdpProblem::linear_violation(const Eigen::MatrixXd& X) const {
    double worst = std::abs(X(0, 0) - 1);
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v) {
            const double x = X(u, v);
            worst = std::max(worst, std::abs(x - X(v, u)));
            if (nonnegative) worst = std::max(worst, -x);
            if (u >= 1 && v >= 1 && is_forbidden(u, v)) worst = std::max(worst, std::abs(x));
        }
    for (int u = 1; u < dim; ++u) worst = std::max(worst, std::abs(X(0, u) - X(u, u)));
    return worst;
}

namespace {

// Projection onto the PSD cone: keep the eigenpairs with positive eigenvalue.
void positive_part(const Eigen::MatrixXd& W, Eigen::MatrixXd& Y) {
    const int n = int(W.rows());
    Eigen::VectorXd w;
    Eigen::MatrixXd z;
    symmetric_eigen(W, w, &z);
    int first = 0;
    while (first < n && w(first) <= 0) ++first;
    const int found = n - first;
    Y.setZero(n, n);
    if (found == 0) return;
    Eigen::MatrixXd B = z.rightCols(found);
    for (int j = 0; j < found; ++j) B.col(j) *= std::sqrt(w(first + j));
    Y.selfadjointView<Eigen::Lower>().rankUpdate(B);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) Y(i, j) = Y(j, i);
}

double lambda_min(const Eigen::MatrixXd& S) { return symmetric_eigenvalues(S)(0); }

// Projection onto the linear constraints in the Frobenius norm.
void project_linear(const SdpProblem& p, const Eigen::MatrixXd& Z, Eigen::MatrixXd& X) {
    const int n = p.dim;
    X.resize(n, n);
    for (int v = 1; v < n; ++v)
        for (int u = 1; u < n; ++u) {
            if (u == v) continue;
            double z = 0.5 * (Z(u, v) + Z(v, u));
            if (p.is_forbidden(u, v)) z = 0;
            else if (p.nonnegative && z < 0) z = 0;
            X(u, v) = z;
        }
    for (int u = 1; u < n; ++u) {
        double y = (Z(0, u) + Z(u, 0) + Z(u, u)) / 3.0;
        if (p.is_forbidden(u, u) || (p.nonnegative && y < 0)) y = 0;
        X(0, u) = X(u, 0) = X(u, u) = y;
    }
    X(0, 0) = 1;
}

}  // namespace

double certify(const SdpProblem& p, const Eigen::MatrixXd& S_in, double* eta_out, double* repair_out) {
    const int n = p.dim;
    Eigen::MatrixXd S = 0.5 * (S_in + S_in.transpose());
    const double norm = S.norm();
    // Floating-point safety margin on top of the eigenvalue repair.
    const double delta = std::max(0.0, -lambda_min(S)) + 1e-12 * (1 + norm);
    Eigen::MatrixXd M = S;
    for (int u = 0; u < n; ++u) M(u, u) += delta + (u >= 1 ? 1.0 : 0.0);

    double eta = 0;
    for (int u = 1; u < n; ++u) {
        if (p.is_forbidden(u, u)) continue;
        double e = 2 * M(0, u) + M(u, u);
        for (int v = 1; v < n; ++v) {
            if (v == u || p.is_forbidden(u, v) || p.is_forbidden(v, v)) continue;
            const double m = M(u, v);
            e += p.nonnegative ? std::max(0.0, m) : std::abs(m);
        }
        eta = std::max(eta, e);
    }
    if (eta_out) *eta_out = eta;
    if (repair_out) *repair_out = delta;
    if (eta >= 1) return std::numeric_limits<double>::infinity();
    const double t = std::max(0.0, M(0, 0)) / (1 - eta);
    return (p.offset + t) * (1 + 1e-12) + 1e-12;
}

long long SdpSolution::published_bound() const {
    if (!std::isfinite(certified_upper_bound)) throw std::runtime_error("SDP: no certified bound");
    return static_cast<long long>(std::floor(certified_upper_bound));
}

SdpSolution solve_sdp(const SdpProblem& p, const SdpOptions& opt) {
    p.validate();
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    const int n = p.dim;
    double rho = opt.rho;
    Eigen::MatrixXd C = Eigen::MatrixXd::Identity(n, n);
    C(0, 0) = 0;
    Eigen::MatrixXd X(n, n), Y = Eigen::MatrixXd::Zero(n, n), U = Eigen::MatrixXd::Zero(n, n), Yprev;

    SdpSolution sol;
    sol.certified_upper_bound = std::numeric_limits<double>::infinity();
    sol.certification = "dual repair";
    for (int k = 1; k <= opt.max_iterations; ++k) {
        project_linear(p, Y - U + C / rho, X);
        Yprev = Y;
        positive_part(X + U, Y);
        U += X - Y;
        sol.iterations = k;
        sol.primal_residual = (X - Y).norm();
        sol.dual_residual = rho * (Y - Yprev).norm();

        const bool out_of_time =
            opt.time_budget > 0 && std::chrono::duration<double>(Clock::now() - start).count() > opt.time_budget;
        if (k % opt.check_every == 0 || k == opt.max_iterations || out_of_time) {
            double eta = 0, repair = 0;
            const double cert = certify(p, -rho * U, &eta, &repair);
            if (cert < sol.certified_upper_bound) {
                sol.certified_upper_bound = cert;
                sol.eta = eta;
                sol.lambda_min_repair = repair;
                sol.dual = -rho * U;
            }
            sol.primal_value = p.objective(X);
            sol.gap = std::abs(sol.certified_upper_bound - sol.primal_value);
            if (opt.verbose)
                std::cerr << "iter " << k << " primal " << sol.primal_value << " cert " << cert << " rp "
                          << sol.primal_residual << " rd " << sol.dual_residual << " rho " << rho << "\n";
            if (std::isfinite(sol.gap) && sol.gap <= opt.gap_tol * std::max(1.0, std::abs(sol.certified_upper_bound))) {
                sol.converged = true;
                break;
            }
            if (out_of_time) break;
        }
        if (k % 50 == 0) {
            if (sol.primal_residual > 10 * sol.dual_residual) {
                rho *= 2;
                U /= 2;
            } else if (sol.dual_residual > 10 * sol.primal_residual) {
                rho /= 2;
                U *= 2;
            }
        }
    }
    sol.primal_value = p.objective(X);
    sol.gap = std::abs(sol.certified_upper_bound - sol.primal_value);
    sol.X = std::move(X);
    sol.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (!sol.converged) sol.certification = "dual repair, interval";
    return sol;
}

SdpProblem lovasz_theta_problem(const ExplicitGraph& g) {
    SdpProblem p;
    p.dim = g.size() + 1;
    p.forbidden.assign(std::size_t(p.dim) * p.dim, 0);
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < g.size(); ++v)
            if (g.edge(u, v)) p.forbidden[std::size_t(u + 1) * p.dim + v + 1] = 1;
    return p;
}

SdpSolution lovasz_theta(const ExplicitGraph& g, const SdpOptions& opt) { return solve_sdp(lovasz_theta_problem(g), opt); }

SdpProblem schrijver_problem(const ExplicitGraph& g) {
    SdpProblem p;
    p.dim = g.size();
    p.offset = 1;
    p.nonnegative = true;
    p.forbidden.assign(std::size_t(p.dim) * p.dim, 0);
    for (int u = 1; u < p.dim; ++u)
        for (int v = 1; v < p.dim; ++v) {
            bool bad = g.edge(0, u) || g.edge(0, v) || (u != v && g.edge(u, v));
            p.forbidden[std::size_t(u) * p.dim + v] = bad;
        }
    return p;
}

SdpSolution schrijver_sdp(const SpaceParams& sp, int d, const SdpOptions& opt, std::uint64_t cap) {
    if (d < 1 || d > sp.N()) throw std::out_of_range("schrijver_sdp: d outside 1..N");
    if (sp.size() > BigInt(cap))
        throw std::length_error("schrijver_sdp: " + to_string(sp.size()) + " points exceed cap " + std::to_string(cap));
    if (d == 1) {
        // No vanishing conditions; the whole space is a code.
        SdpSolution sol;
        sol.primal_value = sol.certified_upper_bound = to_double(sp.size());
        sol.converged = true;
        sol.certification = "trivial";
        return sol;
    }
    return solve_sdp(schrijver_problem(build_graph(sp, d - 1, cap)), opt);
}

Eigen::MatrixXd code_indicator_matrix(int dim, const std::vector<int>& code) {
    Eigen::VectorXd z = Eigen::VectorXd::Zero(dim);
    for (int c : code) z(c) = 1;
    return z * z.transpose();
}

bool SdpProblem::feasible(const Eigen::MatrixXd& X, double tol) const {
    if (X.rows() != dim || X.cols() != dim) return false;
    return linear_violation(X) <= tol && lambda_min(0.5 * (X + X.transpose())) >= -tol;
}

bool code_indicator_feasible(const ExplicitGraph& g, const std::vector<int>& code) {
    bool has_zero = false;
    for (int c : code) has_zero |= c == 0;
    if (!has_zero) return false;
    SdpProblem p = schrijver_problem(g);
    Eigen::MatrixXd X = code_indicator_matrix(p.dim, code);
    return p.feasible(X) && std::abs(p.objective(X) - double(code.size())) < 1e-9;
}

bool DominanceReport::ok() const {
    if (sdp > to_double(delsarte) + tol) return false;
    if (alpha && double(*alpha) > sdp + tol) return false;
    return true;
}

DominanceReport sdp_dominance_check(const SpaceParams& sp, int d, const SdpOptions& opt, double alpha_budget,
                                    std::uint64_t cap) {
    DominanceReport r;
    // The comparison tolerance is absolute, so solve well below it.
    SdpOptions tight = opt;
    tight.gap_tol = std::min(opt.gap_tol, 1e-9);
    r.sdp = schrijver_sdp(sp, d, tight, cap).certified_upper_bound;
    r.delsarte = delsarte_lp(sp, d);
    if (d >= 2) {
        auto a = independence_number(build_graph(sp, d - 1, cap), alpha_budget);
        if (a.exact()) r.alpha = a.lower;
    } else {
        r.alpha = int(to_ll(sp.size()));
    }
    return r;
}

namespace {

BoundResult from_solution(Method m, const SdpSolution& s) {
    if (!std::isfinite(s.certified_upper_bound)) throw std::runtime_error(method_label(m) + ": no certified bound");
    std::string detail = "certified " + std::to_string(s.certified_upper_bound) + ", primal " +
                         std::to_string(s.primal_value) + ", gap " + std::to_string(s.gap) + ", " +
                         std::to_string(s.iterations) + " iterations, " + s.certification;
    return BoundResult::make(m, BigRat(s.certified_upper_bound), detail);
}

}  // namespace

BoundResult theta_bound(const SpaceParams& sp, int d, const SdpOptions& opt, std::uint64_t cap) {
    if (d < 1 || d > sp.N()) throw std::out_of_range("theta_bound: d outside 1..N");
    if (d == 1) return BoundResult::make(Method::LovaszTheta, BigRat(sp.size()), "trivial");
    if (sp.size() > BigInt(cap))
        throw std::length_error("theta_bound: " + to_string(sp.size()) + " vertices exceed cap " + std::to_string(cap));
    return from_solution(Method::LovaszTheta, lovasz_theta(build_graph(sp, d - 1, cap), opt));
}

BoundResult sdp_bound(const SpaceParams& sp, int d, const SdpOptions& opt, std::uint64_t cap) {
    return from_solution(Method::SchrijverSDP, schrijver_sdp(sp, d, opt, cap));
}

}  // namespace srkb
