#include "srkb/delsarte.hpp"
#include "srkb/linalg.hpp"
#include "srkb/sdp.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace srkb;

TEST_CASE("symmetric eigensolver") {
    std::mt19937 rng(3);
    std::normal_distribution<double> g;
    for (int n : {1, 5, 40, 310}) {
        Eigen::MatrixXd a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = g(rng);
        Eigen::VectorXd w;
        Eigen::MatrixXd z;
        symmetric_eigen(a, w, &z);
        CHECK((a * z - z * w.asDiagonal()).norm() <= 1e-9 * (1 + a.norm()));
        CHECK((z.transpose() * z - Eigen::MatrixXd::Identity(n, n)).norm() <= 1e-9 * n);
        for (int i = 1; i < n; ++i) CHECK(w(i - 1) <= w(i));
        CHECK((symmetric_eigenvalues(a) - w).norm() <= 1e-9 * (1 + a.norm()));
    }
}

TEST_CASE("theta of small graphs") {
    // C4 = H(2,2).
    auto c4 = lovasz_theta(build_graph(hamming_space(2, 2), 1));
    CHECK(c4.converged);
    CHECK(c4.certified_upper_bound >= 2 - 1e-9);
    CHECK(c4.certified_upper_bound <= 2 + 1e-4);
    CHECK(c4.published_bound() == 2);
    // Empty graph power is impossible; the complete graph K4 = Bil(2,1,2) has theta 1.
    auto k4 = lovasz_theta(build_graph(rank_space(2, 1, 2), 1));
    CHECK(std::abs(k4.certified_upper_bound - 1) <= 1e-4);
}

TEST_CASE("theta SDP equals the scheme LP") {
    for (const auto& [sp, d] : std::vector<std::pair<SpaceParams, int>>{
             {SpaceParams(2, {2, 2}, {2, 2}), 3}, {hamming_space(5, 2), 3}, {SpaceParams(3, {1, 1}, {2, 1}), 2}}) {
        auto s = lovasz_theta(build_graph(sp, d - 1));
        const double lp = to_double(theta_scheme_lp(sp, d));
        CAPTURE(sp.to_string());
        CHECK(s.converged);
        CHECK(s.certified_upper_bound >= lp - 1e-7);
        CHECK(std::abs(s.certified_upper_bound - lp) <= 1e-4);
        CHECK(std::abs(s.primal_value - lp) <= 1e-4);
    }
    CHECK(theta_bound(SpaceParams(2, {2, 2}, {2, 2}), 3).table_value() == 10);
}

TEST_CASE("three-point SDP on (2,2)/(2,2)") {
    SpaceParams sp(2, {2, 2}, {2, 2});
    auto s = schrijver_sdp(sp, 3);
    CHECK(s.converged);
    CHECK(s.published_bound() == 9);
    CHECK(s.gap <= 1e-4);
    CHECK(s.certification == "dual repair");
    CHECK(sdp_bound(sp, 3).table_value() == 9);
    auto trivial = schrijver_sdp(sp, 1);
    CHECK(trivial.certified_upper_bound == 256);
    CHECK(trivial.certification == "trivial");
    CHECK_THROWS_AS(schrijver_sdp(SpaceParams(2, {3, 2}, {3, 2}), 3), std::length_error);
}

TEST_CASE("certificates are sound for arbitrary dual matrices") {
    // Any symmetric S gives an upper bound on every feasible point.
    ExplicitGraph g = build_graph(hamming_space(4, 2), 2);
    SdpProblem p = schrijver_problem(g);
    const std::vector<int> code{0, 7, 11, 13};  // weight-3 words: pairwise distance 2
    const std::vector<int> even{0, 15};
    std::mt19937 rng(9);
    std::normal_distribution<double> noise(0, 0.05);
    for (int trial = 0; trial < 30; ++trial) {
        Eigen::MatrixXd S(p.dim, p.dim);
        for (int i = 0; i < p.dim; ++i)
            for (int j = 0; j <= i; ++j) S(i, j) = S(j, i) = noise(rng);
        const double cert = certify(p, S);
        if (!std::isfinite(cert)) continue;
        CHECK(cert >= 2 - 1e-9);
    }
    CHECK(code_indicator_feasible(g, even));
    CHECK_FALSE(code_indicator_feasible(g, code));  // distance 2 < 3
    CHECK_FALSE(code_indicator_feasible(g, {15}));  // must contain 0
}

TEST_CASE("code indicator matrices are feasible with objective |C|") {
    for (const auto& [sp, d] : std::vector<std::pair<SpaceParams, int>>{
             {SpaceParams(2, {2, 2}, {2, 2}), 3}, {hamming_space(7, 2), 3}, {SpaceParams(3, {1, 1, 1}, {2, 1, 1}), 3}}) {
        ExplicitGraph g = build_graph(sp, d - 1);
        auto a = independence_number(g, 60);
        REQUIRE(is_code(g, a.witness, d));
        SdpProblem p = schrijver_problem(g);
        Eigen::MatrixXd X = code_indicator_matrix(p.dim, a.witness);
        CHECK(p.feasible(X));
        CHECK(p.objective(X) == doctest::Approx(a.witness.size()));
        CHECK(code_indicator_feasible(g, a.witness));
    }
}

TEST_CASE("sandwich alpha <= SDP <= DLP") {
    for (const auto& [sp, d] : std::vector<std::pair<SpaceParams, int>>{
             {SpaceParams(2, {2, 2}, {2, 2}), 3}, {hamming_space(6, 2), 3}, {SpaceParams(2, {2, 1}, {2, 2}), 2},
             {SpaceParams(2, {1}, {1}), 1}}) {
        auto r = sdp_dominance_check(sp, d);
        CAPTURE(sp.to_string());
        CHECK(r.ok());
        REQUIRE(r.alpha);
        CHECK(double(*r.alpha) <= r.sdp + 1e-6);
    }
}

TEST_CASE("time budget gives an interval, never a point claim") {
    SdpOptions opt;
    opt.time_budget = 1e-3;
    opt.check_every = 1000000;
    auto s = lovasz_theta(build_graph(hamming_space(7, 2), 2), opt);
    CHECK_FALSE(s.converged);
    CHECK(s.certification == "dual repair, interval");
}

TEST_CASE("problem validation") {
    SdpProblem p;
    p.dim = 3;
    p.forbidden.assign(9, 0);
    p.forbidden[1 * 3 + 2] = 1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.forbidden[2 * 3 + 1] = 1;
    CHECK_NOTHROW(p.validate());
}
