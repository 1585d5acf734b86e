#include "srkb/exact_lp.hpp"

#include "doctest.h"

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <random>

using namespace srkb;

namespace {

struct Plane {
    Eigen::Vector3d a;
    double b;
    Relation rel;
};

// Optimum over a bounded polytope in R^3 by enumerating all vertices.
std::optional<double> vertex_oracle(const std::vector<Plane>& planes, const Eigen::Vector3d& c, bool maximize) {
    std::optional<double> best;
    const int k = int(planes.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l) {
                Eigen::Matrix3d m;
                m.row(0) = planes[i].a;
                m.row(1) = planes[j].a;
                m.row(2) = planes[l].a;
                if (std::abs(m.determinant()) < 1e-9) continue;
                Eigen::Vector3d x = m.fullPivLu().solve(Eigen::Vector3d(planes[i].b, planes[j].b, planes[l].b));
                bool ok = true;
                for (const auto& p : planes) {
                    const double v = p.a.dot(x) - p.b;
                    if ((p.rel == Relation::LessEqual && v > 1e-9) || (p.rel == Relation::GreaterEqual && v < -1e-9) ||
                        (p.rel == Relation::Equal && std::abs(v) > 1e-9))
                        ok = false;
                }
                if (!ok) continue;
                const double val = c.dot(x);
                if (!best || (maximize ? val > *best : val < *best)) best = val;
            }
    return best;
}

}  // namespace

TEST_CASE("small LP with known optimum") {
    // max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3
    LinearProgram lp(2);
    lp.objective = {3, 2};
    lp.add({1, 1}, Relation::LessEqual, 4);
    lp.add({1, 3}, Relation::LessEqual, 6);
    lp.upper[0] = BigRat(3);
    auto sol = solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value == 11);
    CHECK(sol.primal == std::vector<BigRat>{3, 1});
    CHECK(verify(lp, sol).ok());
    CHECK(dual_bound(lp, sol.dual) == BigRat(11));
}

TEST_CASE("fractional optimum stays exact") {
    LinearProgram lp(2, Sense::Minimize);
    lp.objective = {1, 1};
    lp.add({3, 1}, Relation::GreaterEqual, 1);
    lp.add({1, 3}, Relation::GreaterEqual, 1);
    auto sol = solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value == BigRat(1, 2));
    CHECK(verify(lp, sol).ok());
}

TEST_CASE("infeasible and unbounded programs") {
    LinearProgram inf(1);
    inf.objective = {1};
    inf.add({1}, Relation::LessEqual, -1);
    CHECK(solve(inf).status == LpStatus::Infeasible);

    LinearProgram unb(2);
    unb.objective = {1, 0};
    unb.add({1, -1}, Relation::LessEqual, 1);
    CHECK(solve(unb).status == LpStatus::Unbounded);

    LinearProgram free_var(1, Sense::Minimize);
    free_var.objective = {1};
    free_var.set_free(0);
    free_var.add({1}, Relation::GreaterEqual, -5);
    auto sol = solve(free_var);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value == -5);
}

TEST_CASE("ragged programs are rejected") {
    LinearProgram lp(2);
    lp.add({1}, Relation::LessEqual, 1);
    CHECK_THROWS_AS(lp.validate(), std::invalid_argument);
    CHECK_THROWS_AS(solve(lp), std::invalid_argument);
}

TEST_CASE("redundant equalities do not cycle") {
    // Degenerate: duplicated equality rows and a zero right-hand side.
    LinearProgram lp(4);
    lp.objective = {1, 1, 1, 1};
    for (int k = 0; k < 3; ++k) lp.add({1, 1, 0, 0}, Relation::Equal, 2);
    lp.add({0, 0, 1, -1}, Relation::Equal, 0);
    lp.add({0, 0, 2, -2}, Relation::Equal, 0);
    lp.add({1, 0, 1, 0}, Relation::LessEqual, 3);
    lp.add({0, 1, 0, 1}, Relation::LessEqual, 3);
    for (PivotRule rule : {PivotRule::Bland, PivotRule::Dantzig}) {
        auto sol = solve(lp, {rule, 50});
        REQUIRE(sol.status == LpStatus::Optimal);
        CHECK(sol.objective_value == 6);
        CHECK(verify(lp, sol).ok());
    }
}

TEST_CASE("random LPs agree with a vertex-enumeration oracle") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-3, 5), rhs(0, 12), rel(0, 5), sense(0, 1);
    int optimal = 0, infeasible = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const bool maximize = sense(rng);
        LinearProgram lp(3, maximize ? Sense::Maximize : Sense::Minimize);
        std::vector<Plane> planes;
        Eigen::Vector3d c;
        for (int j = 0; j < 3; ++j) {
            c(j) = coef(rng);
            lp.objective[j] = int(c(j));
            lp.upper[j] = BigRat(10);
            Eigen::Vector3d e = Eigen::Vector3d::Zero();
            e(j) = 1;
            planes.push_back({e, 0, Relation::GreaterEqual});
            planes.push_back({e, 10, Relation::LessEqual});
        }
        for (int i = 0; i < 5; ++i) {
            std::vector<BigRat> a(3);
            Eigen::Vector3d av;
            for (int j = 0; j < 3; ++j) {
                av(j) = coef(rng);
                a[j] = int(av(j));
            }
            const int r = rel(rng);
            const Relation relation = r == 0 ? Relation::Equal : r <= 2 ? Relation::GreaterEqual : Relation::LessEqual;
            const int b = relation == Relation::GreaterEqual ? rhs(rng) / 3 : rhs(rng);
            lp.add(a, relation, b);
            planes.push_back({av, double(b), relation});
        }
        auto oracle = vertex_oracle(planes, c, maximize);
        for (PivotRule rule : {PivotRule::Bland, PivotRule::Dantzig}) {
            auto sol = solve(lp, {rule, 50});
            CAPTURE(trial);
            if (!oracle) {
                CHECK(sol.status == LpStatus::Infeasible);
                continue;
            }
            REQUIRE(sol.status == LpStatus::Optimal);
            CHECK(std::abs(to_double(sol.objective_value) - *oracle) <= 1e-6 * std::max(1.0, std::abs(*oracle)));
            auto check = verify(lp, sol);
            CHECK(check.primal_feasible);
            CHECK(check.dual_feasible);
            CHECK(check.strong_duality);
            CHECK(check.complementary);
        }
        oracle ? ++optimal : ++infeasible;
    }
    CHECK(optimal > 30);
    CHECK(infeasible > 5);
}
