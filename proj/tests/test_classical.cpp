#include "srkb/classical.hpp"
#include "srkb/delsarte.hpp"
#include "srkb/tables.hpp"

#include "doctest.h"
#include "support.hpp"

#include <random>

using namespace srkb;

TEST_CASE("first row of the sum-rank table") {
    SpaceParams sp(2, {3, 2}, {3, 2});
    auto b = classical_bounds(sp, 3);
    REQUIRE(b.size() == 8);
    CHECK(b[0].table_value() == 512);
    CHECK(b[1].table_value() == 910);
    CHECK_FALSE(b[2].applicable);
    CHECK(b[3].table_value() == 2222);
    CHECK(b[4].table_value() == 128);
    CHECK(b[5].table_value() == 138);
    CHECK(projective_sphere_packing_table(sp, 3).table_value() == 138);
    CHECK_FALSE(b[7].applicable);
    CHECK(b[7].table_value() == 0);
}

TEST_CASE("d = 1 gives the whole space") {
    for (const auto& sp : {SpaceParams(2, {1}, {1}), SpaceParams(3, {2, 1}, {3, 1}), hamming_space(6, 2)}) {
        for (const auto& b : classical_bounds(sp, 1)) {
            CAPTURE(method_label(b.method));
            // iP and TD keep their range conditions.
            if (b.applicable) CHECK(b.table_value() == sp.size());
        }
        CHECK(sphere_packing(sp, 1).table_value() == sp.size());
        CHECK(singleton(sp, 1).table_value() == sp.size());
        CHECK(projective_sphere_packing(sp, 1).table_value() == sp.size());
        CHECK(projective_sphere_packing_table(sp, 1).table_value() == sp.size());
    }
}

TEST_CASE("out-of-range distance throws") {
    SpaceParams sp(2, {2}, {2});
    CHECK_THROWS_AS(singleton(sp, 0), std::out_of_range);
    CHECK_THROWS_AS(sphere_packing(sp, 3), std::out_of_range);
}

TEST_CASE("bounds are non-increasing in d") {
    std::mt19937 rng(11);
    for (int q : {2, 3, 4}) {
        auto spaces = test::small_spaces(q, std::uint64_t(1) << 40, 6);
        std::shuffle(spaces.begin(), spaces.end(), rng);
        spaces.resize(std::min<size_t>(spaces.size(), 60));
        for (const auto& sp : spaces) {
            CAPTURE(sp.to_string());
            std::vector<BoundResult> prev;
            for (int d = 1; d <= sp.N(); ++d) {
                // The table form of PSP is not monotone in d, so only the theorem form is checked.
                auto cur = classical_bounds(sp, d);
                if (!prev.empty())
                    for (size_t k = 0; k < cur.size(); ++k)
                        if (prev[k].applicable && cur[k].applicable) {
                            CAPTURE(method_label(cur[k].method));
                            CAPTURE(d);
                            CHECK(*cur[k].value_exact <= *prev[k].value_exact);
                        }
                prev = cur;
            }
        }
    }
}

TEST_CASE("sphere packing is at least one") {
    for (int q : {2, 3})
        for (const auto& sp : test::small_spaces(q, std::uint64_t(1) << 30, 5))
            for (int d = 1; d <= sp.N(); ++d) CHECK(sphere_packing(sp, d).table_value() >= 1);
}

TEST_CASE("table form of projective sphere packing never undercuts the theorem form") {
    for (int q : {2, 3})
        for (const auto& sp : test::small_spaces(q, std::uint64_t(1) << 40, 5))
            for (int d = 3; d <= sp.N(); ++d) {
                auto a = projective_sphere_packing(sp, d), b = projective_sphere_packing_table(sp, d);
                // The table denominator can reach zero, leaving only the theorem form.
                if (!b.applicable) continue;
                REQUIRE(a.applicable);
                CHECK(*b.value_exact >= *a.value_exact);
            }
}

TEST_CASE("rank-metric Singleton equals the Delsarte optimum") {
    for (int q : {2, 3})
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= m; ++n)
                for (int d = 1; d <= n; ++d) {
                    SpaceParams sp = rank_space(q, n, m);
                    CHECK(singleton(sp, d).table_value() == ipow(q, unsigned(m * (n - d + 1))));
                    CHECK(BigRat(singleton(sp, d).table_value()) == delsarte_lp(sp, d));
                }
}

TEST_CASE("classical columns of the bundled table") {
    for (const auto& row : load_table3()) {
        CAPTURE(row.row);
        CHECK(induced_singleton(row.sp, row.d).table_value() == row.values.at(Method::InducedSingleton));
        CHECK(induced_hamming(row.sp, row.d).table_value() == row.values.at(Method::InducedHamming));
        CHECK(induced_plotkin(row.sp, row.d).table_value() == row.values.at(Method::InducedPlotkin));
        CHECK(induced_elias(row.sp, row.d).table_value() == row.values.at(Method::InducedElias));
        CHECK(singleton(row.sp, row.d).table_value() == row.values.at(Method::Singleton));
        CHECK(sphere_packing(row.sp, row.d).table_value() == row.values.at(Method::SpherePacking));
        CHECK(projective_sphere_packing_table(row.sp, row.d).table_value() ==
              row.values.at(Method::ProjectiveSpherePacking));
        CHECK(total_distance(row.sp, row.d).table_value() == row.values.at(Method::TotalDistance));
    }
}
