#include "srkb/classical.hpp"
#include "srkb/delsarte.hpp"
#include "srkb/graphs.hpp"
#include "srkb/ratio_type.hpp"
#include "srkb/tables.hpp"

#include "doctest.h"

#include <random>
#include <sstream>

using namespace srkb;

TEST_CASE("graph structure") {
    for (const auto& sp : {SpaceParams(2, {2, 2}, {2, 2}), SpaceParams(3, {1, 1}, {2, 1}), SpaceParams(4, {1}, {2})})
        for (int k = 1; k <= sp.N(); ++k) {
            ExplicitGraph g(sp, k);
            SumRankSpace space(sp);
            for (int u = 0; u < g.size(); ++u) {
                CHECK_FALSE(g.edge(u, u));
                for (int v = 0; v < g.size(); ++v) {
                    CHECK(g.edge(u, v) == g.edge(v, u));
                    CHECK(g.distance(u, v) == srk_distance(space, space.element(u), space.element(v)));
                }
            }
            BigInt ball = ball_volume(sp, k) - 1;
            CHECK(BigInt(g.degree(0)) == ball);
            CHECK(BigInt(g.degree(g.size() - 1)) == ball);
        }
}

TEST_CASE("translations are automorphisms") {
    std::mt19937 rng(5);
    for (const auto& sp : {SpaceParams(2, {2, 2}, {2, 2}), SpaceParams(3, {1, 1, 1}, {2, 1, 1}),
                           SpaceParams(4, {1, 1}, {2, 1})}) {
        ExplicitGraph g(sp, 2);
        std::uniform_int_distribution<int> pick(0, g.size() - 1);
        for (int trial = 0; trial < 1000; ++trial) {
            const int u = pick(rng), v = pick(rng), z = pick(rng);
            CHECK(g.edge(u, v) == g.edge(g.sum(u, z), g.sum(v, z)));
            CHECK(g.difference(g.sum(u, z), z) == u);
        }
    }
}

TEST_CASE("caps and bad powers are rejected") {
    CHECK_THROWS_AS(ExplicitGraph(SpaceParams(2, {3, 2}, {3, 2}), 1, 4096), std::length_error);
    CHECK_THROWS_AS(ExplicitGraph(SpaceParams(2, {2}, {2}), 3), std::out_of_range);
    CHECK_THROWS_AS(ExplicitGraph(SpaceParams(2, {2}, {2}), 0), std::out_of_range);
}

TEST_CASE("independence numbers of small graphs") {
    // H(7,2) at distance 3: the Hamming code.
    auto h = independence_number(build_graph(hamming_space(7, 2), 2), 60);
    CHECK(h.exact());
    CHECK(h.lower == 16);
    // H(3,2) at distance 2: the even-weight code.
    CHECK(independence_number(build_graph(hamming_space(3, 2), 1)).lower == 4);
    // Rank metric: MRD codes meet the Singleton value.
    for (int d = 2; d <= 2; ++d) {
        auto a = independence_number(build_graph(rank_space(2, 2, 2), d - 1));
        CHECK(a.lower == 4);
        CHECK(a.exact());
    }
    auto r = independence_number(build_graph(SpaceParams(2, {2, 2}, {2, 2}), 2), 60);
    CHECK(r.lower == 9);
    CHECK(r.exact());
}

TEST_CASE("witnesses are codes containing zero") {
    for (const auto& [sp, d] : std::vector<std::pair<SpaceParams, int>>{
             {SpaceParams(2, {2, 2}, {2, 2}), 3}, {hamming_space(6, 2), 3}, {SpaceParams(3, {1, 1, 1}, {2, 1, 1}), 3}}) {
        ExplicitGraph g = build_graph(sp, d - 1);
        auto a = independence_number(g, 60);
        CHECK(int(a.witness.size()) == a.lower);
        CHECK(a.witness.front() == 0);
        CHECK(is_code(g, a.witness, d));
        // alpha is below every other bound.
        CHECK(BigInt(a.upper) <= delsarte_bound(sp, d).table_value());
        CHECK(BigInt(a.upper) <= ratio_type_bound(sp, d).table_value());
        for (const auto& b : classical_bounds(sp, d))
            if (b.applicable) CHECK(BigInt(a.upper) <= b.table_value());
    }
}

TEST_CASE("budget exhaustion yields an interval") {
    auto a = independence_number(build_graph(SpaceParams(2, {2, 2, 2}, {2, 2, 2}), 2), 0.05);
    CHECK(a.lower <= a.upper);
    CHECK(a.lower >= 2);
}

TEST_CASE("DIMACS export") {
    ExplicitGraph g = build_graph(hamming_space(3, 2), 1);
    std::ostringstream out;
    write_dimacs(g, out);
    const std::string s = out.str();
    CHECK(s.find("p edge 8 12\n") != std::string::npos);
    CHECK(s.find("e 1 2\n") != std::string::npos);
    size_t edges = 0;
    for (size_t pos = 0; (pos = s.find("\ne ", pos)) != std::string::npos; ++pos) ++edges;
    CHECK(edges == 12);
}

TEST_CASE("published independence numbers up to 256 vertices") {
    for (const auto& row : load_table2()) {
        if (row.alpha.timed_out() || row.vertices > 256) continue;
        CAPTURE(row.row);
        auto a = independence_number(build_graph(row.sp, row.d - 1), 120);
        CHECK(a.exact());
        CHECK(BigInt(a.lower) == *row.alpha.value);
    }
}
