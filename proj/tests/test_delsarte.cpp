#include "srkb/delsarte.hpp"
#include "srkb/ratio_type.hpp"
#include "srkb/tables.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace srkb;

TEST_CASE("block eigenmatrix structure") {
    for (int q : {2, 3, 4})
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= std::min(m, 3); ++n) {
                CAPTURE(q);
                CAPTURE(m);
                CAPTURE(n);
                IntMatrix Q = block_eigenmatrix(q, n, m);
                Spectrum s = bilinear_forms_spectrum(q, n, m);
                REQUIRE(int(Q.size()) == n + 1);
                for (int u = 0; u <= n; ++u) {
                    CHECK(Q[u][0] == 1);
                    CHECK(Q[u][1] == s.eigenvalues[u]);
                }
                for (int v = 0; v <= n; ++v) CHECK(Q[0][v] == rank_count(n, m, v, q));
                // Column orthogonality under the eigenvalue multiplicities.
                for (int v = 0; v <= n; ++v)
                    for (int w = v + 1; w <= n; ++w) {
                        BigInt acc = 0;
                        for (int u = 0; u <= n; ++u) acc += s.multiplicities[u] * Q[u][v] * Q[u][w];
                        CHECK(acc == 0);
                    }
            }
}

TEST_CASE("scheme eigenmatrix row sums") {
    for (const auto& sp : {SpaceParams(2, {3, 2}, {3, 2}), SpaceParams(3, {2, 1, 1}, {2, 2, 1}), hamming_space(5, 2)}) {
        IntMatrix Q = scheme_eigenmatrix(sp);
        BigInt row0 = 0;
        for (const auto& x : Q[0]) row0 += x;
        CHECK(row0 == sp.size());
        CHECK(Q.size() == scheme_tuples(sp).size());
    }
    IntMatrix a{{1, 2}, {3, 4}}, b{{0, 1}, {1, 0}};
    IntMatrix k = kronecker(a, b);
    CHECK(k[0] == std::vector<BigInt>{0, 1, 0, 2});
    CHECK(k[3] == std::vector<BigInt>{3, 0, 4, 0});
}

TEST_CASE("rank-metric law for the Delsarte LP") {
    for (int q : {2, 3})
        for (int m = 1; m <= 5; ++m)
            for (int n = 1; n <= std::min(m, 4); ++n)
                for (int d = 1; d <= n; ++d) {
                    CAPTURE(q);
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(d);
                    CHECK(delsarte_lp(rank_space(q, n, m), d) == BigRat(ipow(q, unsigned(m * (n - d + 1)))));
                }
}

TEST_CASE("Hamming specialization matches Krawtchouk LP") {
    CHECK(krawtchouk(3, 2, 1, 0) == 3);
    CHECK(krawtchouk(3, 2, 1, 1) == 1);
    CHECK(krawtchouk(3, 2, 2, 1) == -1);
    for (int q : {2, 3})
        for (int t = 1; t <= 7; ++t)
            for (int d = 1; d <= t; ++d) {
                CAPTURE(q);
                CAPTURE(t);
                CAPTURE(d);
                CHECK(delsarte_lp(hamming_space(t, q), d) == hamming_delsarte_krawtchouk(t, q, d));
            }
}

TEST_CASE("block symmetrization preserves the optimum") {
    for (const auto& sp : {SpaceParams(2, {2, 2}, {2, 2}), SpaceParams(2, {2, 1, 1}, {2, 2, 1}),
                           SpaceParams(3, {1, 1, 1}, {2, 1, 1}), hamming_space(5, 2)})
        for (int d = 2; d <= sp.N(); ++d) {
            DelsarteOptions full;
            full.symmetrize = false;
            auto a = delsarte_lp_detail(sp, d), b = delsarte_lp_detail(sp, d, full);
            CHECK(a.value == b.value);
            CHECK(a.variables.size() <= b.variables.size());
        }
}

TEST_CASE("Delsarte LP dominates nothing it should not") {
    // DLP <= theta-LP <= RT on small spaces.
    for (int q : {2, 3})
        for (const auto& sp : test::small_spaces(q, std::uint64_t(1) << 18, 4))
            for (int d = 2; d <= sp.N(); ++d) {
                Spectrum s = sum_rank_spectrum(sp);
                if (d > s.r() + 1) continue;
                CAPTURE(sp.to_string());
                CAPTURE(d);
                const BigRat dlp = delsarte_lp(sp, d), theta = theta_scheme_lp(sp, d);
                CHECK(dlp <= theta);
                CHECK(theta <= ratio_type_lp(s, d));
            }
}

TEST_CASE("Hamming chain against the Singleton value") {
    for (int q : {2, 3})
        for (int t = 2; t <= 7; ++t)
            for (int d = 2; d <= t; ++d) {
                auto sp = hamming_space(t, q);
                const BigRat dlp = delsarte_lp(sp, d), theta = theta_scheme_lp(sp, d),
                             rt = ratio_type_lp(hamming_spectrum(t, q), d);
                CHECK(dlp <= theta);
                CHECK(theta <= rt);
                CHECK(rt <= BigRat(ipow(q, unsigned(t - d + 1))));
            }
}

TEST_CASE("certificates verify and detect tampering") {
    for (const auto& [sp, d] : std::vector<std::pair<SpaceParams, int>>{{SpaceParams(2, {3, 2}, {3, 2}), 3},
                                                                       {SpaceParams(2, {2, 2}, {2, 2}), 3},
                                                                       {hamming_space(7, 2), 3}}) {
        auto c = delsarte_certificate(sp, d);
        CHECK(check_delsarte_certificate(c));
        auto bad = c;
        bad.value += 1;
        CHECK_FALSE(check_delsarte_certificate(bad));
        auto bad_dual = c;
        if (!bad_dual.dual.empty()) {
            bad_dual.dual[0] += BigRat(1, 3);
            CHECK_FALSE(check_delsarte_certificate(bad_dual));
        }
    }
    CHECK(delsarte_certificate(SpaceParams(2, {3, 2}, {3, 2}), 3).value == BigRat(768, 7));
}

TEST_CASE("Delsarte columns of the bundled tables") {
    for (const auto& row : load_table3()) {
        CAPTURE(row.row);
        CHECK(delsarte_bound(row.sp, row.d).table_value() == row.values.at(Method::Delsarte));
    }
    for (const auto& row : load_table2()) {
        CAPTURE(row.row);
        CHECK(delsarte_bound(row.sp, row.d).table_value() == *row.dlp.value);
        if (!row.theta.timed_out()) CHECK(floor(theta_scheme_lp(row.sp, row.d)) == *row.theta.value);
    }
}
