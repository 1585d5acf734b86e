#include "srkb/space.hpp"

#include "doctest.h"
#include "support.hpp"

#include <random>
#include <set>

using namespace srkb;

namespace {

// Number of rank-j j x n matrices divided by |GL_j|, both by enumeration.
BigInt enumerated_subspaces(int n, int j, int q) {
    if (j > n - j) j = n - j;
    if (j == 0) return 1;
    GaloisField f(q);
    auto count_full_rank = [&](int rows, int cols) {
        long long total = 1, hits = 0;
        for (int k = 0; k < rows * cols; ++k) total *= q;
        std::vector<int> a(rows * cols);
        for (long long s = 0; s < total; ++s) {
            long long x = s;
            for (auto& e : a) {
                e = int(x % q);
                x /= q;
            }
            hits += matrix_rank(f, a, rows, cols) == rows;
        }
        return hits;
    };
    return BigInt(count_full_rank(j, n) / count_full_rank(j, j));
}

}  // namespace

TEST_CASE("space parameters validate and canonicalize") {
    CHECK_THROWS_AS(SpaceParams(6, {1}, {1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(SpaceParams(2, {3}, {2}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(SpaceParams(2, {1, 1}, {1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(SpaceParams(2, {}, {}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(SpaceParams(2, {1, 2}, {1, 2}).validate(), std::invalid_argument);
    CHECK_NOTHROW(SpaceParams(2, {1, 2}, {1, 2}).validate(false));
    SpaceParams c = SpaceParams(2, {1, 2, 2}, {1, 3, 2}).canonical();
    CHECK(c == SpaceParams(2, {2, 2, 1}, {3, 2, 1}));
    CHECK(c.is_ordered());
    SpaceParams sp(2, {3, 2}, {3, 2});
    CHECK(sp.N() == 5);
    CHECK(sp.log_size() == 13);
    CHECK(sp.size() == 8192);
}

TEST_CASE("gaussian binomials match subspace enumeration") {
    for (int q : {2, 3})
        for (int n = 0; n <= 4; ++n)
            for (int j = 0; j <= n; ++j) {
                CAPTURE(q);
                CAPTURE(n);
                CAPTURE(j);
                CHECK(gaussian_binomial(n, j, q) == enumerated_subspaces(n, j, q));
            }
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 5, 2) == 0);
}

TEST_CASE("rank counts partition the matrix space") {
    for (int q : {2, 3, 4})
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= m; ++n) {
                BigInt total = 0;
                for (int k = 0; k <= n; ++k) total += rank_count(n, m, k, q);
                CHECK(total == ipow(q, unsigned(n * m)));
            }
    CHECK(rank_count(2, 2, 1, 2) == 9);
    CHECK(rank_count(2, 2, 2, 2) == 6);
}

TEST_CASE("finite fields satisfy the field axioms") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 16}) {
        GaloisField f(q);
        CAPTURE(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                }
            }
        }
    }
    CHECK_THROWS_AS(GaloisField(6), std::invalid_argument);
}

TEST_CASE("sphere volumes match enumeration for |V| <= 4096") {
    int spaces = 0;
    for (int q : {2, 3, 4}) {
        for (const auto& sp : test::small_spaces(q, 4096)) {
            CAPTURE(sp.to_string());
            SumRankSpace space(sp);
            std::vector<BigInt> counts(sp.N() + 1, 0);
            for (std::uint64_t i = 0; i < space.size(); ++i) counts[space.weight(space.element(i))] += 1;
            CHECK(counts == sphere_volumes(sp));
            ++spaces;
        }
    }
    CHECK(spaces > 50);
}

TEST_CASE("ball volumes accumulate sphere volumes") {
    for (int q : {2, 3, 5})
        for (const auto& sp : test::small_spaces(q, std::uint64_t(1) << 40, 5)) {
            auto s = sphere_volumes(sp);
            BigInt acc = 0;
            for (int r = 0; r <= sp.N(); ++r) {
                acc += s[r];
                CHECK(ball_volume(sp, r) == acc);
            }
            CHECK(acc == sp.size());
        }
}

TEST_CASE("one-big-block V_1 closed form") {
    for (int q : {2, 3})
        for (int m = 1; m <= 5; ++m)
            for (int n = 1; n <= m; ++n)
                for (int t = 1; t <= 6; ++t)
                    CHECK(v1_one_big_block(q, m, n, t) == ball_volume(one_big_block_space(q, m, n, t), 1));
}

TEST_CASE("sum-rank distance is a metric") {
    std::mt19937 rng(7);
    for (const auto& sp : {SpaceParams(2, {3, 2}, {3, 2}), SpaceParams(3, {2, 1, 1}, {3, 2, 1}),
                           SpaceParams(4, {2, 2}, {2, 2})}) {
        SumRankSpace space(sp);
        std::uniform_int_distribution<std::uint64_t> pick(0, space.size() - 1);
        for (int trial = 0; trial < 300; ++trial) {
            auto x = space.element(pick(rng)), y = space.element(pick(rng)), z = space.element(pick(rng));
            const int dxy = srk_distance(space, x, y);
            CHECK(dxy == srk_distance(space, y, x));
            CHECK(dxy >= 0);
            CHECK((dxy == 0) == (x == y));
            CHECK(srk_distance(space, x, z) <= dxy + srk_distance(space, y, z));
            CHECK(space.index(x) < space.size());
            CHECK(space.element(space.index(x)) == x);
        }
    }
}

TEST_CASE("sum-rank element arithmetic") {
    SumRankSpace space(SpaceParams(3, {2, 1}, {2, 2}));
    auto x = space.element(634), y = space.element(77);
    CHECK(space.sub(space.add(x, y), y) == x);
    CHECK(space.weight(space.zero()) == 0);
    SumRankVector bad{{{1, 2, 0, 1}}};
    CHECK_FALSE(space.contains(bad));
    CHECK_THROWS(space.weight(bad));
}

TEST_CASE("one-big-block volume bound and residue mod p") {
    for (int q : {2, 3, 4})
        for (int m = 1; m <= 5; ++m)
            for (int n = 1; n <= m; ++n)
                for (int t = 2; t <= 6; ++t) {
                    SpaceParams sp = one_big_block_space(q, m, n, t);
                    const int p = prime_power(q).first;
                    for (int r = 0; r <= (sp.N() - 1) / 2; ++r) {
                        const BigInt v = ball_volume(sp, r);
                        CHECK(v <= volume_upper_bound_one_big_block(q, m, n, t, r));
                        // Only ranks 0 and 1 survive mod q: V_r = (-1)^r C(t-1, r).
                        BigInt rhs = binomial(unsigned(t - 1), unsigned(r));
                        if (r % 2) rhs = -rhs;
                        CHECK(mod(v, p) == mod(rhs, p));
                    }
                }
    CHECK(volume_upper_bound_one_big_block(2, 2, 2, 3, 1) == 128);
    CHECK(congruence_residue(2, 3, 1) == 0);
}
