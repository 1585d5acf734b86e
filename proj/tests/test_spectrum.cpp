#include "srkb/graphs.hpp"
#include "srkb/spectrum.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace srkb;

TEST_CASE("bilinear forms spectrum") {
    Spectrum s = bilinear_forms_spectrum(2, 2, 2);
    CHECK(s.eigenvalues == std::vector<BigInt>{9, 1, -3});
    CHECK(s.multiplicities == std::vector<BigInt>{1, 9, 6});
    CHECK(s.vertex_count == 16);
    CHECK_NOTHROW(s.check());
}

TEST_CASE("hamming spectrum") {
    Spectrum s = hamming_spectrum(3, 2);
    CHECK(s.eigenvalues == std::vector<BigInt>{3, 1, -1, -3});
    CHECK(s.multiplicities == std::vector<BigInt>{1, 3, 3, 1});
    CHECK(sum_rank_spectrum(hamming_space(5, 3)) == hamming_spectrum(5, 3));
}

TEST_CASE("product spectrum merges equal sums") {
    Spectrum h = hamming_spectrum(1, 2);
    Spectrum p = cartesian_product_spectrum({h, h});
    CHECK(p.eigenvalues == std::vector<BigInt>{2, 0, -2});
    CHECK(p.multiplicities == std::vector<BigInt>{1, 2, 1});
}

TEST_CASE("trace and second moment identities") {
    for (int q : {2, 3, 4, 5})
        for (const auto& sp : test::small_spaces(q, std::uint64_t(1) << 30, 5)) {
            Spectrum s = sum_rank_spectrum(sp);
            CAPTURE(sp.to_string());
            CHECK(s.moment(1) == 0);
            CHECK(s.moment(2) == s.vertex_count * s.valency());
            CHECK(s.moment(0) == sp.size());
            CHECK(s.valency() == sphere_volume(sp, 1));
        }
}

TEST_CASE("spectrum agrees with the explicit adjacency matrix") {
    int checked = 0;
    for (int q : {2, 3, 4})
        for (const auto& sp : test::small_spaces(q, 1024)) {
            if (sp.size() < 4) continue;
            // Keep the eigen-solves short: sample every space up to 256 vertices, a few larger ones.
            if (sp.size() > 256 && checked % 5) {
                ++checked;
                continue;
            }
            CAPTURE(sp.to_string());
            ExplicitGraph g(sp, 1);
            CHECK(adjacency_spectrum_check(g, sum_rank_spectrum(sp)));
            ++checked;
        }
    CHECK(checked > 40);
}

TEST_CASE("walk counts match spectral moments") {
    for (const auto& sp : {SpaceParams(2, {2, 2}, {2, 2}), SpaceParams(2, {2, 1, 1}, {3, 1, 1}),
                           SpaceParams(3, {1, 1, 1}, {2, 1, 1}), SpaceParams(4, {1, 1, 1}, {1, 1, 1}),
                           hamming_space(8, 2)}) {
        CAPTURE(sp.to_string());
        ExplicitGraph g(sp, 1);
        Spectrum s = sum_rank_spectrum(sp);
        const int n = g.size();
        // Closed walks from a few start vertices; walk-regularity makes them equal.
        for (int start : {0, 1, n / 2, n - 1}) {
            std::vector<long long> w(n, 0), next(n);
            w[start] = 1;
            for (unsigned k = 1; k <= 6; ++k) {
                std::fill(next.begin(), next.end(), 0);
                for (int u = 0; u < n; ++u)
                    if (w[u])
                        for (int v = 0; v < n; ++v)
                            if (g.edge(u, v)) next[v] += w[u];
                w.swap(next);
                CHECK(BigInt(w[start]) * s.vertex_count == s.moment(k));
            }
        }
    }
}
