#include "srkb/classical.hpp"

#include <stdexcept>
#include <string>

namespace srkb {

namespace {

void check_d(const SpaceParams& sp, int d, const char* what) {
    if (d < 1 || d > sp.N())
        throw std::out_of_range(std::string(what) + ": d = " + std::to_string(d) + " outside 1.." +
                                std::to_string(sp.N()));
}

BoundResult clamped(Method m, const SpaceParams& sp, const BigRat& raw, std::string detail) {
    BigInt V = sp.size();
    if (raw > V) {
        if (!detail.empty()) detail += "; ";
        detail += "raw " + to_string(floor(raw)) + " clamped to |V|";
        return BoundResult::make(m, BigRat(V), detail);
    }
    return BoundResult::make(m, raw, detail);
}

// Hamming ball volume in F_Q^N.
BigInt hamming_ball(int N, const BigInt& Q, int w) {
    BigInt v = 0;
    for (int i = 0; i <= w && i <= N; ++i) v += binomial(unsigned(N), unsigned(i)) * boost::multiprecision::pow(Q - 1, unsigned(i));
    return v;
}

BigInt singleton_value(const SpaceParams& sp, int d) {
    int rem = d - 1, j = 0;
    while (rem >= sp.n[j]) {
        rem -= sp.n[j];
        ++j;
    }
    int e = -sp.m[j] * rem;
    for (int i = j; i < sp.t(); ++i) e += sp.m[i] * sp.n[i];
    return ipow(sp.q, unsigned(e));
}

// d - 3 = n_1 + ... + n_l + delta' with 0 <= delta' < n_{l+1}.
std::pair<int, int> psp_split(const SpaceParams& sp, int d) {
    int rem = d - 3, l = 0;
    while (rem >= sp.n[l]) {
        rem -= sp.n[l];
        ++l;
    }
    return {l, rem};
}

}  // namespace

BoundResult induced_singleton(const SpaceParams& sp, int d) {
    check_d(sp, d, "induced_singleton");
    int M = sp.max_m();
    return clamped(Method::InducedSingleton, sp, BigRat(ipow(sp.q, unsigned(M * (sp.N() - d + 1)))), {});
}

BoundResult induced_hamming(const SpaceParams& sp, int d) {
    check_d(sp, d, "induced_hamming");
    int M = sp.max_m(), N = sp.N();
    BigInt Q = ipow(sp.q, unsigned(M));
    BigRat v(ipow(Q, unsigned(N)), hamming_ball(N, Q, (d - 1) / 2));
    return clamped(Method::InducedHamming, sp, v, {});
}

BoundResult induced_plotkin(const SpaceParams& sp, int d) {
    check_d(sp, d, "induced_plotkin");
    int N = sp.N();
    BigInt Q = ipow(sp.q, unsigned(sp.max_m()));
    BigInt den = Q * d - (Q - 1) * N;
    if (den <= 0) return BoundResult::not_applicable(Method::InducedPlotkin, "needs d > (q^m - 1) N / q^m");
    return clamped(Method::InducedPlotkin, sp, BigRat(Q * d, den), {});
}

BoundResult induced_elias(const SpaceParams& sp, int d) {
    check_d(sp, d, "induced_elias");
    int N = sp.N();
    BigInt Q = ipow(sp.q, unsigned(sp.max_m()));
    BigInt QN = ipow(Q, unsigned(N));
    std::optional<BigRat> best;
    int best_w = -1;
    for (int w = 0; w <= N; ++w) {
        // w < N (Q - 1) / Q
        if (!(Q * w < (Q - 1) * N)) continue;
        BigInt den = Q * w * w - 2 * BigInt(N) * w * (Q - 1) + (Q - 1) * N * d;
        if (den <= 0) continue;
        BigRat v = BigRat(BigInt(N) * d * (Q - 1), den) * BigRat(QN, hamming_ball(N, Q, w));
        if (!best || floor(v) < floor(*best)) {
            best = v;
            best_w = w;
        }
    }
    if (!best) return BoundResult::not_applicable(Method::InducedElias, "no admissible radius w");
    return clamped(Method::InducedElias, sp, *best, "w=" + std::to_string(best_w));
}

BoundResult singleton(const SpaceParams& sp, int d) {
    check_d(sp, d, "singleton");
    BigInt v = singleton_value(sp, d);
    std::string detail;
    SpaceParams c = sp.canonical();
    if (!(c == sp)) detail = "canonical order gives " + to_string(singleton_value(c, d));
    return clamped(Method::Singleton, sp, BigRat(v), detail);
}

BoundResult total_distance(const SpaceParams& sp, int d) {
    check_d(sp, d, "total_distance");
    BigRat Q = 0;
    for (int mi : sp.m) Q += BigRat(1, ipow(sp.q, unsigned(mi)));
    BigRat den = BigRat(d - sp.N()) + Q;
    if (den <= 0) return BoundResult::not_applicable(Method::TotalDistance, "needs d > N - sum q^{-m_i}");
    return clamped(Method::TotalDistance, sp, BigRat(d - sp.N() + sp.t()) / den, {});
}

BoundResult sphere_packing(const SpaceParams& sp, int d) {
    check_d(sp, d, "sphere_packing");
    int r = (d - 1) / 2;
    return clamped(Method::SpherePacking, sp, BigRat(sp.size(), ball_volume(sp, r)), "r=" + std::to_string(r));
}

BoundResult projective_sphere_packing(const SpaceParams& sp, int d) {
    if (d == 1) return BoundResult::make(Method::ProjectiveSpherePacking, BigRat(sp.size()), "trivial");
    if (d < 3) return BoundResult::not_applicable(Method::ProjectiveSpherePacking, "needs d >= 3");
    check_d(sp, d, "projective_sphere_packing");
    auto [l, delta] = psp_split(sp, d);
    SpaceParams tail;
    tail.q = sp.q;
    for (int i = l; i < sp.t(); ++i) {
        tail.n.push_back(i == l ? sp.n[i] - delta : sp.n[i]);
        tail.m.push_back(sp.m[i]);
    }
    if (tail.n[0] <= 0) throw std::logic_error("projective_sphere_packing: empty leading block");
    return clamped(Method::ProjectiveSpherePacking, sp, BigRat(tail.size(), ball_volume(tail, 1)),
                   "l=" + std::to_string(l) + " delta'=" + std::to_string(delta));
}

BoundResult projective_sphere_packing_table(const SpaceParams& sp, int d) {
    if (d == 1) return BoundResult::make(Method::ProjectiveSpherePacking, BigRat(sp.size()), "trivial");
    if (d < 3) return BoundResult::not_applicable(Method::ProjectiveSpherePacking, "needs d >= 3");
    check_d(sp, d, "projective_sphere_packing_table");
    auto [l, delta] = psp_split(sp, d);
    int e = 0;
    BigRat X = 1;
    for (int i = l; i < sp.t(); ++i) {
        e += sp.m[i] * (i == l ? sp.n[i] - delta : sp.n[i]);
        BigRat qn = rpow(BigRat(sp.q), sp.n[i] - delta);
        X += (qn - 1) / (sp.q - 1) * (ipow(sp.q, unsigned(sp.m[i])) - 1);
    }
    if (X <= 0) return BoundResult::not_applicable(Method::ProjectiveSpherePacking, "non-positive denominator");
    return clamped(Method::ProjectiveSpherePacking, sp, BigRat(ipow(sp.q, unsigned(e))) / X,
                   "table convention, denominator " + to_string(X));
}

std::vector<BoundResult> classical_bounds(const SpaceParams& sp, int d) {
    return {induced_singleton(sp, d), induced_hamming(sp, d), induced_plotkin(sp, d), induced_elias(sp, d),
            singleton(sp, d),         sphere_packing(sp, d),  projective_sphere_packing(sp, d),
            total_distance(sp, d)};
}

}  // namespace srkb
