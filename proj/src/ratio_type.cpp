#include "srkb/ratio_type.hpp"

#include <stdexcept>
#include <string>

namespace srkb {

RtPolynomial::RtPolynomial(std::vector<BigRat> coeffs, int d) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(0);
    if (degree() > d - 1)
        throw std::invalid_argument("RtPolynomial: degree " + std::to_string(degree()) + " exceeds d - 1 = " +
                                    std::to_string(d - 1));
}

BigRat RtPolynomial::operator()(const BigRat& x) const {
    BigRat v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
    return v;
}

RtPolynomial RtPolynomial::minor(const Spectrum& spec, const std::vector<int>& roots, int d) {
    std::vector<BigRat> c{1};
    const BigRat t0(spec.eigenvalues[0]);
    for (int i : roots) {
        BigRat ti(spec.eigenvalues.at(i));
        BigRat s = t0 - ti;
        std::vector<BigRat> next(c.size() + 1);
        for (size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k] / s;
            next[k] -= c[k] * ti / s;
        }
        c = std::move(next);
    }
    return RtPolynomial(std::move(c), d);
}

BigRat ratio_type_poly_bound(const Spectrum& spec, int d, const RtPolynomial& p) {
    if (p.degree() > d - 1) throw std::invalid_argument("ratio_type_poly_bound: degree exceeds d - 1");
    const BigRat V(spec.vertex_count);
    BigRat W = 0;
    std::optional<BigRat> lambda;
    for (size_t j = 0; j < spec.eigenvalues.size(); ++j) {
        BigRat v = p(BigRat(spec.eigenvalues[j]));
        W += BigRat(spec.multiplicities[j]) * v;
        if (j > 0 && (!lambda || v < *lambda)) lambda = v;
    }
    W /= V;
    BigRat top = p(BigRat(spec.eigenvalues[0]));
    if (!lambda || top <= *lambda) throw std::domain_error("ratio_type_poly_bound: p(theta_0) <= lambda(p)");
    return V * (W - *lambda) / (top - *lambda);
}

BigRat ratio_type_d3(const Spectrum& spec) {
    if (spec.r() < 2) throw std::domain_error("ratio_type_d3: needs at least three distinct eigenvalues");
    int i = -1;
    for (int j = 1; j <= spec.r(); ++j)
        if (spec.eigenvalues[j] <= -1) {
            i = j;
            break;
        }
    if (i < 2) throw std::domain_error("ratio_type_d3: no admissible eigenvalue <= -1");
    const BigInt &t0 = spec.eigenvalues[0], &ti = spec.eigenvalues[i], &tp = spec.eigenvalues[i - 1];
    return BigRat(spec.vertex_count * (t0 + ti * tp), (t0 - ti) * (t0 - tp));
}

BigRat ratio_type_family_closed_form(int q, int m, int n, int t) {
    if (m < n || m < 2 || n < 1 || t < 1) throw std::invalid_argument("ratio_type_family_closed_form: needs m >= n, m >= 2");
    const BigInt Q(q);
    const BigInt eps = (t - 1) % q;
    const BigInt base = (ipow(q, unsigned(m)) - 1) * (ipow(q, unsigned(n)) - 1);
    BigInt num = ipow(q, unsigned(m * n + t - 1)) * (Q - 1) *
                 (base + (Q - 1) * (Q - 1) * (t - 1) + (Q - 1) * (eps + 1) * (eps - Q + 1));
    BigInt den = (base + (Q - 1) * (Q - 1) * (t - 1) + (eps + 1) * (Q - 1)) *
                 (base + (Q - 1) * (Q - 1) * (t - 2) + eps * (Q - 1));
    return BigRat(num, den);
}

bool family_closed_form_applies(int q, int m, int n, int t) {
    if (m < n || m < 2 || n < 1 || t < 1) throw std::invalid_argument("family_closed_form_applies: needs m >= n, m >= 2");
    Spectrum spec = sum_rank_spectrum(one_big_block_space(q, m, n, t));
    const int eps = (t - 1) % q;
    for (int j = 1; j <= spec.r(); ++j)
        if (spec.eigenvalues[j] <= -1)
            return j >= 2 && spec.eigenvalues[j] == -1 - eps && spec.eigenvalues[j - 1] == q - 1 - eps;
    return false;
}

BigRat ratio_type_22_closed_form(int q, int t) {
    if (t < 2) throw std::invalid_argument("ratio_type_22_closed_form: needs t >= 2");
    const BigInt Q(q), q2 = Q * Q;
    const BigInt eps = (BigInt(t) * q + t - 1) % q2;
    const BigInt a = BigInt(t) * (q2 - 1) * (Q + 1);
    BigInt num = ipow(q, unsigned(4 * t)) * (a - (1 + eps) * (q2 - 1 - eps));
    BigInt den = (a + 1 + eps) * (a + 1 + eps - q2);
    return BigRat(num, den);
}

MinorResult minor_closed_form_detail(const Spectrum& spec, int d) {
    const int r = spec.r(), k = d - 1;
    if (k < 0 || k > r) throw std::invalid_argument("minor_closed_form: needs 0 <= d - 1 <= r");
    const auto& th = spec.eigenvalues;
    MinorResult res;
    std::vector<int> I(k);
    for (int i = 0; i < k; ++i) I[i] = i + 1;
    std::vector<char> in(r + 1, 0);
    bool have = false;
    for (;;) {
        ++res.subsets_checked;
        std::fill(in.begin(), in.end(), 0);
        for (int i : I) in[i] = 1;
        // Sign check first: theta_0 - theta_i > 0, so the sign of the value at
        // theta_j is the parity of roots above theta_j.
        bool feasible = true;
        for (int j = 1; j <= r && feasible; ++j) {
            if (in[j]) continue;
            int above = 0;
            for (int i : I) above += i < j;
            if (above % 2) feasible = false;
        }
        if (feasible) {
            ++res.subsets_feasible;
            BigRat total = 1;
            for (int j = 1; j <= r; ++j) {
                if (in[j]) continue;
                BigInt num = spec.multiplicities[j], den = 1;
                for (int i : I) {
                    num *= th[j] - th[i];
                    den *= th[0] - th[i];
                }
                total += BigRat(num, den);
            }
            if (!have || total < res.value) {
                res.value = total;
                res.subset = I;
                have = true;
            }
        }
        // Next combination in lexicographic order.
        int p = k - 1;
        while (p >= 0 && I[p] == r - (k - 1 - p)) --p;
        if (p < 0) break;
        ++I[p];
        for (int q = p + 1; q < k; ++q) I[q] = I[q - 1] + 1;
    }
    if (!have) throw std::logic_error("minor_closed_form: no feasible subset");
    return res;
}

BigRat minor_closed_form(const Spectrum& spec, int d) { return minor_closed_form_detail(spec, d).value; }

RatioLpResult ratio_type_lp_detail(const Spectrum& spec, int d) {
    const int r = spec.r();
    if (d < 1 || d > r + 1) throw std::invalid_argument("ratio_type_lp: needs 1 <= d <= r + 1");
    const auto& th = spec.eigenvalues;
    RatioLpResult res;
    res.lp = LinearProgram(r + 1, Sense::Minimize);
    for (int j = 0; j <= r; ++j) res.lp.objective[j] = BigRat(spec.multiplicities[j]);
    std::vector<BigRat> e0(r + 1);
    e0[0] = 1;
    res.lp.add(e0, Relation::Equal, 1);
    for (int s = d; s <= r; ++s) {
        std::vector<BigRat> row(r + 1);
        for (int j = 0; j <= s; ++j) {
            BigInt den = 1;
            for (int i = 0; i <= s; ++i)
                if (i != j) den *= th[j] - th[i];
            row[j] = BigRat(BigInt(1), den);
        }
        res.lp.add(std::move(row), Relation::Equal, 0);
    }
    res.solution = solve(res.lp);
    if (res.solution.status != LpStatus::Optimal)
        throw std::logic_error("ratio_type_lp: LP " + to_string(res.solution.status));
    res.value = res.solution.objective_value;
    return res;
}

BigRat ratio_type_lp(const Spectrum& spec, int d) { return ratio_type_lp_detail(spec, d).value; }

BoundResult ratio_type_bound(const SpaceParams& sp, int d) {
    if (d < 1 || d > sp.N()) throw std::out_of_range("ratio_type_bound: d outside 1..N");
    Spectrum spec = sum_rank_spectrum(sp);
    if (d > spec.r() + 1) return BoundResult::not_applicable(Method::RatioType, "d exceeds r + 1");
    auto res = ratio_type_lp_detail(spec, d);
    return BoundResult::make(Method::RatioType, res.value,
                             "lp optimum " + to_string(res.value) + ", " + std::to_string(res.solution.pivots) + " pivots");
}

}  // namespace srkb
