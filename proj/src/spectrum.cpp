#include "srkb/spectrum.hpp"

#include <map>
#include <stdexcept>

namespace srkb {

BigInt Spectrum::moment(unsigned k) const {
    BigInt s = 0;
    for (size_t j = 0; j < eigenvalues.size(); ++j)
        s += multiplicities[j] * boost::multiprecision::pow(eigenvalues[j], k);
    return s;
}

void Spectrum::check() const {
    if (eigenvalues.empty() || eigenvalues.size() != multiplicities.size())
        throw std::logic_error("spectrum: malformed");
    for (size_t j = 1; j < eigenvalues.size(); ++j)
        if (!(eigenvalues[j] < eigenvalues[j - 1])) throw std::logic_error("spectrum: eigenvalues not strictly decreasing");
    BigInt total = 0;
    for (const auto& m : multiplicities) {
        if (m <= 0) throw std::logic_error("spectrum: non-positive multiplicity");
        total += m;
    }
    if (total != vertex_count) throw std::logic_error("spectrum: multiplicities do not sum to |V|");
    if (multiplicities[0] != 1) throw std::logic_error("spectrum: principal eigenvalue is not simple");
    if (moment(1) != 0) throw std::logic_error("spectrum: trace is not zero");
    if (moment(2) != vertex_count * valency()) throw std::logic_error("spectrum: second moment mismatch");
}

Spectrum bilinear_forms_spectrum(int q, int n, int m) {
    if (n < 1 || m < n) throw std::invalid_argument("bilinear_forms_spectrum: need m >= n >= 1");
    Spectrum s;
    BigInt qm = ipow(q, unsigned(m));
    BigInt mult = 1;
    for (int j = 0; j <= n; ++j) {
        BigInt qj = ipow(q, unsigned(j));
        BigInt num = (ipow(q, unsigned(n - j)) - 1) * (qm - qj) - qj + 1;
        if (num % (q - 1) != 0) throw std::logic_error("bilinear_forms_spectrum: non-integral eigenvalue");
        s.eigenvalues.push_back(num / (q - 1));
        s.multiplicities.push_back(mult);
        // m(theta_{j+1}) = m(theta_j) (q^{n-j}-1)(q^m-q^j)/(q^{j+1}-1)
        BigInt next = mult * (ipow(q, unsigned(n - j)) - 1) * (qm - qj);
        BigInt den = ipow(q, unsigned(j + 1)) - 1;
        if (j < n && next % den != 0) throw std::logic_error("bilinear_forms_spectrum: non-integral multiplicity");
        mult = j < n ? BigInt(next / den) : BigInt(0);
    }
    s.vertex_count = ipow(q, unsigned(n * m));
    s.check();
    return s;
}

Spectrum hamming_spectrum(int t, int q) {
    if (t < 1 || q < 2) throw std::invalid_argument("hamming_spectrum: need t >= 1, q >= 2");
    Spectrum s;
    for (int j = 0; j <= t; ++j) {
        s.eigenvalues.push_back(BigInt(q) * (t - j) - t);
        s.multiplicities.push_back(binomial(unsigned(t), unsigned(j)) * ipow(q - 1, unsigned(j)));
    }
    s.vertex_count = ipow(q, unsigned(t));
    s.check();
    return s;
}

Spectrum cartesian_product_spectrum(const std::vector<Spectrum>& parts) {
    if (parts.empty()) throw std::invalid_argument("cartesian_product_spectrum: empty product");
    std::map<BigInt, BigInt, std::greater<>> acc;
    acc[0] = 1;
    BigInt count = 1;
    for (const auto& p : parts) {
        std::map<BigInt, BigInt, std::greater<>> next;
        for (const auto& [lam, mul] : acc)
            for (size_t j = 0; j < p.eigenvalues.size(); ++j) next[lam + p.eigenvalues[j]] += mul * p.multiplicities[j];
        acc = std::move(next);
        count *= p.vertex_count;
    }
    Spectrum s;
    for (const auto& [lam, mul] : acc) {
        s.eigenvalues.push_back(lam);
        s.multiplicities.push_back(mul);
    }
    s.vertex_count = count;
    s.check();
    return s;
}

Spectrum sum_rank_spectrum(const SpaceParams& sp) {
    std::vector<Spectrum> parts;
    for (int i = 0; i < sp.t(); ++i) parts.push_back(bilinear_forms_spectrum(sp.q, sp.n[i], sp.m[i]));
    return cartesian_product_spectrum(parts);
}

}  // namespace srkb
