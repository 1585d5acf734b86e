#pragma once

#include "srkb/numeric.hpp"
#include "srkb/space.hpp"

#include <vector>

namespace srkb {

// Distinct eigenvalues theta_0 > theta_1 > ... > theta_r with multiplicities.
struct Spectrum {
    std::vector<BigInt> eigenvalues;
    std::vector<BigInt> multiplicities;
    BigInt vertex_count = 0;

    int r() const { return int(eigenvalues.size()) - 1; }
    const BigInt& valency() const { return eigenvalues.front(); }
    // sum_j m_j theta_j^k, exact.
    BigInt moment(unsigned k) const;
    // Throws std::logic_error if an invariant fails.
    void check() const;
    bool operator==(const Spectrum&) const = default;
};

Spectrum bilinear_forms_spectrum(int q, int n, int m);
Spectrum hamming_spectrum(int t, int q);
Spectrum cartesian_product_spectrum(const std::vector<Spectrum>& parts);
Spectrum sum_rank_spectrum(const SpaceParams& sp);

}  // namespace srkb
