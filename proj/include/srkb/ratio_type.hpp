#pragma once

#include "srkb/bound.hpp"
#include "srkb/exact_lp.hpp"
#include "srkb/spectrum.hpp"

#include <vector>

namespace srkb {

// Polynomial with rational coefficients (ascending powers), degree <= d - 1.
class RtPolynomial {
public:
    RtPolynomial(std::vector<BigRat> coeffs, int d);

    int degree() const { return int(coeffs_.size()) - 1; }
    const std::vector<BigRat>& coeffs() const { return coeffs_; }
    BigRat operator()(const BigRat& x) const;

    // prod_{i in roots} (x - theta_i) / (theta_0 - theta_i)
    static RtPolynomial minor(const Spectrum& spec, const std::vector<int>& roots, int d);

private:
    std::vector<BigRat> coeffs_;
};

// |V| (W(p) - lambda(p)) / (p(theta_0) - lambda(p)), with W(p) the constant
// diagonal of p(A) computed from the spectrum. Throws std::domain_error when
// p(theta_0) <= lambda(p).
BigRat ratio_type_poly_bound(const Spectrum& spec, int d, const RtPolynomial& p);

// Best single-polynomial bound for d = 3.
BigRat ratio_type_d3(const Spectrum& spec);

// Closed forms for the (n,1,...,1)/(m,1,...,1) family and for n = m = (2,...,2), d = 3.
// The family form assumes -1 - eps and q - 1 - eps (eps = (t - 1) mod q) are the
// largest eigenvalue <= -1 and its upper neighbour; family_closed_form_applies
// checks that against the spectrum. Outside that range it exceeds ratio_type_d3.
BigRat ratio_type_family_closed_form(int q, int m, int n, int t);
bool family_closed_form_applies(int q, int m, int n, int t);
BigRat ratio_type_22_closed_form(int q, int t);

struct MinorResult {
    BigRat value;
    // Roots I (indices into the spectrum) of the minimizing polynomial.
    std::vector<int> subset;
    long subsets_checked = 0;
    long subsets_feasible = 0;
};

// Minimum over (d-1)-subsets I of {1..r} of sum_{j not in I} m_j prod_{i in I}
// (theta_j - theta_i)/(theta_0 - theta_i), taken over the subsets whose values
// at the remaining eigenvalues are all non-negative.
MinorResult minor_closed_form_detail(const Spectrum& spec, int d);
BigRat minor_closed_form(const Spectrum& spec, int d);

struct RatioLpResult {
    BigRat value;
    LinearProgram lp{0};
    LpSolution solution;
};

// Minimize sum_j m_j x_j with x_0 = 1, x_j >= 0 and vanishing divided
// differences f[theta_0..theta_s] for s = d..r.
RatioLpResult ratio_type_lp_detail(const Spectrum& spec, int d);
BigRat ratio_type_lp(const Spectrum& spec, int d);

// Floored LP optimum as a table entry.
BoundResult ratio_type_bound(const SpaceParams& sp, int d);

}  // namespace srkb
