#pragma once

#include "srkb/bound.hpp"
#include "srkb/exact_lp.hpp"
#include "srkb/space.hpp"

#include <vector>

namespace srkb {

// Square matrix with exact integer entries Q[u][v] = p_v(theta_u).
using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix block_eigenmatrix(int q, int n, int m);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);
// Kronecker product of the block matrices; tuples (j_1, ..., j_t) are indexed
// in mixed radix with j_1 most significant.
IntMatrix scheme_eigenmatrix(const SpaceParams& sp);

std::vector<std::vector<int>> scheme_tuples(const SpaceParams& sp);

struct DelsarteOptions {
    // Average over permutations of identical (n_i, m_i) blocks.
    bool symmetrize = true;
    // a >= 0. Dropping it gives the Lovasz theta value of the distance graph.
    bool nonnegative = true;
    SolveOptions solver;
};

struct DelsarteResult {
    BigRat value;
    LinearProgram lp{0};
    LpSolution solution;
    // One representative tuple per LP variable, and the number of tuples it stands for.
    std::vector<std::vector<int>> variables;
    std::vector<BigInt> orbit_sizes;
    // Column tuple of each LP row.
    std::vector<std::vector<int>> columns;
    bool symmetrized = false;
};

// The program of delsarte_lp_detail without solving it.
DelsarteResult delsarte_program(const SpaceParams& sp, int d, const DelsarteOptions& opt = {});

// max sum_j a_j subject to aQ >= 0, a >= 0, a_0 = 1, a_j = 0 for 0 < |j| < d.
DelsarteResult delsarte_lp_detail(const SpaceParams& sp, int d, const DelsarteOptions& opt = {});
BigRat delsarte_lp(const SpaceParams& sp, int d);
// Same program without a >= 0 (Lovasz theta of the (d-1)-th distance power).
BigRat theta_scheme_lp(const SpaceParams& sp, int d);

BoundResult delsarte_bound(const SpaceParams& sp, int d);

// Optimal distribution with the dual multipliers that certify its optimality.
struct DelsarteCertificate {
    SpaceParams sp;
    int d = 1;
    bool symmetrized = true;
    BigRat value;
    std::vector<std::vector<int>> variables;
    std::vector<BigInt> orbit_sizes;
    // Orbit totals a_j (one entry per variable).
    std::vector<BigRat> distribution;
    std::vector<std::vector<int>> columns;
    std::vector<BigRat> dual;
    bool operator==(const DelsarteCertificate&) const = default;
};

DelsarteCertificate delsarte_certificate(const SpaceParams& sp, int d, const DelsarteOptions& opt = {});
// Rebuilds the program and checks, exactly, that the distribution is feasible
// with objective value - 1 and that the dual multipliers bound it by the same value.
bool check_delsarte_certificate(const DelsarteCertificate& c);

// Krawtchouk polynomial K_i^{(t,q)}(z).
BigInt krawtchouk(int t, int q, int i, int z);

// Delsarte LP of the Hamming scheme H(t, q) built directly from Krawtchouk values.
BigRat hamming_delsarte_krawtchouk(int t, int q, int d);

}  // namespace srkb
