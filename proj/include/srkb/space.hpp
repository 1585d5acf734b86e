#pragma once

#include "srkb/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace srkb {

// Parameters (q, n, m) of the space F_q^{n_1 x m_1} x ... x F_q^{n_t x m_t}.
struct SpaceParams {
    int q = 2;
    std::vector<int> n;
    std::vector<int> m;

    SpaceParams() = default;
    SpaceParams(int q_, std::vector<int> n_, std::vector<int> m_);

    int t() const { return int(n.size()); }
    int N() const;
    // Sum of m_i n_i, i.e. log_q |V|.
    int log_size() const;
    BigInt size() const;
    int max_m() const;
    int characteristic() const;

    // Throws std::invalid_argument on violation. The ordering requirement
    // (m non-increasing) can be waived for callers that keep a custom block order.
    void validate(bool require_order = true) const;
    bool is_ordered() const;
    // Blocks sorted by m descending, ties by n descending (stable).
    SpaceParams canonical() const;

    std::string to_string() const;
    bool operator==(const SpaceParams&) const = default;
};

SpaceParams hamming_space(int t, int q);
SpaceParams rank_space(int q, int n, int m);
// n = (n, 1, ..., 1), m = (m, 1, ..., 1) with t blocks.
SpaceParams one_big_block_space(int q, int m, int n, int t);

BigInt gaussian_binomial(int n, int j, int q);
BigInt rank_count(int n, int m, int k, int q, bool strict = false);

// |S_l| for l = 0..N.
std::vector<BigInt> sphere_volumes(const SpaceParams& sp);
BigInt sphere_volume(const SpaceParams& sp, int l);
BigInt ball_volume(const SpaceParams& sp, int r);

BigInt v1_one_big_block(int q, int m, int n, int t);
BigInt volume_upper_bound_one_big_block(int q, int m, int n, int t, int r);
// (sum_{i<=r} C(t-2, i)) mod p, p the characteristic of q.
int congruence_residue(int q, int t, int r);

// Finite field F_q with elements 0..q-1. An element's base-p digits are its
// coefficients over F_p, so addition is digitwise mod p.
class GaloisField {
public:
    explicit GaloisField(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return k_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int inv(int a) const;

private:
    int q_, p_, k_;
    std::vector<int> add_, mul_, neg_, inv_;
};

// Rank of a rows x cols matrix (row-major) over F_q.
int matrix_rank(const GaloisField& f, std::vector<int> a, int rows, int cols);

struct SumRankVector {
    // Block i is an n_i x m_i matrix stored row-major.
    std::vector<std::vector<int>> blocks;
    bool operator==(const SumRankVector&) const = default;
};

// Element-level arithmetic on an explicit sum-rank space. Elements are
// enumerated in mixed radix: block 1 entry (0,0) is the most significant digit.
class SumRankSpace {
public:
    explicit SumRankSpace(SpaceParams sp);

    const SpaceParams& params() const { return sp_; }
    const GaloisField& field() const { return field_; }

    SumRankVector zero() const;
    bool contains(const SumRankVector& x) const;
    SumRankVector add(const SumRankVector& x, const SumRankVector& y) const;
    SumRankVector sub(const SumRankVector& x, const SumRankVector& y) const;

    std::vector<int> rank_profile(const SumRankVector& x) const;
    int weight(const SumRankVector& x) const;
    int distance(const SumRankVector& x, const SumRankVector& y) const;

    // Number of F_q digits, sum of n_i m_i.
    int digits() const { return sp_.log_size(); }
    // Throws if |V| does not fit in 62 bits.
    std::uint64_t size() const;
    SumRankVector element(std::uint64_t index) const;
    std::uint64_t index(const SumRankVector& x) const;

private:
    void check_shape(const SumRankVector& x) const;
    SpaceParams sp_;
    GaloisField field_;
};

int srk_distance(const SumRankSpace& space, const SumRankVector& x, const SumRankVector& y);

}  // namespace srkb
