#pragma once

#include "srkb/space.hpp"
#include "srkb/spectrum.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace srkb {

inline constexpr std::uint64_t kDefaultVertexCap = 4096;

// Gamma^k of a sum-rank-metric graph: vertices are the elements of the space in
// SumRankSpace order (vertex 0 is the zero tuple), x ~ y iff 1 <= srk(x - y) <= k.
class ExplicitGraph {
public:
    ExplicitGraph(const SpaceParams& sp, int power, std::uint64_t cap = kDefaultVertexCap);

    const SpaceParams& params() const { return sp_; }
    int power() const { return power_; }
    int size() const { return n_; }
    int words() const { return words_; }

    // Sum-rank weight of vertex v, i.e. its distance to vertex 0.
    int weight(int v) const { return weight_[v]; }
    const std::vector<int>& weights() const { return weight_; }
    int distance(int u, int v) const { return weight_[difference(u, v)]; }
    int difference(int u, int v) const;
    int sum(int u, int v) const;
    // Per-block ranks of vertex v.
    std::vector<int> rank_profile(int v) const;

    bool edge(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1; }
    const std::uint64_t* row(int u) const { return adj_.data() + std::size_t(u) * words_; }
    int degree(int u) const;

private:
    SpaceParams sp_;
    int power_;
    int n_ = 0, words_ = 0, digits_ = 0;
    GaloisField field_;
    std::vector<std::uint8_t> digit_;  // n_ x digits_
    std::vector<int> weight_;
    std::vector<std::vector<int>> block_rank_;  // per block, rank of each sub-index
    std::vector<std::uint64_t> adj_;
};

ExplicitGraph build_graph(const SpaceParams& sp, int k, std::uint64_t cap = kDefaultVertexCap);

struct AlphaResult {
    int lower = 0;
    int upper = 0;
    bool exact() const { return lower == upper; }
    // A largest independent set found, containing vertex 0.
    std::vector<int> witness;
    long long nodes = 0;
    double seconds = 0;
};

// Exact independence number by branch and bound with clique-cover bounds. The
// search fixes vertex 0 and branches on the orbit of a second vertex under the
// automorphisms fixing 0. Returns an interval if time_budget (seconds) runs out;
// a budget <= 0 means unlimited.
AlphaResult independence_number(const ExplicitGraph& g, double time_budget = 0);

// Eigenvalues of the adjacency matrix (ascending), computed in double precision.
std::vector<double> adjacency_eigenvalues(const ExplicitGraph& g);
// Eigenvalues within tol of spec and multiplicities equal after grouping.
bool adjacency_spectrum_check(const ExplicitGraph& g, const Spectrum& spec, double tol = 1e-6);

// DIMACS edge format, vertices numbered from 1.
void write_dimacs(const ExplicitGraph& g, std::ostream& out);

// Whether every pair of distinct vertices in the set is at distance >= d.
bool is_code(const ExplicitGraph& g, const std::vector<int>& vertices, int d);

}  // namespace srkb
