#include "srkb/graphs.hpp"

#include "srkb/linalg.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace srkb {

ExplicitGraph::ExplicitGraph(const SpaceParams& sp, int power, std::uint64_t cap)
    : sp_(sp), power_(power), field_(sp.q) {
    sp_.validate(false);
    if (power < 1 || power > sp_.N()) throw std::out_of_range("build_graph: power outside 1..N");
    if (sp_.size() > BigInt(cap))
        throw std::length_error("build_graph: " + to_string(sp_.size()) + " vertices exceed cap " + std::to_string(cap));
    n_ = int(to_ll(sp_.size()));
    words_ = (n_ + 63) / 64;
    digits_ = sp_.log_size();

    digit_.assign(std::size_t(n_) * digits_, 0);
    for (int v = 0; v < n_; ++v) {
        int x = v;
        for (int j = digits_ - 1; j >= 0; --j) {
            digit_[std::size_t(v) * digits_ + j] = std::uint8_t(x % sp_.q);
            x /= sp_.q;
        }
    }

    // Rank of every matrix of each block, indexed by its digits in base q.
    for (int i = 0; i < sp_.t(); ++i) {
        const int cells = sp_.n[i] * sp_.m[i];
        const int count = int(to_ll(ipow(sp_.q, unsigned(cells))));
        std::vector<int> ranks(count);
        std::vector<int> a(cells);
        for (int s = 0; s < count; ++s) {
            int x = s;
            for (int j = cells - 1; j >= 0; --j) {
                a[j] = x % sp_.q;
                x /= sp_.q;
            }
            ranks[s] = matrix_rank(field_, a, sp_.n[i], sp_.m[i]);
        }
        block_rank_.push_back(std::move(ranks));
    }
    weight_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) {
        for (int r : rank_profile(v)) weight_[v] += r;
    }

    adj_.assign(std::size_t(n_) * words_, 0);
    for (int u = 0; u < n_; ++u) {
        std::uint64_t* r = adj_.data() + std::size_t(u) * words_;
        for (int v = 0; v < n_; ++v) {
            int w = weight_[difference(u, v)];
            if (w >= 1 && w <= power_) r[v >> 6] |= std::uint64_t(1) << (v & 63);
        }
    }
}

int ExplicitGraph::difference(int u, int v) const {
    if (field_.characteristic() == 2) return u ^ v;
    const std::uint8_t* a = digit_.data() + std::size_t(u) * digits_;
    const std::uint8_t* b = digit_.data() + std::size_t(v) * digits_;
    int idx = 0;
    for (int j = 0; j < digits_; ++j) idx = idx * sp_.q + field_.sub(a[j], b[j]);
    return idx;
}

int ExplicitGraph::sum(int u, int v) const {
    if (field_.characteristic() == 2) return u ^ v;
    const std::uint8_t* a = digit_.data() + std::size_t(u) * digits_;
    const std::uint8_t* b = digit_.data() + std::size_t(v) * digits_;
    int idx = 0;
    for (int j = 0; j < digits_; ++j) idx = idx * sp_.q + field_.add(a[j], b[j]);
    return idx;
}

std::vector<int> ExplicitGraph::rank_profile(int v) const {
    std::vector<int> out(sp_.t());
    const std::uint8_t* d = digit_.data() + std::size_t(v) * digits_;
    int off = 0;
    for (int i = 0; i < sp_.t(); ++i) {
        const int cells = sp_.n[i] * sp_.m[i];
        int s = 0;
        for (int j = 0; j < cells; ++j) s = s * sp_.q + d[off + j];
        out[i] = block_rank_[i][s];
        off += cells;
    }
    return out;
}

int ExplicitGraph::degree(int u) const {
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(row(u)[w]);
    return c;
}

ExplicitGraph build_graph(const SpaceParams& sp, int k, std::uint64_t cap) { return ExplicitGraph(sp, k, cap); }

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
    for (auto w : b)
        if (w) return true;
    return false;
}

class AlphaSearch {
public:
    AlphaSearch(const ExplicitGraph& g, double budget) : g_(g), budget_(budget), start_(Clock::now()) {}

    // Greedy cover of P by cliques of g; colors[i] bounds alpha of {verts[0..i]}.
    void cover(Bits q, std::vector<int>& verts, std::vector<int>& colors) const {
        verts.clear();
        colors.clear();
        int color = 0;
        const int W = g_.words();
        while (any(q)) {
            ++color;
            Bits r = q;
            for (int w = 0; w < W; ++w) {
                while (r[w]) {
                    int v = w * 64 + std::countr_zero(r[w]);
                    r[w] &= r[w] - 1;
                    q[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
                    const std::uint64_t* a = g_.row(v);
                    for (int x = w; x < W; ++x) r[x] &= a[x];
                    verts.push_back(v);
                    colors.push_back(color);
                }
            }
        }
    }

    int cover_bound(const Bits& p) const {
        std::vector<int> v, c;
        cover(p, v, c);
        return c.empty() ? 0 : c.back();
    }

    void expand(Bits p, int size) {
        if (aborted_) return;
        if ((++nodes_ & 1023) == 0 && budget_ > 0 && elapsed() > budget_) {
            aborted_ = true;
            return;
        }
        std::vector<int> verts, colors;
        cover(p, verts, colors);
        const int W = g_.words();
        for (int i = int(verts.size()) - 1; i >= 0; --i) {
            if (size + colors[i] <= best_) return;
            const int v = verts[i];
            const std::uint64_t* a = g_.row(v);
            p[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
            Bits np(W);
            for (int w = 0; w < W; ++w) np[w] = p[w] & ~a[w];
            current_.push_back(v);
            if (!any(np)) {
                if (size + 1 > best_) {
                    best_ = size + 1;
                    witness_ = current_;
                }
            } else {
                expand(std::move(np), size + 1);
            }
            current_.pop_back();
            if (aborted_) return;
        }
    }

    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

    using Clock = std::chrono::steady_clock;
    const ExplicitGraph& g_;
    double budget_;
    Clock::time_point start_;
    bool aborted_ = false;
    long long nodes_ = 0;
    int best_ = 1;
    std::vector<int> current_{0};
    std::vector<int> witness_{0};
};

}  // namespace

AlphaResult independence_number(const ExplicitGraph& g, double time_budget) {
    const auto& sp = g.params();
    const int W = g.words();
    AlphaSearch s(g, time_budget);

    // Orbits of nonzero vertices under the automorphisms fixing 0: rank profile
    // up to permutations of identical blocks.
    std::vector<int> cls(sp.t());
    for (int i = 0; i < sp.t(); ++i) {
        cls[i] = i;
        for (int j = 0; j < i; ++j)
            if (sp.n[j] == sp.n[i] && sp.m[j] == sp.m[i]) {
                cls[i] = cls[j];
                break;
            }
    }
    auto orbit_key = [&](int v) {
        auto prof = g.rank_profile(v);
        std::vector<int> key{g.weight(v)};
        for (int c = 0; c < sp.t(); ++c) {
            std::vector<int> part;
            for (int i = 0; i < sp.t(); ++i)
                if (cls[i] == c) part.push_back(prof[i]);
            std::sort(part.begin(), part.end());
            key.insert(key.end(), part.begin(), part.end());
        }
        return key;
    };

    Bits p0(W, 0);
    std::map<std::vector<int>, std::vector<int>> orbits;
    for (int v = 1; v < g.size(); ++v)
        if (!g.edge(0, v)) {
            p0[v >> 6] |= std::uint64_t(1) << (v & 63);
            orbits[orbit_key(v)].push_back(v);
        }

    AlphaResult res;
    std::vector<Bits> branch_sets;
    std::vector<int> reps;
    Bits later = p0;
    for (const auto& [key, members] : orbits) {
        const int rep = members.front();
        const std::uint64_t* a = g.row(rep);
        Bits c(W);
        for (int w = 0; w < W; ++w) c[w] = later[w] & ~a[w];
        c[rep >> 6] &= ~(std::uint64_t(1) << (rep & 63));
        branch_sets.push_back(std::move(c));
        reps.push_back(rep);
        // Later branches exclude this orbit entirely.
        for (int v : members) later[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
    }

    size_t done = 0;
    for (; done < branch_sets.size(); ++done) {
        if (2 + s.cover_bound(branch_sets[done]) <= s.best_) continue;
        if (s.best_ < 2) {
            s.best_ = 2;
            s.witness_ = {0, reps[done]};
        }
        s.current_ = {0, reps[done]};
        s.expand(branch_sets[done], 2);
        if (s.aborted_) break;
    }

    res.lower = s.best_;
    res.upper = s.best_;
    if (s.aborted_)
        for (size_t b = done; b < branch_sets.size(); ++b)
            res.upper = std::max(res.upper, 2 + s.cover_bound(branch_sets[b]));
    res.witness = s.witness_;
    std::sort(res.witness.begin(), res.witness.end());
    res.nodes = s.nodes_;
    res.seconds = s.elapsed();
    return res;
}

std::vector<double> adjacency_eigenvalues(const ExplicitGraph& g) {
    const int n = g.size();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.edge(u, v)) a(u, v) = 1.0;
    Eigen::VectorXd w = symmetric_eigenvalues(a);
    return std::vector<double>(w.data(), w.data() + n);
}

bool adjacency_spectrum_check(const ExplicitGraph& g, const Spectrum& spec, double tol) {
    if (BigInt(g.size()) != spec.vertex_count) return false;
    auto ev = adjacency_eigenvalues(g);
    std::sort(ev.begin(), ev.end(), std::greater<>());
    // Group computed eigenvalues into clusters and compare with the distinct list.
    std::vector<std::pair<double, long long>> groups;
    for (double x : ev) {
        if (!groups.empty() && std::abs(groups.back().first - x) <= tol) ++groups.back().second;
        else groups.push_back({x, 1});
    }
    if (int(groups.size()) != spec.r() + 1) return false;
    size_t k = 0;
    for (int j = 0; j <= spec.r(); ++j) {
        const double theta = to_double(spec.eigenvalues[j]);
        if (BigInt(groups[j].second) != spec.multiplicities[j]) return false;
        for (long long c = 0; c < groups[j].second; ++c, ++k)
            if (std::abs(ev[k] - theta) > tol) return false;
    }
    return true;
}

void write_dimacs(const ExplicitGraph& g, std::ostream& out) {
    long long edges = 0;
    for (int u = 0; u < g.size(); ++u) edges += g.degree(u);
    out << "c sum-rank graph " << g.params().to_string() << " power " << g.power() << "\n";
    out << "p edge " << g.size() << " " << edges / 2 << "\n";
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.edge(u, v)) out << "e " << u + 1 << " " << v + 1 << "\n";
}

bool is_code(const ExplicitGraph& g, const std::vector<int>& vertices, int d) {
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (g.distance(vertices[i], vertices[j]) < d) return false;
    return true;
}

}  // namespace srkb
