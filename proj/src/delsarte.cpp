#include "srkb/delsarte.hpp"

#include "srkb/spectrum.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace srkb {

IntMatrix block_eigenmatrix(int q, int n, int m) {
    if (n < 1 || m < n) throw std::invalid_argument("block_eigenmatrix: needs m >= n >= 1");
    Spectrum spec = bilinear_forms_spectrum(q, n, m);
    auto b = [&](int v) -> BigRat {
        if (v > n) return 0;
        return BigRat(ipow(q, unsigned(2 * v)) * (ipow(q, unsigned(m - v)) - 1) * (ipow(q, unsigned(n - v)) - 1), BigInt(q - 1));
    };
    auto c = [&](int v) -> BigRat {
        if (v == 0) return 0;
        return BigRat(ipow(q, unsigned(v - 1)) * (ipow(q, unsigned(v)) - 1), BigInt(q - 1));
    };
    auto a = [&](int v) { return b(0) - b(v) - c(v); };

    IntMatrix Q(n + 1, std::vector<BigInt>(n + 1));
    for (int u = 0; u <= n; ++u) {
        BigRat theta(spec.eigenvalues[u]);
        std::vector<BigRat> p(n + 1);
        p[0] = 1;
        if (n >= 1) p[1] = theta;
        for (int v = 2; v <= n; ++v) p[v] = ((theta - a(v - 1)) * p[v - 1] - b(v - 2) * p[v - 2]) / c(v);
        for (int v = 0; v <= n; ++v) {
            if (denom(p[v]) != 1) throw std::logic_error("block_eigenmatrix: non-integral entry");
            Q[u][v] = numer(p[v]);
        }
    }
    return Q;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    size_t ra = a.size(), ca = a[0].size(), rb = b.size(), cb = b[0].size();
    IntMatrix k(ra * rb, std::vector<BigInt>(ca * cb));
    for (size_t i = 0; i < ra; ++i)
        for (size_t j = 0; j < ca; ++j)
            for (size_t u = 0; u < rb; ++u)
                for (size_t v = 0; v < cb; ++v) k[i * rb + u][j * cb + v] = a[i][j] * b[u][v];
    return k;
}

IntMatrix scheme_eigenmatrix(const SpaceParams& sp) {
    IntMatrix Q = block_eigenmatrix(sp.q, sp.n[0], sp.m[0]);
    for (int i = 1; i < sp.t(); ++i) Q = kronecker(Q, block_eigenmatrix(sp.q, sp.n[i], sp.m[i]));
    return Q;
}

std::vector<std::vector<int>> scheme_tuples(const SpaceParams& sp) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < sp.t(); ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : out)
            for (int j = 0; j <= sp.n[i]; ++j) {
                next.push_back(prefix);
                next.back().push_back(j);
            }
        out = std::move(next);
    }
    return out;
}

namespace {

// Positions sharing (n_i, m_i) when symmetrizing; singletons otherwise.
struct BlockClass {
    int n = 0;
    std::vector<int> positions;
    IntMatrix Q;
    // All count vectors (length n + 1) summing to positions.size().
    std::vector<std::vector<int>> multisets;
    std::map<std::vector<int>, int> index;
};

void enumerate_counts(int values, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (int(cur.size()) == values - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int c = total; c >= 0; --c) {
        cur.push_back(c);
        enumerate_counts(values, total - c, cur, out);
        cur.pop_back();
    }
}

// Arrangement of a count vector, largest values first.
std::vector<int> arrangement(const std::vector<int>& counts) {
    std::vector<int> a;
    for (int v = int(counts.size()) - 1; v >= 0; --v)
        for (int c = 0; c < counts[v]; ++c) a.push_back(v);
    return a;
}

BigInt multinomial(const std::vector<int>& counts) {
    int total = 0;
    BigInt r = 1;
    for (int c : counts) {
        total += c;
        r *= binomial(unsigned(total), unsigned(c));
    }
    return r;
}

// S[row multiset] = sum over arrangements j of the multiset of prod_p Q[j_p][k_p].
std::vector<BigInt> orbit_sums(const BlockClass& cls, const std::vector<int>& k) {
    std::map<std::vector<int>, BigInt> states;
    states[std::vector<int>(cls.n + 1, 0)] = 1;
    for (int kp : k) {
        std::map<std::vector<int>, BigInt> next;
        for (const auto& [counts, val] : states)
            for (int v = 0; v <= cls.n; ++v) {
                if (cls.Q[v][kp] == 0) continue;
                auto c = counts;
                ++c[v];
                next[c] += val * cls.Q[v][kp];
            }
        states = std::move(next);
    }
    std::vector<BigInt> out(cls.multisets.size(), BigInt(0));
    for (const auto& [counts, val] : states) out[cls.index.at(counts)] = val;
    return out;
}

}  // namespace

DelsarteResult delsarte_program(const SpaceParams& sp, int d, const DelsarteOptions& opt) {
    sp.validate(false);
    if (d < 1 || d > sp.N()) throw std::out_of_range("delsarte_lp: d outside 1..N");

    std::vector<BlockClass> classes;
    for (int i = 0; i < sp.t(); ++i) {
        BlockClass* target = nullptr;
        if (opt.symmetrize)
            for (auto& c : classes)
                if (sp.n[c.positions[0]] == sp.n[i] && sp.m[c.positions[0]] == sp.m[i]) target = &c;
        if (!target) {
            classes.push_back({});
            target = &classes.back();
            target->n = sp.n[i];
            target->Q = block_eigenmatrix(sp.q, sp.n[i], sp.m[i]);
        }
        target->positions.push_back(i);
    }
    for (auto& c : classes) {
        std::vector<int> cur;
        enumerate_counts(c.n + 1, int(c.positions.size()), cur, c.multisets);
        for (size_t k = 0; k < c.multisets.size(); ++k) c.index[c.multisets[k]] = int(k);
    }

    // Orbits are tuples of per-class multiset indices.
    std::vector<std::vector<int>> orbits{{}};
    for (const auto& c : classes) {
        std::vector<std::vector<int>> next;
        for (const auto& o : orbits)
            for (size_t k = 0; k < c.multisets.size(); ++k) {
                next.push_back(o);
                next.back().push_back(int(k));
            }
        orbits = std::move(next);
    }
    auto weight = [&](const std::vector<int>& o) {
        int w = 0;
        for (size_t c = 0; c < classes.size(); ++c) {
            const auto& cnt = classes[c].multisets[o[c]];
            for (size_t v = 0; v < cnt.size(); ++v) w += int(v) * cnt[v];
        }
        return w;
    };
    auto tuple_of = [&](const std::vector<int>& o) {
        std::vector<int> tup(sp.t());
        for (size_t c = 0; c < classes.size(); ++c) {
            auto arr = arrangement(classes[c].multisets[o[c]]);
            for (size_t p = 0; p < arr.size(); ++p) tup[classes[c].positions[p]] = arr[p];
        }
        return tup;
    };

    int zero_orbit = -1;
    std::vector<int> var_orbits;
    for (size_t o = 0; o < orbits.size(); ++o) {
        int w = weight(orbits[o]);
        if (w == 0) zero_orbit = int(o);
        else if (w >= d) var_orbits.push_back(int(o));
    }

    // Per-class orbit sums for every column multiset.
    std::vector<std::vector<std::vector<BigInt>>> sums(classes.size());
    for (size_t c = 0; c < classes.size(); ++c)
        for (const auto& colset : classes[c].multisets) sums[c].push_back(orbit_sums(classes[c], arrangement(colset)));

    DelsarteResult res;
    res.symmetrized = opt.symmetrize;
    const int nv = int(var_orbits.size());
    res.lp = LinearProgram(nv, Sense::Maximize);
    for (int j = 0; j < nv; ++j) {
        const auto& o = orbits[var_orbits[j]];
        BigInt size = 1;
        for (size_t c = 0; c < classes.size(); ++c) size *= multinomial(classes[c].multisets[o[c]]);
        res.orbit_sizes.push_back(size);
        res.variables.push_back(tuple_of(o));
        res.lp.objective[j] = BigRat(size);
        if (!opt.nonnegative) res.lp.set_free(j);
    }
    for (const auto& col : orbits) {
        auto coef = [&](const std::vector<int>& row) {
            BigInt v = 1;
            for (size_t c = 0; c < classes.size() && v != 0; ++c) v *= sums[c][col[c]][row[c]];
            return v;
        };
        std::vector<BigRat> row(nv);
        for (int j = 0; j < nv; ++j) row[j] = BigRat(coef(orbits[var_orbits[j]]));
        res.lp.add(std::move(row), Relation::GreaterEqual, BigRat(-coef(orbits[zero_orbit])));
        res.columns.push_back(tuple_of(col));
    }

    return res;
}

DelsarteResult delsarte_lp_detail(const SpaceParams& sp, int d, const DelsarteOptions& opt) {
    DelsarteResult res = delsarte_program(sp, d, opt);
    res.solution = solve(res.lp, opt.solver);
    if (res.solution.status != LpStatus::Optimal)
        throw std::logic_error("delsarte_lp: LP " + to_string(res.solution.status));
    res.value = 1 + res.solution.objective_value;
    return res;
}

BigRat delsarte_lp(const SpaceParams& sp, int d) { return delsarte_lp_detail(sp, d).value; }

BigRat theta_scheme_lp(const SpaceParams& sp, int d) {
    DelsarteOptions opt;
    opt.nonnegative = false;
    return delsarte_lp_detail(sp, d, opt).value;
}

BoundResult delsarte_bound(const SpaceParams& sp, int d) {
    auto res = delsarte_lp_detail(sp, d);
    return BoundResult::make(Method::Delsarte, res.value,
                             "lp optimum " + to_string(res.value) + ", " + std::to_string(res.lp.num_vars()) +
                                 " variables, " + std::to_string(res.solution.pivots) + " pivots");
}

DelsarteCertificate delsarte_certificate(const SpaceParams& sp, int d, const DelsarteOptions& opt) {
    DelsarteResult res = delsarte_lp_detail(sp, d, opt);
    DelsarteCertificate c;
    c.sp = sp;
    c.d = d;
    c.symmetrized = res.symmetrized;
    c.value = res.value;
    c.variables = res.variables;
    c.orbit_sizes = res.orbit_sizes;
    for (size_t j = 0; j < res.variables.size(); ++j) c.distribution.push_back(res.solution.primal[j] * BigRat(res.orbit_sizes[j]));
    c.columns = res.columns;
    c.dual = res.solution.dual;
    return c;
}

bool check_delsarte_certificate(const DelsarteCertificate& c) {
    DelsarteOptions opt;
    opt.symmetrize = c.symmetrized;
    DelsarteResult prog = delsarte_program(c.sp, c.d, opt);
    if (prog.variables != c.variables || prog.columns != c.columns || prog.orbit_sizes != c.orbit_sizes) return false;
    if (c.distribution.size() != c.variables.size()) return false;
    LpSolution sol;
    sol.status = LpStatus::Optimal;
    BigRat total = 0;
    for (size_t j = 0; j < c.distribution.size(); ++j) {
        sol.primal.push_back(c.distribution[j] / BigRat(c.orbit_sizes[j]));
        total += c.distribution[j];
    }
    if (1 + total != c.value) return false;
    for (const auto& x : sol.primal)
        if (x < 0) return false;
    for (const auto& row : prog.lp.constraints) {
        BigRat lhs = 0;
        for (size_t j = 0; j < row.coeffs.size(); ++j) lhs += row.coeffs[j] * sol.primal[j];
        if (lhs < row.rhs) return false;
    }
    auto bound = dual_bound(prog.lp, c.dual);
    return bound && 1 + *bound == c.value;
}

BigInt krawtchouk(int t, int q, int i, int z) {
    if (i < 0 || i > t || z < 0 || z > t) throw std::out_of_range("krawtchouk: index out of range");
    BigInt s = 0;
    for (int j = 0; j <= i; ++j) {
        BigInt term = binomial(unsigned(z), unsigned(j)) * binomial(unsigned(t - z), unsigned(i - j)) * ipow(q - 1, unsigned(i - j));
        s += (j % 2) ? BigInt(-term) : term;
    }
    return s;
}

BigRat hamming_delsarte_krawtchouk(int t, int q, int d) {
    if (d < 1 || d > t) throw std::out_of_range("hamming_delsarte_krawtchouk: d outside 1..t");
    std::vector<int> weights;
    for (int i = d; i <= t; ++i) weights.push_back(i);
    LinearProgram lp(int(weights.size()), Sense::Maximize);
    for (size_t j = 0; j < weights.size(); ++j) lp.objective[j] = 1;
    for (int k = 0; k <= t; ++k) {
        std::vector<BigRat> row(weights.size());
        for (size_t j = 0; j < weights.size(); ++j) row[j] = BigRat(krawtchouk(t, q, k, weights[j]));
        lp.add(std::move(row), Relation::GreaterEqual, BigRat(-krawtchouk(t, q, k, 0)));
    }
    auto sol = solve(lp);
    if (sol.status != LpStatus::Optimal) throw std::logic_error("hamming_delsarte_krawtchouk: LP not optimal");
    return 1 + sol.objective_value;
}

}  // namespace srkb
