#include "srkb/exact_lp.hpp"

#include <stdexcept>

namespace srkb {

LinearProgram::LinearProgram(int num_vars, Sense s)
    : sense(s), objective(num_vars, BigRat(0)), lower(num_vars, BigRat(0)), upper(num_vars) {}

void LinearProgram::add(std::vector<BigRat> coeffs, Relation rel, BigRat rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
}

void LinearProgram::validate() const {
    int n = num_vars();
    if (int(lower.size()) != n || int(upper.size()) != n)
        throw std::invalid_argument("LinearProgram: bound vectors have the wrong length");
    for (const auto& c : constraints)
        if (int(c.coeffs.size()) != n) throw std::invalid_argument("LinearProgram: ragged constraint row");
    for (int j = 0; j < n; ++j)
        if (lower[j] && upper[j] && *upper[j] < *lower[j])
            throw std::invalid_argument("LinearProgram: empty bound interval for x" + std::to_string(j));
}

std::string to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    return "?";
}

namespace {

// How an original variable maps to non-negative tableau columns.
struct VarMap {
    enum Kind { Shifted, Reflected, Split } kind;
    int col;       // first structural column
    BigRat offset; // lower bound (Shifted) or upper bound (Reflected)
};

class Tableau {
public:
    Tableau(int rows, int cols) : m(rows), n(cols), a(rows, std::vector<BigRat>(cols + 1)), obj(cols + 1), basis(rows) {}

    BigRat& rhs(int i) { return a[i][n]; }

    void pivot(int r, int e) {
        BigRat p = a[r][e];
        std::vector<int> nz;
        for (int j = 0; j <= n; ++j) {
            if (a[r][j] == 0) continue;
            a[r][j] /= p;
            nz.push_back(j);
        }
        auto eliminate = [&](std::vector<BigRat>& row) {
            if (row[e] == 0) return;
            BigRat f = row[e];
            for (int j : nz) row[j] -= f * a[r][j];
        };
        for (int i = 0; i < m; ++i)
            if (i != r) eliminate(a[i]);
        eliminate(obj);
        basis[r] = e;
    }

    // Recompute reduced costs for cost vector c under the current basis.
    void price(const std::vector<BigRat>& c) {
        for (int j = 0; j < n; ++j) obj[j] = c[j];
        obj[n] = 0;
        for (int i = 0; i < m; ++i) {
            const BigRat& cb = c[basis[i]];
            if (cb == 0) continue;
            for (int j = 0; j <= n; ++j)
                if (a[i][j] != 0) obj[j] -= cb * a[i][j];
        }
    }

    // Returns Optimal or Unbounded. Columns with enterable[j] == false never enter.
    LpStatus optimize(const std::vector<bool>& enterable, const SolveOptions& opt, long& pivots) {
        int degenerate_run = 0;
        for (;;) {
            bool bland = opt.rule == PivotRule::Bland || degenerate_run >= opt.degenerate_limit;
            int e = -1;
            for (int j = 0; j < n; ++j) {
                if (!enterable[j] || obj[j] <= 0) continue;
                if (e < 0) {
                    e = j;
                    if (bland) break;
                } else if (obj[j] > obj[e]) {
                    e = j;
                }
            }
            if (e < 0) return LpStatus::Optimal;
            int r = -1;
            BigRat best;
            for (int i = 0; i < m; ++i) {
                if (a[i][e] <= 0) continue;
                BigRat ratio = a[i][n] / a[i][e];
                if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r])) {
                    r = i;
                    best = ratio;
                }
            }
            if (r < 0) return LpStatus::Unbounded;
            degenerate_run = best == 0 ? degenerate_run + 1 : 0;
            pivot(r, e);
            ++pivots;
        }
    }

    int m, n;
    std::vector<std::vector<BigRat>> a;
    std::vector<BigRat> obj;
    std::vector<int> basis;
};

}  // namespace

LpSolution solve(const LinearProgram& lp, const SolveOptions& opt) {
    lp.validate();
    const int nv = lp.num_vars();

    // Structural columns.
    std::vector<VarMap> vars(nv);
    int ns = 0;
    for (int j = 0; j < nv; ++j) {
        if (lp.lower[j]) {
            vars[j] = {VarMap::Shifted, ns++, *lp.lower[j]};
        } else if (lp.upper[j]) {
            vars[j] = {VarMap::Reflected, ns++, *lp.upper[j]};
        } else {
            vars[j] = {VarMap::Split, ns, 0};
            ns += 2;
        }
    }

    // Rows over structural columns.
    struct Row {
        std::vector<BigRat> c;
        Relation rel;
        BigRat b;
        int sign;
    };
    std::vector<Row> rows;
    auto push_row = [&](const std::vector<BigRat>& coeffs, Relation rel, BigRat b) {
        Row row{std::vector<BigRat>(ns), rel, std::move(b), 1};
        for (int j = 0; j < nv; ++j) {
            const BigRat& v = coeffs[j];
            if (v == 0) continue;
            const auto& vm = vars[j];
            switch (vm.kind) {
                case VarMap::Shifted:
                    row.c[vm.col] += v;
                    row.b -= v * vm.offset;
                    break;
                case VarMap::Reflected:
                    row.c[vm.col] -= v;
                    row.b -= v * vm.offset;
                    break;
                case VarMap::Split:
                    row.c[vm.col] += v;
                    row.c[vm.col + 1] -= v;
                    break;
            }
        }
        if (row.b < 0) {
            for (auto& x : row.c) x = -x;
            row.b = -row.b;
            row.sign = -1;
            if (row.rel == Relation::LessEqual) row.rel = Relation::GreaterEqual;
            else if (row.rel == Relation::GreaterEqual) row.rel = Relation::LessEqual;
        }
        rows.push_back(std::move(row));
    };
    for (const auto& c : lp.constraints) push_row(c.coeffs, c.rel, c.rhs);
    const int n_user_rows = int(rows.size());
    for (int j = 0; j < nv; ++j) {
        if (vars[j].kind == VarMap::Shifted && lp.upper[j]) {
            std::vector<BigRat> e(nv);
            e[j] = 1;
            push_row(e, Relation::LessEqual, *lp.upper[j]);
        }
    }
    const int m = int(rows.size());

    // Column layout: structural | slack/surplus | artificial.
    std::vector<int> slack_col(m, -1), art_col(m, -1), unit_col(m, -1);
    int nc = ns;
    for (int i = 0; i < m; ++i)
        if (rows[i].rel != Relation::Equal) slack_col[i] = nc++;
    const int first_art = nc;
    for (int i = 0; i < m; ++i)
        if (rows[i].rel != Relation::LessEqual) art_col[i] = nc++;

    Tableau T(m, nc);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < ns; ++j) T.a[i][j] = rows[i].c[j];
        if (slack_col[i] >= 0) T.a[i][slack_col[i]] = rows[i].rel == Relation::LessEqual ? 1 : -1;
        if (art_col[i] >= 0) T.a[i][art_col[i]] = 1;
        T.rhs(i) = rows[i].b;
        unit_col[i] = art_col[i] >= 0 ? art_col[i] : slack_col[i];
        T.basis[i] = unit_col[i];
    }

    LpSolution sol;
    std::vector<bool> enterable(nc, true);

    // Phase 1: maximize -sum(artificials).
    if (first_art < nc) {
        std::vector<BigRat> c1(nc);
        for (int j = first_art; j < nc; ++j) c1[j] = -1;
        T.price(c1);
        T.optimize(enterable, opt, sol.pivots);
        if (T.obj[nc] != 0) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        // Drive zero-level artificials out of the basis where possible.
        for (int i = 0; i < m; ++i) {
            if (T.basis[i] < first_art) continue;
            for (int j = 0; j < first_art; ++j)
                if (T.a[i][j] != 0) {
                    T.pivot(i, j);
                    ++sol.pivots;
                    break;
                }
        }
        for (int j = first_art; j < nc; ++j) enterable[j] = false;
    }

    // Phase 2.
    std::vector<BigRat> c2(nc);
    const bool maximize = lp.sense == Sense::Maximize;
    for (int j = 0; j < nv; ++j) {
        BigRat c = maximize ? lp.objective[j] : BigRat(-lp.objective[j]);
        const auto& vm = vars[j];
        if (vm.kind == VarMap::Reflected) {
            c2[vm.col] = -c;
        } else {
            c2[vm.col] = c;
            if (vm.kind == VarMap::Split) c2[vm.col + 1] = -c;
        }
    }
    T.price(c2);
    if (T.optimize(enterable, opt, sol.pivots) == LpStatus::Unbounded) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }
    sol.status = LpStatus::Optimal;

    std::vector<BigRat> xs(nc);
    for (int i = 0; i < m; ++i) xs[T.basis[i]] = T.rhs(i);
    sol.primal.assign(nv, BigRat(0));
    for (int j = 0; j < nv; ++j) {
        const auto& vm = vars[j];
        switch (vm.kind) {
            case VarMap::Shifted: sol.primal[j] = vm.offset + xs[vm.col]; break;
            case VarMap::Reflected: sol.primal[j] = vm.offset - xs[vm.col]; break;
            case VarMap::Split: sol.primal[j] = xs[vm.col] - xs[vm.col + 1]; break;
        }
    }
    sol.objective_value = 0;
    for (int j = 0; j < nv; ++j) sol.objective_value += lp.objective[j] * sol.primal[j];

    // y_i = -(reduced cost of the row's initial unit column).
    sol.dual.assign(lp.constraints.size(), BigRat(0));
    for (int i = 0; i < n_user_rows; ++i) {
        BigRat y = -T.obj[unit_col[i]] * rows[i].sign;
        sol.dual[i] = maximize ? y : BigRat(-y);
    }
    sol.reduced_costs = lp.objective;
    for (size_t i = 0; i < lp.constraints.size(); ++i) {
        if (sol.dual[i] == 0) continue;
        for (int j = 0; j < nv; ++j) sol.reduced_costs[j] -= lp.constraints[i].coeffs[j] * sol.dual[i];
    }
    return sol;
}

std::optional<BigRat> dual_bound(const LinearProgram& lp, const std::vector<BigRat>& y) {
    const bool maximize = lp.sense == Sense::Maximize;
    if (y.size() != lp.constraints.size()) return std::nullopt;
    BigRat D = 0;
    std::vector<BigRat> r = lp.objective;
    for (size_t i = 0; i < y.size(); ++i) {
        const auto& c = lp.constraints[i];
        // Sign of y_i under the maximization convention.
        BigRat ys = maximize ? y[i] : BigRat(-y[i]);
        if (c.rel == Relation::LessEqual && ys < 0) return std::nullopt;
        if (c.rel == Relation::GreaterEqual && ys > 0) return std::nullopt;
        D += c.rhs * y[i];
        if (y[i] == 0) continue;
        for (int j = 0; j < lp.num_vars(); ++j) r[j] -= c.coeffs[j] * y[i];
    }
    for (int j = 0; j < lp.num_vars(); ++j) {
        if (r[j] == 0) continue;
        // The bound that the objective pushes x_j against.
        bool toward_upper = (r[j] > 0) == maximize;
        const auto& b = toward_upper ? lp.upper[j] : lp.lower[j];
        if (!b) return std::nullopt;
        D += r[j] * *b;
    }
    return D;
}

LpCheck verify(const LinearProgram& lp, const LpSolution& sol) {
    LpCheck chk;
    if (sol.status != LpStatus::Optimal) return chk;
    const int nv = lp.num_vars();
    const auto& x = sol.primal;

    chk.primal_feasible = int(x.size()) == nv;
    for (int j = 0; j < nv && chk.primal_feasible; ++j) {
        if (lp.lower[j] && x[j] < *lp.lower[j]) chk.primal_feasible = false;
        if (lp.upper[j] && x[j] > *lp.upper[j]) chk.primal_feasible = false;
    }
    std::vector<BigRat> slack(lp.constraints.size());
    for (size_t i = 0; i < lp.constraints.size() && chk.primal_feasible; ++i) {
        const auto& c = lp.constraints[i];
        BigRat ax = 0;
        for (int j = 0; j < nv; ++j) ax += c.coeffs[j] * x[j];
        slack[i] = ax - c.rhs;
        if (c.rel == Relation::LessEqual && slack[i] > 0) chk.primal_feasible = false;
        if (c.rel == Relation::GreaterEqual && slack[i] < 0) chk.primal_feasible = false;
        if (c.rel == Relation::Equal && slack[i] != 0) chk.primal_feasible = false;
    }

    auto D = dual_bound(lp, sol.dual);
    chk.dual_feasible = D.has_value();
    if (!chk.primal_feasible || !chk.dual_feasible) return chk;
    chk.dual_objective = *D;

    BigRat cx = 0;
    for (int j = 0; j < nv; ++j) cx += lp.objective[j] * x[j];
    chk.strong_duality = cx == *D && cx == sol.objective_value;

    chk.complementary = true;
    for (size_t i = 0; i < slack.size(); ++i)
        if (sol.dual[i] != 0 && slack[i] != 0) chk.complementary = false;
    const bool maximize = lp.sense == Sense::Maximize;
    std::vector<BigRat> rc = lp.objective;
    for (size_t i = 0; i < lp.constraints.size(); ++i)
        if (sol.dual[i] != 0)
            for (int j = 0; j < nv; ++j) rc[j] -= lp.constraints[i].coeffs[j] * sol.dual[i];
    for (int j = 0; j < nv; ++j) {
        const BigRat& r = rc[j];
        if (r == 0) continue;
        bool toward_upper = (r > 0) == maximize;
        const auto& b = toward_upper ? lp.upper[j] : lp.lower[j];
        if (!b || x[j] != *b) chk.complementary = false;
    }
    return chk;
}

}  // namespace srkb
