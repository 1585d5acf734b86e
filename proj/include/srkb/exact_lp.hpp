#pragma once

#include "srkb/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace srkb {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
    std::vector<BigRat> coeffs;
    Relation rel = Relation::LessEqual;
    BigRat rhs = 0;
};

// Variables default to x_j >= 0. lower[j] = nullopt makes x_j free below;
// upper[j] adds x_j <= u_j.
struct LinearProgram {
    Sense sense = Sense::Maximize;
    std::vector<BigRat> objective;
    std::vector<LinearConstraint> constraints;
    std::vector<std::optional<BigRat>> lower;
    std::vector<std::optional<BigRat>> upper;

    explicit LinearProgram(int num_vars = 0, Sense s = Sense::Maximize);
    int num_vars() const { return int(objective.size()); }
    void add(std::vector<BigRat> coeffs, Relation rel, BigRat rhs);
    void set_free(int j) { lower[j].reset(); }
    // Throws std::invalid_argument on ragged rows or inconsistent bounds.
    void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };
std::string to_string(LpStatus s);

enum class PivotRule {
    Bland,
    // Largest reduced cost, falling back to Bland after a run of degenerate pivots.
    Dantzig,
};

// Duals follow the Lagrangian of the given sense: objective = b.y + bound terms,
// reduced costs r = c - A^T y. For a maximization, y_i >= 0 on <= rows and
// y_i <= 0 on >= rows; signs flip for a minimization.
struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<BigRat> primal;
    std::vector<BigRat> dual;
    std::vector<BigRat> reduced_costs;
    BigRat objective_value = 0;
    long pivots = 0;
};

struct SolveOptions {
    PivotRule rule = PivotRule::Dantzig;
    // Consecutive degenerate pivots tolerated before switching to Bland.
    int degenerate_limit = 50;
};

LpSolution solve(const LinearProgram& lp, const SolveOptions& opt = {});

struct LpCheck {
    bool primal_feasible = false;
    bool dual_feasible = false;
    bool strong_duality = false;
    bool complementary = false;
    BigRat dual_objective = 0;
    bool ok() const { return primal_feasible && dual_feasible && strong_duality && complementary; }
};

// Exact re-verification of an Optimal solution against the original data.
LpCheck verify(const LinearProgram& lp, const LpSolution& sol);

// Upper bound (maximization) or lower bound (minimization) implied by dual
// multipliers alone; nullopt if y is not dual feasible.
std::optional<BigRat> dual_bound(const LinearProgram& lp, const std::vector<BigRat>& y);

}  // namespace srkb
