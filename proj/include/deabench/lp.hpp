#ifndef DEABENCH_LP_HPP
#define DEABENCH_LP_HPP

#include <limits>
#include <vector>

namespace deabench::lp {

enum class Sense { maximize, minimize };
enum class Relation { less_equal, greater_equal, equal };
enum class Status { optimal, infeasible, unbounded };

constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Feasibility tolerance: constraints hold within kFeasTol * (1 + |rhs|).
constexpr double kFeasTol = 1e-9;
/// Optimality tolerance on reduced costs.
constexpr double kOptTol = 1e-9;

struct Constraint {
    std::vector<double> coefficients;
    Relation relation = Relation::less_equal;
    double rhs = 0.0;
};

struct Bounds {
    double lower = 0.0;
    double upper = kInfinity;
};

/// Dense LP in natural form. Variable bounds default to [0, +inf);
/// lower = -kInfinity makes a variable free.
struct LpProblem {
    Sense sense = Sense::maximize;
    std::vector<double> objective;
    std::vector<Constraint> constraints;
    std::vector<Bounds> bounds; // empty = all default

    std::size_t variable_count() const { return objective.size(); }
};

struct LpSolution {
    Status status = Status::infeasible;
    double objective_value = 0.0;
    std::vector<double> variable_values;
};

/// Primal simplex, two-phase, dense tableau. Dantzig pricing with Bland's
/// rule engaged after a fixed iteration budget; ties broken by lowest index,
/// so identical inputs give identical results. Throws validation_error on
/// dimension mismatches or inverted bounds.
LpSolution solve(const LpProblem &problem);

} // namespace deabench::lp

#endif
