#include "deabench/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "deabench/errors.hpp"

namespace deabench::lp {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr std::size_t kIterationCap = 200000;

// How each original variable maps onto nonnegative standard-form columns.
struct VarMap {
    enum class Kind { shifted, flipped, split } kind = Kind::shifted;
    std::size_t col = 0;     // primary column
    std::size_t neg_col = 0; // second column of a split pair
    double offset = 0.0;     // lo (shifted) or up (flipped)
};

struct Standardized {
    std::size_t n_struct = 0;            // structural columns (post substitution)
    std::vector<std::vector<double>> a;  // m x n_struct
    std::vector<Relation> relations;
    std::vector<double> rhs;
    std::vector<double> cost;            // minimize form, n_struct
    std::vector<VarMap> var_map;
    double cost_offset = 0.0;            // constant term from substitutions
};

void validate(const LpProblem &p) {
    const std::size_t n = p.variable_count();
    if (n == 0) throw validation_error("LP has no variables");
    if (!p.bounds.empty() && p.bounds.size() != n)
        throw validation_error("bounds size " + std::to_string(p.bounds.size()) +
                               " != variable count " + std::to_string(n));
    for (std::size_t i = 0; i < p.constraints.size(); ++i) {
        if (p.constraints[i].coefficients.size() != n)
            throw validation_error("constraint " + std::to_string(i) + " has " +
                                   std::to_string(p.constraints[i].coefficients.size()) +
                                   " coefficients, expected " + std::to_string(n));
        if (!std::isfinite(p.constraints[i].rhs))
            throw validation_error("constraint " + std::to_string(i) + " has non-finite rhs");
    }
    if (!p.bounds.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            if (p.bounds[i].lower > p.bounds[i].upper)
                throw validation_error("variable " + std::to_string(i) + " has lower > upper");
        }
    }
}

Bounds bounds_of(const LpProblem &p, std::size_t i) {
    return p.bounds.empty() ? Bounds{} : p.bounds[i];
}

// Substitute variables so every standard-form column is >= 0, turn finite
// upper bounds into rows, and express the objective as a minimization.
Standardized standardize(const LpProblem &p) {
    const std::size_t n = p.variable_count();
    Standardized s;
    s.var_map.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        Bounds b = bounds_of(p, i);
        VarMap &vm = s.var_map[i];
        if (b.lower > -kInfinity) {
            vm.kind = VarMap::Kind::shifted;
            vm.col = s.n_struct++;
            vm.offset = b.lower;
        } else if (b.upper < kInfinity) {
            vm.kind = VarMap::Kind::flipped;
            vm.col = s.n_struct++;
            vm.offset = b.upper;
        } else {
            vm.kind = VarMap::Kind::split;
            vm.col = s.n_struct++;
            vm.neg_col = s.n_struct++;
        }
    }

    const double sign = (p.sense == Sense::maximize) ? -1.0 : 1.0;
    s.cost.assign(s.n_struct, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const VarMap &vm = s.var_map[i];
        const double c = sign * p.objective[i];
        switch (vm.kind) {
        case VarMap::Kind::shifted:
            s.cost[vm.col] += c;
            s.cost_offset += c * vm.offset;
            break;
        case VarMap::Kind::flipped:
            s.cost[vm.col] -= c;
            s.cost_offset += c * vm.offset;
            break;
        case VarMap::Kind::split:
            s.cost[vm.col] += c;
            s.cost[vm.neg_col] -= c;
            break;
        }
    }

    auto add_row = [&s](const std::vector<double> &coeffs, Relation rel, double rhs,
                        const std::vector<VarMap> &vmap) {
        std::vector<double> row(s.n_struct, 0.0);
        double b = rhs;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const VarMap &vm = vmap[i];
            const double c = coeffs[i];
            if (c == 0.0) continue;
            switch (vm.kind) {
            case VarMap::Kind::shifted:
                row[vm.col] += c;
                b -= c * vm.offset;
                break;
            case VarMap::Kind::flipped:
                row[vm.col] -= c;
                b -= c * vm.offset;
                break;
            case VarMap::Kind::split:
                row[vm.col] += c;
                row[vm.neg_col] -= c;
                break;
            }
        }
        s.a.push_back(std::move(row));
        s.relations.push_back(rel);
        s.rhs.push_back(b);
    };

    for (const auto &con : p.constraints)
        add_row(con.coefficients, con.relation, con.rhs, s.var_map);

    // Finite upper bounds of lower-bounded variables become rows.
    for (std::size_t i = 0; i < n; ++i) {
        Bounds b = bounds_of(p, i);
        if (b.lower > -kInfinity && b.upper < kInfinity) {
            std::vector<double> coeffs(n, 0.0);
            coeffs[i] = 1.0;
            add_row(coeffs, Relation::less_equal, b.upper, s.var_map);
        }
    }

    // Normalize to nonnegative rhs.
    for (std::size_t r = 0; r < s.a.size(); ++r) {
        if (s.rhs[r] < 0.0) {
            for (auto &v : s.a[r]) v = -v;
            s.rhs[r] = -s.rhs[r];
            if (s.relations[r] == Relation::less_equal)
                s.relations[r] = Relation::greater_equal;
            else if (s.relations[r] == Relation::greater_equal)
                s.relations[r] = Relation::less_equal;
        }
    }
    return s;
}

// Dense tableau: rows 0..m-1 are constraints, row m is the reduced-cost row.
// Column layout: structural | slack/surplus | artificial | rhs.
struct Tableau {
    std::size_t m = 0;
    std::size_t n = 0; // columns excluding rhs
    std::vector<std::vector<double>> t;
    std::vector<std::size_t> basis;

    double &at(std::size_t r, std::size_t c) { return t[r][c]; }
    double rhs(std::size_t r) const { return t[r][n]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const double pv = t[pr][pc];
        for (std::size_t c = 0; c <= n; ++c) t[pr][c] /= pv;
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == pr) continue;
            const double f = t[r][pc];
            if (f == 0.0) continue;
            for (std::size_t c = 0; c <= n; ++c) t[r][c] -= f * t[pr][c];
            t[r][pc] = 0.0;
        }
        basis[pr] = pc;
    }
};

enum class IterResult { optimal, unbounded };

// Runs the simplex loop on the current tableau. `allowed` marks columns the
// pricing step may enter (artificials are frozen out in phase 2).
IterResult iterate(Tableau &tb, const std::vector<bool> &allowed, std::size_t &iterations,
                   std::size_t bland_after) {
    for (;;) {
        if (++iterations > kIterationCap)
            throw internal_error("simplex iteration cap exceeded");
        const bool bland = iterations > bland_after;

        std::size_t enter = tb.n;
        double best = -kOptTol;
        for (std::size_t c = 0; c < tb.n; ++c) {
            if (!allowed[c]) continue;
            const double d = tb.t[tb.m][c];
            if (d < -kOptTol) {
                if (bland) {
                    enter = c;
                    break;
                }
                if (d < best) {
                    best = d;
                    enter = c;
                }
            }
        }
        if (enter == tb.n) return IterResult::optimal;

        std::size_t leave = tb.m;
        double best_ratio = 0.0;
        for (std::size_t r = 0; r < tb.m; ++r) {
            const double a = tb.t[r][enter];
            if (a > kPivotTol) {
                const double ratio = tb.rhs(r) / a;
                if (leave == tb.m || ratio < best_ratio - kPivotTol ||
                    (ratio < best_ratio + kPivotTol && tb.basis[r] < tb.basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
        }
        if (leave == tb.m) return IterResult::unbounded;
        tb.pivot(leave, enter);
    }
}

} // namespace

LpSolution solve(const LpProblem &problem) {
    validate(problem);
    Standardized s = standardize(problem);

    const std::size_t m = s.a.size();
    std::size_t n_slack = 0, n_art = 0;
    for (Relation rel : s.relations) {
        if (rel != Relation::equal) ++n_slack;
        if (rel != Relation::less_equal) ++n_art;
    }

    Tableau tb;
    tb.m = m;
    tb.n = s.n_struct + n_slack + n_art;
    tb.t.assign(m + 1, std::vector<double>(tb.n + 1, 0.0));
    tb.basis.assign(m, 0);

    const std::size_t slack0 = s.n_struct;
    const std::size_t art0 = s.n_struct + n_slack;
    std::size_t next_slack = slack0, next_art = art0;

    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < s.n_struct; ++c) tb.t[r][c] = s.a[r][c];
        tb.t[r][tb.n] = s.rhs[r];
        switch (s.relations[r]) {
        case Relation::less_equal:
            tb.t[r][next_slack] = 1.0;
            tb.basis[r] = next_slack++;
            break;
        case Relation::greater_equal:
            tb.t[r][next_slack] = -1.0;
            ++next_slack;
            tb.t[r][next_art] = 1.0;
            tb.basis[r] = next_art++;
            break;
        case Relation::equal:
            tb.t[r][next_art] = 1.0;
            tb.basis[r] = next_art++;
            break;
        }
    }

    std::size_t iterations = 0;
    const std::size_t bland_after = 200 + 20 * (m + tb.n);
    std::vector<bool> allowed(tb.n, true);

    // Phase 1: drive artificial mass to zero.
    if (n_art > 0) {
        for (std::size_t r = 0; r < m; ++r) {
            if (tb.basis[r] >= art0) {
                for (std::size_t c = 0; c <= tb.n; ++c) tb.t[m][c] -= tb.t[r][c];
            }
        }
        // Reduced-cost row currently holds -(sum of artificial rows); the
        // artificial columns themselves must price at zero.
        for (std::size_t c = art0; c < tb.n; ++c) tb.t[m][c] = 0.0;

        IterResult res = iterate(tb, allowed, iterations, bland_after);
        (void)res; // phase 1 is always bounded below by 0
        double art_mass = -tb.t[m][tb.n];
        if (art_mass > kFeasTol * (1.0 + std::abs(art_mass))) {
            LpSolution sol;
            sol.status = Status::infeasible;
            return sol;
        }
        // Pivot residual artificials out of the basis where possible.
        for (std::size_t r = 0; r < m; ++r) {
            if (tb.basis[r] < art0) continue;
            std::size_t pc = tb.n;
            for (std::size_t c = 0; c < art0; ++c) {
                if (std::abs(tb.t[r][c]) > kPivotTol) {
                    pc = c;
                    break;
                }
            }
            if (pc != tb.n) tb.pivot(r, pc);
            // Otherwise the row is redundant; its artificial stays basic at
            // zero and the frozen column keeps it there.
        }
        for (std::size_t c = art0; c < tb.n; ++c) allowed[c] = false;
    }

    // Phase 2: install the real costs and re-price.
    for (std::size_t c = 0; c <= tb.n; ++c) tb.t[m][c] = 0.0;
    for (std::size_t c = 0; c < s.n_struct; ++c) tb.t[m][c] = s.cost[c];
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t b = tb.basis[r];
        const double cb = (b < s.n_struct) ? s.cost[b] : 0.0;
        if (cb == 0.0) continue;
        for (std::size_t c = 0; c <= tb.n; ++c) tb.t[m][c] -= cb * tb.t[r][c];
    }

    LpSolution sol;
    if (iterate(tb, allowed, iterations, bland_after) == IterResult::unbounded) {
        sol.status = Status::unbounded;
        return sol;
    }

    std::vector<double> x_std(s.n_struct, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        if (tb.basis[r] < s.n_struct) x_std[tb.basis[r]] = tb.rhs(r);
    }

    sol.status = Status::optimal;
    sol.variable_values.resize(problem.variable_count());
    for (std::size_t i = 0; i < problem.variable_count(); ++i) {
        const VarMap &vm = s.var_map[i];
        switch (vm.kind) {
        case VarMap::Kind::shifted:
            sol.variable_values[i] = vm.offset + x_std[vm.col];
            break;
        case VarMap::Kind::flipped:
            sol.variable_values[i] = vm.offset - x_std[vm.col];
            break;
        case VarMap::Kind::split:
            sol.variable_values[i] = x_std[vm.col] - x_std[vm.neg_col];
            break;
        }
    }
    double obj = 0.0;
    for (std::size_t i = 0; i < problem.variable_count(); ++i)
        obj += problem.objective[i] * sol.variable_values[i];
    sol.objective_value = obj;
    return sol;
}

} // namespace deabench::lp
