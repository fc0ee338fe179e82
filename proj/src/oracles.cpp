#include "deabench/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "deabench/errors.hpp"

namespace deabench::oracles {

namespace {

constexpr double kTol = 1e-7;

// Solves a dense square system by Gaussian elimination with partial pivoting.
std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> a,
                                                std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) < 1e-11) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

struct Row {
    std::vector<double> coeffs;
    lp::Relation rel;
    double rhs;
    bool forced; // equality rows sit in every active set
};

} // namespace

double enumerate_vertices_best(const lp::LpProblem &problem) {
    const std::size_t n = problem.variable_count();
    if (n > 12 || problem.constraints.size() > 20)
        throw validation_error("vertex oracle guard: needs <= 12 variables, <= 20 constraints");

    std::vector<Row> rows;
    for (const auto &con : problem.constraints)
        rows.push_back({con.coefficients, con.relation, con.rhs, con.relation == lp::Relation::equal});
    for (std::size_t i = 0; i < n; ++i) {
        lp::Bounds b = problem.bounds.empty() ? lp::Bounds{} : problem.bounds[i];
        std::vector<double> unit(n, 0.0);
        unit[i] = 1.0;
        if (b.lower > -lp::kInfinity)
            rows.push_back({unit, lp::Relation::greater_equal, b.lower, false});
        if (b.upper < lp::kInfinity)
            rows.push_back({unit, lp::Relation::less_equal, b.upper, false});
    }

    std::vector<std::size_t> forced, optional_rows;
    for (std::size_t i = 0; i < rows.size(); ++i)
        (rows[i].forced ? forced : optional_rows).push_back(i);
    if (forced.size() > n) throw validation_error("vertex oracle: more equalities than variables");
    const std::size_t pick = n - forced.size();

    const bool maximizing = problem.sense == lp::Sense::maximize;
    double best = maximizing ? -std::numeric_limits<double>::infinity()
                             : std::numeric_limits<double>::infinity();
    bool found = false;
    std::size_t combos = 0;

    std::vector<std::size_t> chosen(pick);
    auto try_active_set = [&](const std::vector<std::size_t> &extra) {
        if (++combos > 5'000'000)
            throw validation_error("vertex oracle guard: combination budget exceeded");
        std::vector<std::vector<double>> a;
        std::vector<double> b;
        for (std::size_t idx : forced) {
            a.push_back(rows[idx].coeffs);
            b.push_back(rows[idx].rhs);
        }
        for (std::size_t idx : extra) {
            a.push_back(rows[idx].coeffs);
            b.push_back(rows[idx].rhs);
        }
        auto x = solve_square(std::move(a), std::move(b));
        if (!x) return;
        for (const auto &row : rows) {
            double lhs = 0.0;
            for (std::size_t i = 0; i < n; ++i) lhs += row.coeffs[i] * (*x)[i];
            const double slack = lhs - row.rhs;
            const double tol = kTol * (1.0 + std::abs(row.rhs));
            if (row.rel == lp::Relation::less_equal && slack > tol) return;
            if (row.rel == lp::Relation::greater_equal && slack < -tol) return;
            if (row.rel == lp::Relation::equal && std::abs(slack) > tol) return;
        }
        double obj = 0.0;
        for (std::size_t i = 0; i < n; ++i) obj += problem.objective[i] * (*x)[i];
        best = maximizing ? std::max(best, obj) : std::min(best, obj);
        found = true;
    };

    // Enumerate all `pick`-subsets of the optional rows.
    auto recurse = [&](auto &&self, std::size_t start, std::size_t depth) -> void {
        if (depth == pick) {
            try_active_set(chosen);
            return;
        }
        for (std::size_t i = start; i + (pick - depth - 1) < optional_rows.size(); ++i) {
            chosen[depth] = optional_rows[i];
            self(self, i + 1, depth + 1);
        }
    };
    recurse(recurse, 0, 0);

    if (!found) throw validation_error("vertex oracle: no feasible vertex");
    return best;
}

double bod_grid(const dea::DmuSet &set, const std::string &dmu_id, double step) {
    const std::size_t r = set.indicator_count();
    if (r > 4) throw validation_error("grid oracle guard: needs <= 4 indicators");
    if (!(step > 0.0) || step > 1.0) throw validation_error("grid oracle: bad step");
    const std::size_t o = set.index_of(dmu_id);
    const std::size_t n = set.dmu_count();

    // delta[j][k] = z_ok - z_jk
    std::vector<std::vector<double>> delta(n, std::vector<double>(r));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < r; ++k)
            delta[j][k] = std::log(set.values[o][k]) - std::log(set.values[j][k]);

    const long steps = std::lround(1.0 / step);
    double best_t = -std::numeric_limits<double>::infinity();
    std::vector<double> w(r, 0.0);

    auto evaluate = [&]() {
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < r; ++k) dot += w[k] * delta[j][k];
            worst = std::min(worst, dot);
            if (worst < best_t) return; // cannot beat the incumbent
        }
        best_t = std::max(best_t, worst);
    };

    auto recurse = [&](auto &&self, std::size_t k, long remaining) -> void {
        if (k + 1 == r) {
            w[k] = static_cast<double>(remaining) * step;
            evaluate();
            return;
        }
        for (long i = 0; i <= remaining; ++i) {
            w[k] = static_cast<double>(i) * step;
            self(self, k + 1, remaining - i);
        }
    };
    recurse(recurse, 0, steps);
    return std::exp(best_t);
}

namespace {

struct ThetaTracker {
    double best = std::numeric_limits<double>::infinity();
    void offer(double cost, double x_o) {
        if (cost >= 0.0) best = std::min(best, cost / x_o);
    }
};

} // namespace

double envelopment_facets(const std::vector<double> &inputs,
                          const std::vector<std::vector<double>> &outputs,
                          std::size_t dmu_index, dea::RtsMode rts) {
    const std::size_t n = inputs.size();
    if (n == 0 || n > 25) throw validation_error("facet oracle guard: needs 1..25 DMUs");
    const std::size_t r = outputs.at(0).size();
    if (r == 0 || r > 2) throw validation_error("facet oracle guard: needs 1..2 outputs");
    if (dmu_index >= n) throw validation_error("facet oracle: dmu_index out of range");

    const double x_o = inputs[dmu_index];
    const std::vector<double> &y_o = outputs[dmu_index];
    ThetaTracker theta;

    auto covers = [&](const std::vector<double> &y) {
        for (std::size_t k = 0; k < r; ++k)
            if (y[k] < y_o[k] * (1.0 - 1e-12) - 1e-12) return false;
        return true;
    };

    if (rts == dea::RtsMode::CRS) {
        // Singletons: scale one peer up to the most demanding output.
        for (std::size_t j = 0; j < n; ++j) {
            double lam = 0.0;
            bool ok = true;
            for (std::size_t k = 0; k < r; ++k) {
                if (y_o[k] <= 0.0) continue;
                if (outputs[j][k] <= 0.0) {
                    ok = false;
                    break;
                }
                lam = std::max(lam, y_o[k] / outputs[j][k]);
            }
            if (ok) theta.offer(lam * inputs[j], x_o);
        }
        // Pairs with both outputs binding.
        if (r == 2) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = j + 1; k < n; ++k) {
                    const double det =
                        outputs[j][0] * outputs[k][1] - outputs[k][0] * outputs[j][1];
                    if (std::abs(det) < 1e-12) continue;
                    const double lj = (y_o[0] * outputs[k][1] - y_o[1] * outputs[k][0]) / det;
                    const double lk = (y_o[1] * outputs[j][0] - y_o[0] * outputs[j][1]) / det;
                    if (lj < -1e-12 || lk < -1e-12) continue;
                    theta.offer(std::max(lj, 0.0) * inputs[j] + std::max(lk, 0.0) * inputs[k],
                                x_o);
                }
            }
        }
    } else {
        // VRS: lambda lives on the unit simplex.
        for (std::size_t j = 0; j < n; ++j)
            if (covers(outputs[j])) theta.offer(inputs[j], x_o);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                // One output binding, the convexity row fixing the mix.
                for (std::size_t bind = 0; bind < r; ++bind) {
                    const double den = outputs[j][bind] - outputs[k][bind];
                    if (std::abs(den) < 1e-12) continue;
                    const double lj = (y_o[bind] - outputs[k][bind]) / den;
                    if (lj < -1e-12 || lj > 1.0 + 1e-12) continue;
                    const double lk = 1.0 - lj;
                    std::vector<double> mix(r);
                    for (std::size_t t = 0; t < r; ++t)
                        mix[t] = lj * outputs[j][t] + lk * outputs[k][t];
                    if (covers(mix)) theta.offer(lj * inputs[j] + lk * inputs[k], x_o);
                }
            }
        }
        if (r == 2) {
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = a + 1; b < n; ++b) {
                    for (std::size_t c = b + 1; c < n; ++c) {
                        auto sol = solve_square(
                            {{outputs[a][0], outputs[b][0], outputs[c][0]},
                             {outputs[a][1], outputs[b][1], outputs[c][1]},
                             {1.0, 1.0, 1.0}},
                            {y_o[0], y_o[1], 1.0});
                        if (!sol) continue;
                        const auto &l = *sol;
                        if (l[0] < -1e-12 || l[1] < -1e-12 || l[2] < -1e-12) continue;
                        theta.offer(std::max(l[0], 0.0) * inputs[a] +
                                        std::max(l[1], 0.0) * inputs[b] +
                                        std::max(l[2], 0.0) * inputs[c],
                                    x_o);
                    }
                }
            }
        }
    }

    if (!std::isfinite(theta.best))
        throw validation_error("facet oracle: no feasible candidate set");
    return theta.best;
}

} // namespace deabench::oracles
