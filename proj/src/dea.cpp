#include "deabench/dea.hpp"

#include <algorithm>
#include <cmath>

#include "deabench/errors.hpp"
#include "deabench/lp.hpp"

namespace deabench::dea {

std::size_t DmuSet::index_of(const std::string &dmu_id) const {
    auto it = std::find(dmu_ids.begin(), dmu_ids.end(), dmu_id);
    if (it == dmu_ids.end()) throw validation_error("DMU '" + dmu_id + "' not in set");
    return static_cast<std::size_t>(it - dmu_ids.begin());
}

std::vector<std::size_t> EnvelopmentScore::peer_indices() const {
    std::vector<std::size_t> peers;
    for (std::size_t j = 0; j < lambdas.size(); ++j)
        if (lambdas[j] > 1e-9) peers.push_back(j);
    return peers;
}

namespace {

void check_set(const DmuSet &set) {
    if (set.dmu_count() == 0 || set.indicator_count() == 0)
        throw validation_error("DmuSet needs at least one DMU and one indicator");
    for (std::size_t j = 0; j < set.dmu_count(); ++j) {
        if (set.values[j].size() != set.indicator_count())
            throw validation_error("DmuSet matrix is not rectangular at DMU " +
                                   set.dmu_ids[j]);
        for (double v : set.values[j]) {
            if (!(v > 0.0))
                throw validation_error("non-positive value reached dea_engine for DMU '" +
                                       set.dmu_ids[j] + "' (flooring is upstream's job)");
        }
    }
}

} // namespace

BodScore bod_multiplicative(const DmuSet &set, const std::string &dmu_id, double weight_floor) {
    check_set(set);
    const std::size_t n = set.dmu_count();
    const std::size_t r = set.indicator_count();
    const std::size_t o = set.index_of(dmu_id);
    if (weight_floor < 0.0 || weight_floor >= 1.0 / static_cast<double>(r))
        throw validation_error("weight_floor must lie in [0, 1/indicator_count)");

    // Variables: t (free), w_1..w_r (>= floor).
    lp::LpProblem p;
    p.sense = lp::Sense::maximize;
    p.objective.assign(r + 1, 0.0);
    p.objective[0] = 1.0;
    p.bounds.assign(r + 1, lp::Bounds{weight_floor, lp::kInfinity});
    p.bounds[0] = {-lp::kInfinity, lp::kInfinity};

    for (std::size_t j = 0; j < n; ++j) {
        lp::Constraint con;
        con.coefficients.assign(r + 1, 0.0);
        con.coefficients[0] = 1.0;
        for (std::size_t k = 0; k < r; ++k)
            con.coefficients[k + 1] = -(std::log(set.values[o][k]) - std::log(set.values[j][k]));
        con.relation = lp::Relation::less_equal;
        con.rhs = 0.0;
        p.constraints.push_back(std::move(con));
    }
    lp::Constraint sum1;
    sum1.coefficients.assign(r + 1, 0.0);
    for (std::size_t k = 0; k < r; ++k) sum1.coefficients[k + 1] = 1.0;
    sum1.relation = lp::Relation::equal;
    sum1.rhs = 1.0;
    p.constraints.push_back(std::move(sum1));

    lp::LpSolution sol = lp::solve(p);
    if (sol.status != lp::Status::optimal)
        throw internal_error("BoD LP must be feasible and bounded (t <= 0 via j = o)");

    BodScore out;
    out.dmu_id = dmu_id;
    // t* <= 0 always (the j = o constraint); clamp rounding noise so the
    // frontier scores exactly 1.
    double t = std::min(sol.objective_value, 0.0);
    if (t > -1e-9) t = 0.0;
    out.score = std::exp(t);
    out.optimal_weights.assign(sol.variable_values.begin() + 1, sol.variable_values.end());
    return out;
}

EnvelopmentScore envelopment_input_oriented(const std::vector<double> &inputs,
                                            const std::vector<std::vector<double>> &outputs,
                                            std::size_t dmu_index, RtsMode rts) {
    const std::size_t n = inputs.size();
    if (n == 0 || outputs.size() != n)
        throw validation_error("inputs and outputs must cover the same non-empty DMU set");
    if (dmu_index >= n) throw validation_error("dmu_index out of range");
    const std::size_t r = outputs[0].size();
    for (std::size_t j = 0; j < n; ++j) {
        if (outputs[j].size() != r)
            throw validation_error("output matrix is not rectangular");
        if (!(inputs[j] > 0.0)) throw validation_error("inputs must be strictly positive");
        bool any_positive = false;
        for (double y : outputs[j]) {
            if (y < 0.0) throw validation_error("outputs must be nonnegative");
            any_positive = any_positive || y > 0.0;
        }
        if (!any_positive)
            throw validation_error("every DMU needs at least one positive output");
    }

    // Variables: theta, lam_1..lam_n.
    lp::LpProblem p;
    p.sense = lp::Sense::minimize;
    p.objective.assign(n + 1, 0.0);
    p.objective[0] = 1.0;
    p.bounds.assign(n + 1, lp::Bounds{});

    lp::Constraint input_row;
    input_row.coefficients.assign(n + 1, 0.0);
    input_row.coefficients[0] = -inputs[dmu_index];
    for (std::size_t j = 0; j < n; ++j) input_row.coefficients[j + 1] = inputs[j];
    input_row.relation = lp::Relation::less_equal;
    input_row.rhs = 0.0;
    p.constraints.push_back(std::move(input_row));

    for (std::size_t k = 0; k < r; ++k) {
        lp::Constraint out_row;
        out_row.coefficients.assign(n + 1, 0.0);
        for (std::size_t j = 0; j < n; ++j) out_row.coefficients[j + 1] = outputs[j][k];
        out_row.relation = lp::Relation::greater_equal;
        out_row.rhs = outputs[dmu_index][k];
        p.constraints.push_back(std::move(out_row));
    }
    if (rts == RtsMode::VRS) {
        lp::Constraint convexity;
        convexity.coefficients.assign(n + 1, 0.0);
        for (std::size_t j = 0; j < n; ++j) convexity.coefficients[j + 1] = 1.0;
        convexity.relation = lp::Relation::equal;
        convexity.rhs = 1.0;
        p.constraints.push_back(std::move(convexity));
    }

    lp::LpSolution sol = lp::solve(p);
    if (sol.status != lp::Status::optimal)
        throw internal_error("envelopment LP is feasible when the DMU is in the set");

    EnvelopmentScore out;
    out.dmu_id = std::to_string(dmu_index);
    out.rts_mode = rts;
    out.theta = std::min(sol.objective_value, 1.0); // lam = e_o gives theta <= 1
    out.lambdas.assign(sol.variable_values.begin() + 1, sol.variable_values.end());
    return out;
}

} // namespace deabench::dea
