#ifndef DEABENCH_ORACLES_HPP
#define DEABENCH_ORACLES_HPP

#include <string>
#include <vector>

#include "deabench/dea.hpp"
#include "deabench/lp.hpp"

namespace deabench::oracles {

/// Verification-only cross-checks. Each routine reaches the same answer as
/// the production path through a different algorithm (exhaustive enumeration
/// instead of pivoting) and is deliberately kept free of lp::solve and the
/// dea_engine internals. Size guards throw validation_error when exceeded.

/// Exact optimum of a feasible bounded LP by enumerating basic feasible
/// solutions (all n-subsets of constraint/bound rows). Guard: <= 12 variables,
/// <= 20 constraints. Throws validation_error if no feasible vertex exists.
double enumerate_vertices_best(const lp::LpProblem &problem);

/// Exhaustive evaluation of exp(min_j sum_r w_r (z_o - z_j)) over the weight
/// simplex discretized at `step`; a lower bound on the true score within
/// Lipschitz error. Guard: <= 4 indicators.
double bod_grid(const dea::DmuSet &set, const std::string &dmu_id, double step);

/// Exact input-oriented theta for the 1-input case by enumerating candidate
/// binding sets: singletons and pairs under CRS; singletons, pairs and
/// triples (with the convexity row) under VRS. Guard: 1 input, <= 2 outputs,
/// <= 25 DMUs.
double envelopment_facets(const std::vector<double> &inputs,
                          const std::vector<std::vector<double>> &outputs,
                          std::size_t dmu_index, dea::RtsMode rts);

} // namespace deabench::oracles

#endif
