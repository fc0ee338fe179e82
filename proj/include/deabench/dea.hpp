#ifndef DEABENCH_DEA_HPP
#define DEABENCH_DEA_HPP

#include <string>
#include <vector>

namespace deabench::dea {

/// One year's evaluation set: strictly positive indicator values per DMU.
/// Positivity is enforced upstream (epsilon flooring); this layer asserts.
struct DmuSet {
    int year = 0;
    std::vector<std::string> dmu_ids;
    std::vector<std::vector<double>> values; // dmu x indicator

    std::size_t dmu_count() const { return dmu_ids.size(); }
    std::size_t indicator_count() const { return values.empty() ? 0 : values[0].size(); }
    std::size_t index_of(const std::string &dmu_id) const;
};

/// Benefit-of-the-doubt score: exp of the optimal value of the log-linearized
/// multiplicative model. Weights are simplex-normalized (sum to 1).
struct BodScore {
    std::string dmu_id;
    double score = 0.0;                  // in (0, 1]
    std::vector<double> optimal_weights; // one per indicator, sum 1
};

enum class RtsMode { CRS, VRS };

/// Input-oriented envelopment result: radial contraction factor and the
/// intensity vector over peers.
struct EnvelopmentScore {
    std::string dmu_id;
    double theta = 0.0; // in (0, 1]
    std::vector<double> lambdas;
    RtsMode rts_mode = RtsMode::CRS;

    /// Peers are DMUs carrying intensity above 1e-9.
    std::vector<std::size_t> peer_indices() const;
};

/// Multiplicative benefit-of-the-doubt synthesis. With z = ln(value), solves
///   maximize t  s.t.  t <= sum_r w_r (z_ro - z_rj) for every DMU j,
///                     sum_r w_r = 1,  w_r >= weight_floor,
/// and returns score = exp(t*). weight_floor must lie in [0, 1/indicators).
BodScore bod_multiplicative(const DmuSet &set, const std::string &dmu_id,
                            double weight_floor = 0.0);

/// Input-oriented envelopment model (CCR for CRS, BCC for VRS):
///   minimize theta  s.t.  sum_j lam_j x_j <= theta x_o,
///                         sum_j lam_j y_rj >= y_ro for every output r,
///                         lam >= 0, and sum lam = 1 under VRS.
EnvelopmentScore envelopment_input_oriented(const std::vector<double> &inputs,
                                            const std::vector<std::vector<double>> &outputs,
                                            std::size_t dmu_index, RtsMode rts);

} // namespace deabench::dea

#endif
