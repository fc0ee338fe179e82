#ifndef DEABENCH_EFFICIENCY_HPP
#define DEABENCH_EFFICIENCY_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "deabench/dea.hpp"
#include "deabench/indices.hpp"

namespace deabench {

/// Per-capita spend rows, euros per inhabitant; optional household share (%).
struct SpendPanel {
    std::map<std::pair<std::string, int>, double> per_capita_spend;
    std::map<std::pair<std::string, int>, double> household_share;

    double spend_at(const std::string &region, int year) const;
};

/// National split of spend across the three macro assistance levels.
/// Components must be positive and sum to 1.
struct MacroShares {
    std::map<int, std::array<double, 3>> by_year; // {hospital, district, prevention}

    /// Constant (0.45, 0.50, 0.05) for the given years.
    static MacroShares defaults(const std::vector<int> &years);

    /// Share multipliers with the prevention mass redistributed
    /// proportionally: (h/(h+d), d/(h+d)).
    std::pair<double, double> effective_multipliers(int year) const;

    void validate() const;
};

/// Weights for the weighted composite sum; must total 2 so the weighted
/// composite shares the simple composite's maximum.
struct CompositeWeights {
    double hospital_weight = 2.0 * 0.44 / 0.95;
    double district_weight = 2.0 * 0.51 / 0.95;

    void validate() const;
};

enum class CompositeMode { simple, weighted };

struct CostSplit {
    double hospital_cost = 0.0;
    double district_cost = 0.0;
};

/// Splits per-capita spend into hospital/district inputs per (region, year).
std::map<std::pair<std::string, int>, CostSplit> split_costs(const SpendPanel &spend,
                                                             const MacroShares &shares);

/// Input-oriented DEA efficiency of one domain's cost against its
/// (coverage, quality) outputs for one year. Expects the 21 canonical regions.
ScoreSeries efficiency_scores(ServiceDomain domain, int year, dea::RtsMode rts,
                              const std::map<std::pair<std::string, int>, CostSplit> &costs,
                              const ScoreSeries &coverage, const ScoreSeries &quality);

/// Simple sum (h + d) or weighted sum of the two partial efficiencies.
ScoreSeries composite_efficiency(const ScoreSeries &hospital, const ScoreSeries &district,
                                 CompositeMode mode,
                                 const CompositeWeights &weights = CompositeWeights{});

} // namespace deabench

#endif
