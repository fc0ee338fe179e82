#include "deabench/efficiency.hpp"

#include <array>
#include <cmath>

#include "deabench/errors.hpp"
#include "deabench/regions.hpp"

namespace deabench {

double SpendPanel::spend_at(const std::string &region, int year) const {
    auto it = per_capita_spend.find({region, year});
    if (it == per_capita_spend.end())
        throw data_error("missing spend for (" + region + ", " + std::to_string(year) + ")");
    return it->second;
}

MacroShares MacroShares::defaults(const std::vector<int> &years) {
    MacroShares s;
    for (int y : years) s.by_year[y] = {0.45, 0.50, 0.05};
    return s;
}

void MacroShares::validate() const {
    for (const auto &[year, parts] : by_year) {
        const auto [h, d, p] = parts;
        if (!(h > 0.0) || !(d > 0.0) || !(p >= 0.0))
            throw config_error("macro shares for " + std::to_string(year) +
                               " must be positive (prevention >= 0)");
        if (std::abs(h + d + p - 1.0) > 1e-9)
            throw config_error("macro shares for " + std::to_string(year) + " must sum to 1");
    }
}

std::pair<double, double> MacroShares::effective_multipliers(int year) const {
    auto it = by_year.find(year);
    if (it == by_year.end())
        throw config_error("no macro shares configured for year " + std::to_string(year));
    const auto [h, d, p] = it->second;
    (void)p;
    return {h / (h + d), d / (h + d)};
}

void CompositeWeights::validate() const {
    if (std::abs(hospital_weight + district_weight - 2.0) > 1e-9)
        throw config_error("composite weights must sum to 2");
}

std::map<std::pair<std::string, int>, CostSplit> split_costs(const SpendPanel &spend,
                                                             const MacroShares &shares) {
    shares.validate();
    std::map<std::pair<std::string, int>, CostSplit> out;
    for (const auto &[key, value] : spend.per_capita_spend) {
        if (!(value > 0.0))
            throw validation_error("spend must be positive for (" + key.first + ", " +
                                   std::to_string(key.second) + ")");
        auto [mh, md] = shares.effective_multipliers(key.second);
        out[key] = {value * mh, value * md};
    }
    return out;
}

ScoreSeries efficiency_scores(ServiceDomain domain, int year, dea::RtsMode rts,
                              const std::map<std::pair<std::string, int>, CostSplit> &costs,
                              const ScoreSeries &coverage, const ScoreSeries &quality) {
    const auto &regions = canonical_regions();
    std::vector<double> inputs;
    std::vector<std::vector<double>> outputs;
    inputs.reserve(regions.size());
    outputs.reserve(regions.size());
    for (const auto &region : regions) {
        auto it = costs.find({region, year});
        if (it == costs.end())
            throw data_error("missing cost for (" + region + ", " + std::to_string(year) + ")");
        inputs.push_back(domain == ServiceDomain::hospital ? it->second.hospital_cost
                                                           : it->second.district_cost);
        outputs.push_back({coverage.at(region, year), quality.at(region, year)});
    }

    ScoreSeries out;
    out.index_name = std::string("theta_") +
                     (domain == ServiceDomain::hospital ? "hospital" : "district") +
                     (rts == dea::RtsMode::CRS ? "_crs" : "_vrs");
    for (std::size_t j = 0; j < regions.size(); ++j)
        out.scores[{regions[j], year}] =
            dea::envelopment_input_oriented(inputs, outputs, j, rts).theta;
    return out;
}

ScoreSeries composite_efficiency(const ScoreSeries &hospital, const ScoreSeries &district,
                                 CompositeMode mode, const CompositeWeights &weights) {
    if (mode == CompositeMode::weighted) weights.validate();
    ScoreSeries out;
    out.index_name = mode == CompositeMode::simple ? "composite_simple" : "composite_weighted";

    if (hospital.scores.size() != district.scores.size())
        throw validation_error("composite_efficiency: series cover different keys");
    for (const auto &[key, h] : hospital.scores) {
        auto it = district.scores.find(key);
        if (it == district.scores.end())
            throw validation_error("composite_efficiency: district series missing (" + key.first +
                                   ", " + std::to_string(key.second) + ")");
        const double d = it->second;
        out.scores[key] = mode == CompositeMode::simple
                              ? h + d
                              : weights.hospital_weight * h + weights.district_weight * d;
    }
    return out;
}

} // namespace deabench
