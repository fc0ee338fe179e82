#ifndef DEABENCH_REPRODUCE_HPP
#define DEABENCH_REPRODUCE_HPP

#include <string>
#include <vector>

#include "deabench/config.hpp"
#include "deabench/fixtures.hpp"
#include "deabench/indices.hpp"

namespace deabench {

/// One acceptance criterion outcome. Soft criteria are reported but do not
/// gate the exit status.
struct CriterionResult {
    int number = 0;
    std::string name;
    bool hard = true;
    bool pass = false;
    std::vector<std::string> details; // per-sub-check lines, failures first
};

struct ReproduceReport {
    std::vector<CriterionResult> criteria;
    std::string best_rts_mode; // "CRS" or "VRS", from the soft DEA criterion
    std::string markdown;

    bool hard_pass() const;
};

/// View a fixture year-table as a ScoreSeries (canonical regions only).
ScoreSeries series_from_table(const YearTable &table, const std::string &index_name);

/// Envelopment scores recomputed from fixtures: inputs = Tab 4.1 x macro
/// share, outputs = the domain's (coverage, quality) fixture columns.
YearTable reconstruct_efficiency(const DatasetBundle &fixtures, ServiceDomain domain,
                                 dea::RtsMode rts, const MacroShares &shares);

/// Runs every acceptance check and renders the Markdown report.
ReproduceReport run_reproduction(const RunConfig &config, const DatasetBundle &fixtures);

} // namespace deabench

#endif
