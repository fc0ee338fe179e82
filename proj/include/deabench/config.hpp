#ifndef DEABENCH_CONFIG_HPP
#define DEABENCH_CONFIG_HPP

#include <filesystem>
#include <string>

#include "deabench/analysis.hpp"
#include "deabench/dea.hpp"
#include "deabench/efficiency.hpp"

namespace deabench {

/// Run-wide knobs. Defaults reproduce the bundled tables: constant macro
/// shares (0.45, 0.50, 0.05), composite weights renormalized from the 44/51
/// funding split to sum 2, CRS, mean split for hospital quadrants and median
/// for district ones, print precision 3 for indices and 2 for efficiency.
struct RunConfig {
    MacroShares shares = MacroShares::defaults({2010, 2011, 2012, 2013});
    CompositeWeights composite_weights;
    dea::RtsMode rts = dea::RtsMode::CRS;
    double weight_floor = 0.0;
    SplitRule hospital_split = SplitRule::mean;
    SplitRule district_split = SplitRule::median;
    std::filesystem::path out_dir = "out";
    std::filesystem::path fixtures_dir; // empty = resolve via env / default
    int index_precision = 3;
    int efficiency_precision = 2;

    void validate() const;
};

/// Flat key=value config file ('#' comments, blank lines ignored). Keys:
///   shares.default = H,D,P        shares.<year> = H,D,P
///   composite.hospital_weight     composite.district_weight
///   rts = crs|vrs                 weight_floor = <double>
///   split.hospital = mean|median  split.district = mean|median
///   out_dir = <path>              fixtures_dir = <path>
///   precision.indices = <int>     precision.efficiency = <int>
/// Unknown keys raise config_error.
RunConfig load_config(const std::filesystem::path &path);

} // namespace deabench

#endif
