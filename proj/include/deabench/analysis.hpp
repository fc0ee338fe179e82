#ifndef DEABENCH_ANALYSIS_HPP
#define DEABENCH_ANALYSIS_HPP

#include <map>
#include <string>
#include <vector>

#include "deabench/indices.hpp"
#include "deabench/table.hpp"

namespace deabench {

/// Mean and population (divisor n) standard deviation of one year's scores.
struct YearlyStats {
    int year = 0;
    double mean = 0.0;
    double std_dev = 0.0;
};

enum class Quadrant { high_cov_high_qual, low_cov_high_qual, low_cov_low_qual, high_cov_low_qual };
enum class SplitRule { mean, median };

std::string quadrant_name(Quadrant q);

struct QuadrantAssignment {
    std::string region;
    Quadrant quadrant;
    SplitRule split_rule;
    double split_point_x = 0.0; // coverage axis
    double split_point_y = 0.0; // quality axis
    double x = 0.0;
    double y = 0.0;
};

struct RegionGroup {
    std::string group_name;
    std::vector<std::string> members;
};

/// The Tab 1.1 group memberships reconstructed by exact sum matching.
const std::vector<RegionGroup> &builtin_region_groups();

/// Per-year mean and population sigma; needs >= 2 rows per year.
std::vector<YearlyStats> yearly_stats(const ScoreSeries &series);

/// Split point of a sample under the given rule. Median is the central order
/// statistic for odd n, the average of the two central ones for even n.
double split_point(std::vector<double> values, SplitRule rule);

/// Classifies every region of one year by (coverage, quality) against the
/// rule's split points; >= counts as "high" on both axes.
std::vector<QuadrantAssignment> quadrants(const ScoreSeries &coverage, const ScoreSeries &quality,
                                          int year, SplitRule rule);

/// Same classification on per-region multi-year means of two series
/// (coverage-vs-coverage or quality-vs-quality cross plots).
std::vector<QuadrantAssignment> cross_domain_quadrants(const ScoreSeries &series_a,
                                                       const ScoreSeries &series_b,
                                                       SplitRule rule);

/// Linear bucket of `value` within [column_min, column_max]: min -> 0,
/// max -> levels-1; a degenerate column maps to the middle bucket.
int color_bucket(double value, double column_min, double column_max, int levels = 9);

/// Exact sums of the member rows of a Tab 1.1-shaped table, per year.
std::map<std::pair<std::string, int>, double> group_spend_sums(
    const YearTable &spend_table, const std::vector<RegionGroup> &groups);

/// Spearman rank correlation (ties mid-ranked) between an index year-slice
/// and a mobility-balance column; non-regional rows are ignored.
double mobility_association(const ScoreSeries &index, const YearTable &mobility, int year);

/// Spearman rho over two parallel samples; used by the reproduction report.
double spearman_rho(const std::vector<double> &a, const std::vector<double> &b);

} // namespace deabench

#endif
