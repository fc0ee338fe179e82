#ifndef DEABENCH_REPORT_HPP
#define DEABENCH_REPORT_HPP

#include <string>
#include <vector>

#include "deabench/analysis.hpp"
#include "deabench/table.hpp"

namespace deabench {

/// Markdown table with one row per region and one column per year. Each cell
/// carries its per-column color bucket (0 = intense red .. levels-1 = intense
/// green), mirroring the source tables' legend.
std::string markdown_year_table(const YearTable &table, const std::string &title, int precision,
                                int levels = 9);

struct ScatterPoint {
    std::string label;
    double x = 0.0;
    double y = 0.0;
};

/// Deterministic SVG scatter plot with labeled points and dashed split lines.
std::string svg_scatter(const std::vector<ScatterPoint> &points, double split_x, double split_y,
                        const std::string &x_label, const std::string &y_label,
                        const std::string &title);

/// Deterministic SVG line chart of a yearly series (means, sigmas, ...).
std::string svg_line_chart(const std::vector<int> &years, const std::vector<double> &values,
                           const std::string &y_label, const std::string &title);

} // namespace deabench

#endif
