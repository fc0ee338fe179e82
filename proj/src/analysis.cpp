#include "deabench/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "deabench/errors.hpp"
#include "deabench/regions.hpp"

namespace deabench {

std::string quadrant_name(Quadrant q) {
    switch (q) {
    case Quadrant::high_cov_high_qual: return "high_cov_high_qual";
    case Quadrant::low_cov_high_qual: return "low_cov_high_qual";
    case Quadrant::low_cov_low_qual: return "low_cov_low_qual";
    case Quadrant::high_cov_low_qual: return "high_cov_low_qual";
    }
    throw internal_error("unknown quadrant");
}

const std::vector<RegionGroup> &builtin_region_groups() {
    static const std::vector<RegionGroup> groups = {
        {"regioni a statuto speciale",
         {"Valle d'Aosta", "Alto Adige", "Trentino", "Friuli-Venezia Giulia", "Sardegna"}},
        {"regioni in piano di rientro", {"Piemonte", "Puglia", "Sicilia"}},
        {"regioni in piano di rientro e commissariate",
         {"Lazio", "Abruzzo", "Molise", "Campania", "Calabria"}},
    };
    return groups;
}

std::vector<YearlyStats> yearly_stats(const ScoreSeries &series) {
    std::vector<YearlyStats> out;
    for (int year : series.years()) {
        std::vector<double> values;
        for (const auto &[key, v] : series.scores)
            if (key.second == year) values.push_back(v);
        if (values.size() < 2)
            throw validation_error("yearly_stats needs >= 2 regions for year " +
                                   std::to_string(year));
        const double n = static_cast<double>(values.size());
        const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
        double ss = 0.0;
        for (double v : values) ss += (v - mean) * (v - mean);
        out.push_back({year, mean, std::sqrt(ss / n)});
    }
    if (out.empty()) throw validation_error("yearly_stats: empty series");
    return out;
}

double split_point(std::vector<double> values, SplitRule rule) {
    if (values.empty()) throw validation_error("split_point: empty sample");
    if (rule == SplitRule::mean)
        return std::accumulate(values.begin(), values.end(), 0.0) /
               static_cast<double>(values.size());
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

namespace {

Quadrant classify(double x, double y, double sx, double sy) {
    const bool high_x = x >= sx;
    const bool high_y = y >= sy;
    if (high_x) return high_y ? Quadrant::high_cov_high_qual : Quadrant::high_cov_low_qual;
    return high_y ? Quadrant::low_cov_high_qual : Quadrant::low_cov_low_qual;
}

std::vector<QuadrantAssignment> classify_all(
    const std::vector<std::pair<std::string, std::pair<double, double>>> &points, SplitRule rule) {
    std::vector<double> xs, ys;
    for (const auto &[region, xy] : points) {
        xs.push_back(xy.first);
        ys.push_back(xy.second);
    }
    const double sx = split_point(xs, rule);
    const double sy = split_point(ys, rule);
    std::vector<QuadrantAssignment> out;
    out.reserve(points.size());
    for (const auto &[region, xy] : points)
        out.push_back({region, classify(xy.first, xy.second, sx, sy), rule, sx, sy, xy.first,
                       xy.second});
    return out;
}

} // namespace

std::vector<QuadrantAssignment> quadrants(const ScoreSeries &coverage, const ScoreSeries &quality,
                                          int year, SplitRule rule) {
    std::vector<std::pair<std::string, std::pair<double, double>>> points;
    for (const auto &region : canonical_regions())
        points.push_back({region, {coverage.at(region, year), quality.at(region, year)}});
    return classify_all(points, rule);
}

std::vector<QuadrantAssignment> cross_domain_quadrants(const ScoreSeries &series_a,
                                                       const ScoreSeries &series_b,
                                                       SplitRule rule) {
    auto multi_year_mean = [](const ScoreSeries &s, const std::string &region) {
        const auto years = s.years();
        double sum = 0.0;
        for (int y : years) sum += s.at(region, y);
        return sum / static_cast<double>(years.size());
    };
    std::vector<std::pair<std::string, std::pair<double, double>>> points;
    for (const auto &region : canonical_regions())
        points.push_back(
            {region, {multi_year_mean(series_a, region), multi_year_mean(series_b, region)}});
    return classify_all(points, rule);
}

int color_bucket(double value, double column_min, double column_max, int levels) {
    if (column_max < column_min)
        throw validation_error("color_bucket: column_max < column_min");
    if (levels < 1) throw validation_error("color_bucket: levels must be >= 1");
    if (column_max == column_min) return levels / 2;
    double t = (value - column_min) / (column_max - column_min);
    t = std::clamp(t, 0.0, 1.0);
    const int bucket = static_cast<int>(t * levels);
    return std::min(bucket, levels - 1);
}

std::map<std::pair<std::string, int>, double> group_spend_sums(
    const YearTable &spend_table, const std::vector<RegionGroup> &groups) {
    std::map<std::pair<std::string, int>, double> out;
    for (const auto &group : groups) {
        for (const auto &member : group.members) {
            if (!spend_table.has_row(member))
                throw validation_error("group '" + group.group_name + "' names unknown region '" +
                                       member + "'");
        }
        for (int year : spend_table.years()) {
            double sum = 0.0;
            for (const auto &member : group.members) sum += spend_table.at(member, year);
            out[{group.group_name, year}] = sum;
        }
    }
    return out;
}

namespace {

// Mid-ranks (1-based, ties averaged).
std::vector<double> ranks_of(const std::vector<double> &values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&values](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double mid = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
        i = j + 1;
    }
    return ranks;
}

} // namespace

double spearman_rho(const std::vector<double> &a, const std::vector<double> &b) {
    if (a.size() != b.size() || a.size() < 3)
        throw validation_error("spearman_rho needs two equal samples of size >= 3");
    const auto ra = ranks_of(a);
    const auto rb = ranks_of(b);
    const double n = static_cast<double>(a.size());
    const double mean = (n + 1.0) / 2.0;
    double num = 0.0, da = 0.0, db = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += (ra[i] - mean) * (rb[i] - mean);
        da += (ra[i] - mean) * (ra[i] - mean);
        db += (rb[i] - mean) * (rb[i] - mean);
    }
    if (da == 0.0 || db == 0.0)
        throw validation_error("spearman_rho: constant sample has no rank ordering");
    return num / std::sqrt(da * db);
}

double mobility_association(const ScoreSeries &index, const YearTable &mobility, int year) {
    std::vector<double> xs, ys;
    for (const auto &region : canonical_regions()) {
        if (!mobility.has_row(region)) continue; // non-regional rows excluded by construction
        auto it = index.scores.find({region, year});
        if (it == index.scores.end()) continue;
        xs.push_back(it->second);
        ys.push_back(mobility.at(region, year));
    }
    if (xs.size() < 3)
        throw validation_error("mobility_association: fewer than 3 overlapping regions");
    return spearman_rho(xs, ys);
}

} // namespace deabench
