#ifndef DEABENCH_INDICES_HPP
#define DEABENCH_INDICES_HPP

#include <map>
#include <string>
#include <vector>

#include "deabench/dea.hpp"

namespace deabench {

enum class ServiceDomain { hospital, district };
enum class IndicatorDomain { hospital_coverage, hospital_quality, district_coverage, district_quality };
enum class Direction { benefit, cost };

struct IndicatorSpec {
    std::string name;
    IndicatorDomain domain;
    Direction direction;
    std::string unit_note;
};

/// The four built-in catalogs (6 hospital-coverage, 3 hospital-quality,
/// 5 district-coverage, 3 district-quality indicators).
const std::vector<IndicatorSpec> &indicator_catalog(IndicatorDomain domain);

/// Long-format raw panel: (region, year, indicator) -> value >= 0.
class IndicatorPanel {
  public:
    struct Key {
        std::string region;
        int year;
        std::string indicator;
        auto operator<=>(const Key &) const = default;
    };

    /// Inserts one cell; rejects duplicates and non-canonical regions.
    void add(const std::string &region, int year, const std::string &indicator, double value);

    bool has(const std::string &region, int year, const std::string &indicator) const;
    double at(const std::string &region, int year, const std::string &indicator) const;

    std::vector<int> years() const;
    std::size_t size() const { return cells_.size(); }

  private:
    std::map<Key, double> cells_;
};

/// (region, year) -> score for one named index.
struct ScoreSeries {
    std::string index_name;
    std::map<std::pair<std::string, int>, double> scores;

    double at(const std::string &region, int year) const;
    std::vector<int> years() const;
    std::vector<std::string> regions(int year) const;
};

/// Direction transform + epsilon flooring, producing the strictly positive
/// matrix the BoD model consumes. Cost-direction percentages p become
/// (100 - p); every column is floored at 1e-6 of its maximum.
dea::DmuSet transform_for_bod(const IndicatorPanel &panel,
                              const std::vector<IndicatorSpec> &catalog, int year);

/// ICSO / ICSD slice for one year (BoD over the domain's coverage catalog).
ScoreSeries compute_coverage_index(const IndicatorPanel &panel, ServiceDomain domain, int year,
                                   double weight_floor = 0.0);

/// IQSO slice: unweighted mean of the three hospital-quality percentages.
ScoreSeries compute_iqso(const IndicatorPanel &panel, int year);

/// IQSD slice: BoD over the direction-transformed district-quality catalog.
ScoreSeries compute_iqsd(const IndicatorPanel &panel, int year, double weight_floor = 0.0);

} // namespace deabench

#endif
