#include "deabench/indices.hpp"

#include <algorithm>
#include <set>

#include "deabench/errors.hpp"
#include "deabench/regions.hpp"

namespace deabench {

const std::vector<IndicatorSpec> &indicator_catalog(IndicatorDomain domain) {
    using D = IndicatorDomain;
    static const std::vector<IndicatorSpec> hospital_coverage = {
        {"tasso posti letto ospedalieri day hospital", D::hospital_coverage, Direction::benefit, "per 10 mila abitanti"},
        {"tasso posti letto ospedalieri ordinari", D::hospital_coverage, Direction::benefit, "per 10 mila abitanti"},
        {"tasso medici, odontoiatri istituti cura pubblici, privati accreditati", D::hospital_coverage, Direction::benefit, "per 10 mila abitanti"},
        {"tasso personale infermieristico istituti cura pubblici, privati accreditati", D::hospital_coverage, Direction::benefit, "per 10 mila abitanti"},
        {"tasso personale funzioni riabilitazione istituti cura pubblici, privati accreditati", D::hospital_coverage, Direction::benefit, "per 10 mila abitanti"},
        {"tasso personale tecnico-sanitario istituti cura pubblici, privati accreditati", D::hospital_coverage, Direction::benefit, "per 10 mila abitanti"},
    };
    static const std::vector<IndicatorSpec> hospital_quality = {
        {"persone molto soddisfatte per assistenza medica ospedaliera", D::hospital_quality, Direction::benefit, "% dei ricoverati"},
        {"persone molto soddisfatte assistenza infermieristica ospedaliera", D::hospital_quality, Direction::benefit, "% dei ricoverati"},
        {"persone molto soddisfatte servizi igienici ospedalieri", D::hospital_quality, Direction::benefit, "% dei ricoverati"},
    };
    static const std::vector<IndicatorSpec> district_coverage = {
        {"tasso servizi di guardia medica", D::district_coverage, Direction::benefit, "per mille abitanti"},
        {"tasso medici generici", D::district_coverage, Direction::benefit, "per 10 mila abitanti"},
        {"tasso pediatri di base", D::district_coverage, Direction::benefit, "per 10 mila abitanti"},
        {"tasso posti letto residenziali per funzione socio-sanitaria", D::district_coverage, Direction::benefit, "per 10 mila abitanti"},
        {"tasso strutture sanitarie distrettuali", D::district_coverage, Direction::benefit, "per 10 mila abitanti"},
    };
    static const std::vector<IndicatorSpec> district_quality = {
        {"numero medio di medici di guardia medica per servizio", D::district_quality, Direction::benefit, "medici per servizio"},
        {"medici generici con più di 1.500 assistiti", D::district_quality, Direction::cost, "% dei medici generici"},
        {"pediatri con più di 800 assistiti", D::district_quality, Direction::cost, "% dei pediatri"},
    };
    switch (domain) {
    case D::hospital_coverage: return hospital_coverage;
    case D::hospital_quality: return hospital_quality;
    case D::district_coverage: return district_coverage;
    case D::district_quality: return district_quality;
    }
    throw internal_error("unknown indicator domain");
}

void IndicatorPanel::add(const std::string &region, int year, const std::string &indicator,
                         double value) {
    if (!is_canonical_region(region))
        throw validation_error("unknown region '" + region + "'");
    if (value < 0.0)
        throw validation_error("negative value for " + region + "/" + indicator + "/" +
                               std::to_string(year));
    auto [it, inserted] = cells_.emplace(Key{region, year, indicator}, value);
    (void)it;
    if (!inserted)
        throw validation_error("duplicate cell (" + region + ", " + std::to_string(year) + ", " +
                               indicator + ")");
}

bool IndicatorPanel::has(const std::string &region, int year, const std::string &indicator) const {
    return cells_.count(Key{region, year, indicator}) != 0;
}

double IndicatorPanel::at(const std::string &region, int year, const std::string &indicator) const {
    auto it = cells_.find(Key{region, year, indicator});
    if (it == cells_.end())
        throw data_error("missing data: region '" + region + "', indicator '" + indicator +
                         "', year " + std::to_string(year));
    return it->second;
}

std::vector<int> IndicatorPanel::years() const {
    std::set<int> ys;
    for (const auto &[key, value] : cells_) ys.insert(key.year);
    return {ys.begin(), ys.end()};
}

double ScoreSeries::at(const std::string &region, int year) const {
    auto it = scores.find({region, year});
    if (it == scores.end())
        throw validation_error(index_name + ": no score for (" + region + ", " +
                               std::to_string(year) + ")");
    return it->second;
}

std::vector<int> ScoreSeries::years() const {
    std::set<int> ys;
    for (const auto &[key, value] : scores) ys.insert(key.second);
    return {ys.begin(), ys.end()};
}

std::vector<std::string> ScoreSeries::regions(int year) const {
    std::vector<std::string> out;
    for (const auto &[key, value] : scores)
        if (key.second == year) out.push_back(key.first);
    return out;
}

dea::DmuSet transform_for_bod(const IndicatorPanel &panel,
                              const std::vector<IndicatorSpec> &catalog, int year) {
    dea::DmuSet set;
    set.year = year;
    set.dmu_ids = canonical_regions();
    set.values.assign(set.dmu_ids.size(), std::vector<double>(catalog.size(), 0.0));

    for (std::size_t k = 0; k < catalog.size(); ++k) {
        const IndicatorSpec &spec = catalog[k];
        double column_max = 0.0;
        for (std::size_t j = 0; j < set.dmu_ids.size(); ++j) {
            double v = panel.at(set.dmu_ids[j], year, spec.name);
            if (spec.direction == Direction::cost) v = 100.0 - v;
            set.values[j][k] = v;
            column_max = std::max(column_max, v);
        }
        // Floor at 1e-6 of the column maximum so logarithms stay finite.
        const double eps = 1e-6 * column_max;
        if (!(eps > 0.0))
            throw data_error("indicator '" + spec.name + "' is zero for every region in " +
                             std::to_string(year));
        for (auto &row : set.values) row[k] = std::max(row[k], eps);
    }
    return set;
}

namespace {

ScoreSeries bod_series(const IndicatorPanel &panel, const std::vector<IndicatorSpec> &catalog,
                       const std::string &index_name, int year, double weight_floor) {
    dea::DmuSet set = transform_for_bod(panel, catalog, year);
    ScoreSeries out;
    out.index_name = index_name;
    for (const auto &region : set.dmu_ids)
        out.scores[{region, year}] = dea::bod_multiplicative(set, region, weight_floor).score;
    return out;
}

} // namespace

ScoreSeries compute_coverage_index(const IndicatorPanel &panel, ServiceDomain domain, int year,
                                   double weight_floor) {
    const bool hospital = domain == ServiceDomain::hospital;
    return bod_series(panel,
                      indicator_catalog(hospital ? IndicatorDomain::hospital_coverage
                                                 : IndicatorDomain::district_coverage),
                      hospital ? "ICSO" : "ICSD", year, weight_floor);
}

ScoreSeries compute_iqso(const IndicatorPanel &panel, int year) {
    const auto &catalog = indicator_catalog(IndicatorDomain::hospital_quality);
    ScoreSeries out;
    out.index_name = "IQSO";
    for (const auto &region : canonical_regions()) {
        double sum = 0.0;
        for (const auto &spec : catalog) {
            double v = panel.at(region, year, spec.name);
            if (v < 0.0 || v > 100.0)
                throw validation_error("IQSO input out of [0,100] for " + region + "/" +
                                       spec.name);
            sum += v;
        }
        out.scores[{region, year}] = sum / static_cast<double>(catalog.size());
    }
    return out;
}

ScoreSeries compute_iqsd(const IndicatorPanel &panel, int year, double weight_floor) {
    return bod_series(panel, indicator_catalog(IndicatorDomain::district_quality), "IQSD", year,
                      weight_floor);
}

} // namespace deabench
