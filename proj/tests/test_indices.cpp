#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "deabench/dea.hpp"
#include "deabench/errors.hpp"
#include "deabench/indices.hpp"
#include "deabench/oracles.hpp"
#include "deabench/regions.hpp"

using namespace deabench;

namespace {

// Deterministic synthetic value in a benign positive range.
double synth(std::size_t region_idx, std::size_t indicator_idx) {
    return 20.0 + 7.0 * static_cast<double>((region_idx * 5 + indicator_idx * 3) % 11) +
           0.25 * static_cast<double>(region_idx);
}

IndicatorPanel fill_panel(IndicatorDomain domain, int year) {
    IndicatorPanel panel;
    const auto &catalog = indicator_catalog(domain);
    const auto &regions = canonical_regions();
    for (std::size_t j = 0; j < regions.size(); ++j)
        for (std::size_t k = 0; k < catalog.size(); ++k)
            panel.add(regions[j], year, catalog[k].name, synth(j, k));
    return panel;
}

} // namespace

TEST_CASE("catalog shapes match the published indicator lists") {
    CHECK(indicator_catalog(IndicatorDomain::hospital_coverage).size() == 6);
    CHECK(indicator_catalog(IndicatorDomain::hospital_quality).size() == 3);
    CHECK(indicator_catalog(IndicatorDomain::district_coverage).size() == 5);
    CHECK(indicator_catalog(IndicatorDomain::district_quality).size() == 3);
    for (const auto &spec : indicator_catalog(IndicatorDomain::district_quality)) {
        if (spec.name == "numero medio di medici di guardia medica per servizio")
            CHECK(spec.direction == Direction::benefit);
        else
            CHECK(spec.direction == Direction::cost);
    }
}

TEST_CASE("panel rejects duplicates, unknown regions and negatives") {
    IndicatorPanel panel;
    panel.add("Abruzzo", 2010, "x", 1.0);
    CHECK_THROWS_AS(panel.add("Abruzzo", 2010, "x", 2.0), validation_error);
    CHECK_THROWS_AS(panel.add("Atlantis", 2010, "x", 1.0), validation_error);
    CHECK_THROWS_AS(panel.add("Lazio", 2010, "x", -1.0), validation_error);
    CHECK(panel.at("Abruzzo", 2010, "x") == 1.0);
    CHECK_THROWS_AS(panel.at("Lazio", 2010, "x"), data_error);
}

TEST_CASE("cost indicators are complemented against 100") {
    auto panel = fill_panel(IndicatorDomain::district_quality, 2010);
    const auto &catalog = indicator_catalog(IndicatorDomain::district_quality);
    auto set = transform_for_bod(panel, catalog, 2010);
    const auto &regions = canonical_regions();
    for (std::size_t k = 0; k < catalog.size(); ++k) {
        const double raw = panel.at(regions[0], 2010, catalog[k].name);
        const double expected = catalog[k].direction == Direction::cost ? 100.0 - raw : raw;
        CHECK(set.values[0][k] == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("a 100% cost cell is floored, not zeroed") {
    auto panel = fill_panel(IndicatorDomain::district_quality, 2010);
    const auto &catalog = indicator_catalog(IndicatorDomain::district_quality);
    // Rebuild with one region at the worst possible cost value.
    IndicatorPanel worst;
    const auto &regions = canonical_regions();
    for (std::size_t j = 0; j < regions.size(); ++j) {
        for (std::size_t k = 0; k < catalog.size(); ++k) {
            double v = panel.at(regions[j], 2010, catalog[k].name);
            if (j == 0 && catalog[k].direction == Direction::cost) v = 100.0;
            worst.add(regions[j], 2010, catalog[k].name, v);
        }
    }
    auto set = transform_for_bod(worst, catalog, 2010);
    for (std::size_t k = 0; k < catalog.size(); ++k) {
        if (catalog[k].direction != Direction::cost) continue;
        double column_max = 0.0;
        for (const auto &row : set.values) column_max = std::max(column_max, row[k]);
        CHECK(set.values[0][k] == doctest::Approx(1e-6 * column_max).epsilon(1e-9));
        CHECK(set.values[0][k] > 0.0);
    }
    // The floored set must still be scoreable.
    CHECK_NOTHROW(dea::bod_multiplicative(set, regions[0]));
}

TEST_CASE("missing cell raises a data error naming the cell") {
    IndicatorPanel panel = fill_panel(IndicatorDomain::hospital_quality, 2010);
    CHECK_THROWS_WITH_AS(
        compute_iqso(panel, 2011),
        doctest::Contains("Abruzzo"), data_error);
}

TEST_CASE("IQSO is the plain mean of the three satisfaction shares") {
    IndicatorPanel panel;
    const auto &catalog = indicator_catalog(IndicatorDomain::hospital_quality);
    for (const auto &region : canonical_regions())
        for (const auto &spec : catalog) panel.add(region, 2010, spec.name, 30.0);
    auto iqso = compute_iqso(panel, 2010);
    for (const auto &region : canonical_regions())
        CHECK(iqso.at(region, 2010) == doctest::Approx(30.0).epsilon(1e-12));

    IndicatorPanel zeros;
    for (const auto &region : canonical_regions())
        for (const auto &spec : catalog) zeros.add(region, 2010, spec.name, 0.0);
    CHECK(compute_iqso(zeros, 2010).at("Lazio", 2010) == 0.0);

    IndicatorPanel bad;
    for (const auto &region : canonical_regions())
        for (const auto &spec : catalog) bad.add(region, 2010, spec.name, 150.0);
    CHECK_THROWS_AS(compute_iqso(bad, 2010), validation_error);
}

TEST_CASE("coverage index: frontier nonempty and scores in (0, 1]") {
    auto panel = fill_panel(IndicatorDomain::district_coverage, 2012);
    auto icsd = compute_coverage_index(panel, ServiceDomain::district, 2012);
    double best = 0.0;
    for (const auto &region : canonical_regions()) {
        const double s = icsd.at(region, 2012);
        CHECK(s > 0.0);
        CHECK(s <= 1.0);
        best = std::max(best, s);
    }
    CHECK(best == 1.0);
}

TEST_CASE("IQSD agrees with the grid oracle on the transformed set") {
    auto panel = fill_panel(IndicatorDomain::district_quality, 2013);
    const auto &catalog = indicator_catalog(IndicatorDomain::district_quality);
    auto set = transform_for_bod(panel, catalog, 2013);
    auto iqsd = compute_iqsd(panel, 2013);
    for (const auto &region : {"Abruzzo", "Lazio", "Veneto"}) {
        const double grid = oracles::bod_grid(set, region, 0.002);
        CHECK(std::abs(iqsd.at(region, 2013) - grid) <= 5e-3);
    }
}

TEST_CASE("scores do not depend on how other regions are labeled") {
    // Swapping the values of two other DMUs must not change a third's score.
    auto panel = fill_panel(IndicatorDomain::hospital_coverage, 2010);
    const auto &catalog = indicator_catalog(IndicatorDomain::hospital_coverage);
    const auto &regions = canonical_regions();

    IndicatorPanel swapped;
    for (std::size_t j = 0; j < regions.size(); ++j) {
        std::size_t src = j;
        if (regions[j] == "Lazio") src = 0;
        if (j == 0) src = static_cast<std::size_t>(
            std::find(regions.begin(), regions.end(), "Lazio") - regions.begin());
        for (std::size_t k = 0; k < catalog.size(); ++k)
            swapped.add(regions[j], 2010, catalog[k].name,
                        panel.at(regions[src], 2010, catalog[k].name));
    }
    auto a = compute_coverage_index(panel, ServiceDomain::hospital, 2010);
    auto b = compute_coverage_index(swapped, ServiceDomain::hospital, 2010);
    CHECK(std::abs(a.at("Veneto", 2010) - b.at("Veneto", 2010)) <= 1e-9);
}
