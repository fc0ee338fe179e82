#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "deabench/efficiency.hpp"
#include "deabench/errors.hpp"
#include "deabench/fixtures.hpp"
#include "deabench/regions.hpp"
#include "deabench/reproduce.hpp"

using namespace deabench;

TEST_CASE("default macro shares redistribute prevention proportionally") {
    auto shares = MacroShares::defaults({2010});
    auto [h, d] = shares.effective_multipliers(2010);
    CHECK(h == doctest::Approx(0.45 / 0.95).epsilon(1e-9));
    CHECK(d == doctest::Approx(0.50 / 0.95).epsilon(1e-9));
    CHECK(h + d == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("zero prevention share passes through unchanged") {
    MacroShares shares;
    shares.by_year[2010] = {0.45, 0.55, 0.0};
    auto [h, d] = shares.effective_multipliers(2010);
    CHECK(h == doctest::Approx(0.45).epsilon(1e-12));
    CHECK(d == doctest::Approx(0.55).epsilon(1e-12));
}

TEST_CASE("invalid shares are rejected") {
    MacroShares bad;
    bad.by_year[2010] = {0.5, 0.5, 0.5};
    CHECK_THROWS_AS(bad.validate(), config_error);
    MacroShares negative;
    negative.by_year[2010] = {1.2, -0.2, 0.0};
    CHECK_THROWS_AS(negative.validate(), config_error);
}

TEST_CASE("composite weights renormalize the 44/51 funding split to sum 2") {
    CompositeWeights w;
    CHECK(w.hospital_weight == doctest::Approx(0.926316).epsilon(1e-5));
    CHECK(w.district_weight == doctest::Approx(1.073684).epsilon(1e-5));
    CHECK(w.hospital_weight + w.district_weight == doctest::Approx(2.0).epsilon(1e-12));
    CompositeWeights bad{1.0, 0.5};
    CHECK_THROWS_AS(bad.validate(), config_error);
}

TEST_CASE("cost split of the bundled spend table") {
    const auto fx = load_fixtures(fixture_directory());
    SpendPanel spend;
    const auto &tab = fx.tab("tab_4_1");
    for (const auto &region : tab.rows())
        for (int y : tab.years()) spend.per_capita_spend[{region, y}] = tab.at(region, y);
    auto costs = split_costs(spend, MacroShares::defaults(tab.years()));
    // Abruzzo 2010 spends 1777 per head; the hospital share is 1777 * 0.45/0.95.
    CHECK(costs.at({"Abruzzo", 2010}).hospital_cost == doctest::Approx(841.74).epsilon(1e-4));
    CHECK(costs.at({"Abruzzo", 2010}).district_cost ==
          doctest::Approx(1777.0 - costs.at({"Abruzzo", 2010}).hospital_cost).epsilon(1e-9));
}

TEST_CASE("simple composite reproduces the printed anchor cells") {
    const auto fx = load_fixtures(fixture_directory());
    auto simple = composite_efficiency(series_from_table(fx.tab("tab_4_3"), "hospital"),
                                       series_from_table(fx.tab("tab_4_4"), "district"),
                                       CompositeMode::simple);
    CHECK(simple.at("Abruzzo", 2010) == doctest::Approx(1.48).epsilon(0.004));
}

TEST_CASE("weighted composite reproduces the printed anchor cells") {
    const auto fx = load_fixtures(fixture_directory());
    auto weighted = composite_efficiency(series_from_table(fx.tab("tab_4_3"), "hospital"),
                                         series_from_table(fx.tab("tab_4_4"), "district"),
                                         CompositeMode::weighted);
    CHECK(std::abs(weighted.at("Alto Adige", 2010) - 1.18) <= 0.005);
    CHECK(std::abs(weighted.at("Marche", 2012) - 0.93) <= 0.005);
}

TEST_CASE("composite rejects mismatched key sets") {
    ScoreSeries hospital{"hospital", {{{"Abruzzo", 2010}, 0.5}, {{"Lazio", 2010}, 0.7}}};
    ScoreSeries district{"district", {{{"Abruzzo", 2010}, 0.9}}};
    CHECK_THROWS_AS(composite_efficiency(hospital, district, CompositeMode::simple),
                    validation_error);
}

TEST_CASE("efficiency scores are invariant to a uniform cost rescale under CRS") {
    const auto fx = load_fixtures(fixture_directory());
    SpendPanel spend;
    const auto &tab = fx.tab("tab_4_1");
    for (const auto &region : tab.rows())
        for (int y : tab.years()) spend.per_capita_spend[{region, y}] = tab.at(region, y);
    const auto shares = MacroShares::defaults(tab.years());
    auto costs = split_costs(spend, shares);
    auto scaled_costs = costs;
    for (auto &[key, split] : scaled_costs) {
        split.hospital_cost *= 1000.0;
        split.district_cost *= 1000.0;
    }
    const auto coverage = series_from_table(fx.tab("tab_2_1"), "ICSO");
    const auto quality = series_from_table(fx.tab("tab_2_2"), "IQSO");
    auto base = efficiency_scores(ServiceDomain::hospital, 2010, dea::RtsMode::CRS, costs,
                                  coverage, quality);
    auto scaled = efficiency_scores(ServiceDomain::hospital, 2010, dea::RtsMode::CRS,
                                    scaled_costs, coverage, quality);
    for (const auto &region : canonical_regions())
        CHECK(std::abs(base.at(region, 2010) - scaled.at(region, 2010)) <= 1e-9);
}

TEST_CASE("reconstructed efficiency table hits the spot anchors") {
    const auto fx = load_fixtures(fixture_directory());
    auto table = reconstruct_efficiency(fx, ServiceDomain::hospital, dea::RtsMode::CRS,
                                        MacroShares::defaults({2010, 2011, 2012, 2013}));
    CHECK(table.at("Sicilia", 2010) == doctest::Approx(0.346).epsilon(0.01));
    CHECK(table.at("Emilia-Romagna", 2011) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(table.at("Calabria", 2011) == doctest::Approx(1.0).epsilon(1e-9));
}
