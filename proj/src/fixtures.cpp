#include "deabench/fixtures.hpp"

#include <cstdlib>

#include "deabench/errors.hpp"
#include "deabench/regions.hpp"

namespace deabench {

const YearTable &DatasetBundle::tab(const std::string &name) const {
    auto it = tables.find(name);
    if (it == tables.end()) throw data_error("fixture table '" + name + "' not loaded");
    return it->second;
}

std::filesystem::path fixture_directory(const std::string &override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char *env = std::getenv("DEABENCH_FIXTURES"); env && *env) return env;
    return "data/fixtures";
}

namespace {

const std::vector<int> kIndexYears = {2010, 2011, 2012, 2013};
const std::vector<int> kSpendYears = {2008, 2009, 2010, 2011, 2012, 2013, 2014};

void check_shape(const YearTable &t, const std::string &name, const std::vector<int> &years,
                 bool regions_only) {
    if (t.years() != years)
        throw data_error("fixture " + name + " has unexpected year columns");
    for (const auto &region : canonical_regions()) {
        if (!t.has_row(region))
            throw data_error("fixture " + name + " is missing region '" + region + "'");
    }
    if (regions_only && t.row_count() != canonical_regions().size())
        throw data_error("fixture " + name + " has unexpected extra rows");
}

} // namespace

DatasetBundle load_fixtures(const std::filesystem::path &dir) {
    static const char *kIndexTables[] = {"tab_2_1", "tab_2_2", "tab_3_1", "tab_3_2",
                                         "tab_4_1", "tab_4_2", "tab_4_3", "tab_4_4",
                                         "tab_4_5", "tab_4_6"};
    DatasetBundle bundle;
    for (const char *name : kIndexTables) {
        YearTable t = load_year_table(dir / (std::string(name) + ".csv"));
        check_shape(t, name, kIndexYears, /*regions_only=*/true);
        bundle.tables.emplace(name, std::move(t));
    }
    for (const char *name : {"tab_1_1", "tab_2_3"}) {
        YearTable t = load_year_table(dir / (std::string(name) + ".csv"));
        check_shape(t, name, kSpendYears, /*regions_only=*/false);
        bundle.tables.emplace(name, std::move(t));
    }
    return bundle;
}

} // namespace deabench
