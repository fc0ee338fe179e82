#ifndef DEABENCH_FIXTURES_HPP
#define DEABENCH_FIXTURES_HPP

#include <filesystem>
#include <map>
#include <string>

#include "deabench/table.hpp"

namespace deabench {

/// The published result tables, bundled as CSV fixtures. Values are
/// transcribed at printed precision (dot decimals).
struct DatasetBundle {
    std::map<std::string, YearTable> tables; // keyed "tab_2_1", ...

    const YearTable &tab(const std::string &name) const;
};

/// Resolves the fixture directory: explicit argument, else the
/// DEABENCH_FIXTURES environment variable, else ./data/fixtures.
std::filesystem::path fixture_directory(const std::string &override_dir = "");

/// Loads all twelve fixture tables and validates their shapes
/// (21 regions x 2010-2013; Tab 1.1 / 2.3 carry 2008-2014 and extra rows).
DatasetBundle load_fixtures(const std::filesystem::path &dir);

} // namespace deabench

#endif
