#include "deabench/panel_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "deabench/errors.hpp"
#include "deabench/regions.hpp"

namespace deabench {

namespace {

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            fields.push_back(field);
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(field);
    return fields;
}

[[noreturn]] void fail(const std::filesystem::path &path, int line, const std::string &msg) {
    throw data_error(path.string() + ":" + std::to_string(line) + ": " + msg);
}

} // namespace

IndicatorPanel load_panel(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open " + path.string());

    IndicatorPanel panel;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1) {
            if (line != "region,year,indicator,value")
                fail(path, 1, "expected header 'region,year,indicator,value'");
            continue;
        }
        auto fields = split_csv_line(line);
        if (fields.size() != 4) fail(path, lineno, "expected 4 fields");

        auto region = normalize_region(fields[0]);
        if (!region) {
            std::string hint;
            if (fields[0].find("Trentino-Alto") != std::string::npos ||
                fields[0].find("TRENTINO-ALTO") != std::string::npos ||
                fields[0].find("Trentino Alto") != std::string::npos)
                hint = " (use the two autonomous provinces 'Trentino' and 'Alto Adige' instead)";
            fail(path, lineno, "unknown region '" + fields[0] + "'" + hint);
        }

        int year = 0;
        try {
            std::size_t pos = 0;
            year = std::stoi(fields[1], &pos);
            if (pos != fields[1].size()) throw std::invalid_argument(fields[1]);
        } catch (const std::exception &) {
            fail(path, lineno, "non-numeric year '" + fields[1] + "'");
        }

        double value = 0.0;
        try {
            std::size_t pos = 0;
            value = std::stod(fields[3], &pos);
            if (pos != fields[3].size()) throw std::invalid_argument(fields[3]);
        } catch (const std::exception &) {
            fail(path, lineno, "non-numeric value '" + fields[3] + "'");
        }

        try {
            panel.add(*region, year, fields[2], value);
        } catch (const validation_error &e) {
            fail(path, lineno, e.what());
        }
    }
    return panel;
}

} // namespace deabench
