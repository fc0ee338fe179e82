#include "deabench/config.hpp"

#include <fstream>
#include <sstream>

#include "deabench/errors.hpp"

namespace deabench {

void RunConfig::validate() const {
    shares.validate();
    composite_weights.validate();
    if (weight_floor < 0.0 || weight_floor >= 1.0)
        throw config_error("weight_floor must lie in [0, 1)");
    if (index_precision < 0 || efficiency_precision < 0)
        throw config_error("precision must be nonnegative");
}

namespace {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::array<double, 3> parse_shares(const std::string &value, const std::string &key) {
    std::array<double, 3> parts{};
    std::istringstream ss(value);
    std::string item;
    for (int i = 0; i < 3; ++i) {
        if (!std::getline(ss, item, ','))
            throw config_error(key + ": expected three comma-separated shares");
        try {
            parts[static_cast<std::size_t>(i)] = std::stod(trim(item));
        } catch (const std::exception &) {
            throw config_error(key + ": non-numeric share '" + item + "'");
        }
    }
    if (std::getline(ss, item, ','))
        throw config_error(key + ": expected exactly three shares");
    return parts;
}

double parse_double(const std::string &value, const std::string &key) {
    try {
        return std::stod(trim(value));
    } catch (const std::exception &) {
        throw config_error(key + ": non-numeric value '" + value + "'");
    }
}

SplitRule parse_split(const std::string &value, const std::string &key) {
    const std::string v = trim(value);
    if (v == "mean") return SplitRule::mean;
    if (v == "median") return SplitRule::median;
    throw config_error(key + ": expected mean|median, got '" + v + "'");
}

} // namespace

RunConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file " + path.string());

    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error(path.string() + ":" + std::to_string(lineno) +
                               ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "shares.default") {
            auto parts = parse_shares(value, key);
            for (auto &entry : cfg.shares.by_year) entry.second = parts;
        } else if (key.rfind("shares.", 0) == 0) {
            int year = 0;
            try {
                year = std::stoi(key.substr(7));
            } catch (const std::exception &) {
                throw config_error(key + ": expected shares.<year>");
            }
            cfg.shares.by_year[year] = parse_shares(value, key);
        } else if (key == "composite.hospital_weight") {
            cfg.composite_weights.hospital_weight = parse_double(value, key);
        } else if (key == "composite.district_weight") {
            cfg.composite_weights.district_weight = parse_double(value, key);
        } else if (key == "rts") {
            if (value == "crs") cfg.rts = dea::RtsMode::CRS;
            else if (value == "vrs") cfg.rts = dea::RtsMode::VRS;
            else throw config_error("rts: expected crs|vrs, got '" + value + "'");
        } else if (key == "weight_floor") {
            cfg.weight_floor = parse_double(value, key);
        } else if (key == "split.hospital") {
            cfg.hospital_split = parse_split(value, key);
        } else if (key == "split.district") {
            cfg.district_split = parse_split(value, key);
        } else if (key == "out_dir") {
            cfg.out_dir = value;
        } else if (key == "fixtures_dir") {
            cfg.fixtures_dir = value;
        } else if (key == "precision.indices") {
            cfg.index_precision = static_cast<int>(parse_double(value, key));
        } else if (key == "precision.efficiency") {
            cfg.efficiency_precision = static_cast<int>(parse_double(value, key));
        } else {
            throw config_error(path.string() + ":" + std::to_string(lineno) + ": unknown key '" +
                               key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

} // namespace deabench
