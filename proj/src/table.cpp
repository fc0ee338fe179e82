#include "deabench/table.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "deabench/errors.hpp"

namespace deabench {

std::size_t YearTable::year_index(int year) const {
    auto it = std::find(years_.begin(), years_.end(), year);
    if (it == years_.end())
        throw validation_error("year " + std::to_string(year) + " not present in table");
    return static_cast<std::size_t>(it - years_.begin());
}

bool YearTable::has_year(int year) const {
    return std::find(years_.begin(), years_.end(), year) != years_.end();
}

double YearTable::at(const std::string &row, int year) const {
    auto it = cells_.find(row);
    if (it == cells_.end()) throw validation_error("row '" + row + "' not present in table");
    return it->second[year_index(year)];
}

void YearTable::set(const std::string &row, int year, double value) {
    std::size_t idx = year_index(year);
    auto it = cells_.find(row);
    if (it == cells_.end()) {
        row_order_.push_back(row);
        it = cells_.emplace(row, std::vector<double>(years_.size(), 0.0)).first;
    }
    it->second[idx] = value;
}

std::vector<double> YearTable::column(int year) const {
    std::size_t idx = year_index(year);
    std::vector<double> out;
    out.reserve(row_order_.size());
    for (const auto &row : row_order_) out.push_back(cells_.at(row)[idx]);
    return out;
}

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

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

} // namespace

YearTable load_year_table(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line)) throw data_error(path.string() + ":1: empty file");
    auto header = split_csv_line(strip_cr(line));
    if (header.size() < 2)
        throw data_error(path.string() + ":1: expected 'region,<year>,...' header");

    std::vector<int> years;
    for (std::size_t i = 1; i < header.size(); ++i) {
        try {
            std::size_t pos = 0;
            int y = std::stoi(header[i], &pos);
            if (pos != header[i].size()) throw std::invalid_argument(header[i]);
            years.push_back(y);
        } catch (const std::exception &) {
            throw data_error(path.string() + ":1: non-numeric year column '" + header[i] + "'");
        }
    }

    YearTable table(years);
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw data_error(path.string() + ":" + std::to_string(lineno) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(fields.size()));
        const std::string &row = fields[0];
        if (table.has_row(row))
            throw data_error(path.string() + ":" + std::to_string(lineno) + ": duplicate row '" +
                             row + "'");
        for (std::size_t i = 1; i < fields.size(); ++i) {
            try {
                std::size_t pos = 0;
                double v = std::stod(fields[i], &pos);
                if (pos != fields[i].size()) throw std::invalid_argument(fields[i]);
                table.set(row, years[i - 1], v);
            } catch (const std::exception &) {
                throw data_error(path.string() + ":" + std::to_string(lineno) +
                                 ": non-numeric value '" + fields[i] + "'");
            }
        }
    }
    return table;
}

std::string format_fixed(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
    return buf;
}

void write_file_atomic(const std::filesystem::path &path, const std::string &content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw data_error("cannot write " + tmp.string());
        out << content;
        if (!out) throw data_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void write_year_table(const YearTable &table, const std::filesystem::path &path, int precision) {
    std::ostringstream out;
    out << "region";
    for (int y : table.years()) out << ',' << y;
    out << '\n';
    for (const auto &row : table.rows()) {
        // Row names containing commas would need quoting; canonical names don't.
        out << row;
        for (int y : table.years()) out << ',' << format_fixed(table.at(row, y), precision);
        out << '\n';
    }
    write_file_atomic(path, out.str());
}

} // namespace deabench
