#ifndef DEABENCH_TABLE_HPP
#define DEABENCH_TABLE_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace deabench {

/// Wide row-by-year numeric table: one row per unit (region, group row, ...),
/// one column per year. Row order is preserved as loaded/built; fixture and
/// output files keep regions alphabetical.
class YearTable {
  public:
    YearTable() = default;
    explicit YearTable(std::vector<int> years) : years_(std::move(years)) {}

    const std::vector<int> &years() const { return years_; }
    const std::vector<std::string> &rows() const { return row_order_; }

    bool has_row(const std::string &row) const { return cells_.count(row) != 0; }
    bool has_year(int year) const;

    double at(const std::string &row, int year) const;
    void set(const std::string &row, int year, double value);

    /// Column for one year, in row order.
    std::vector<double> column(int year) const;

    std::size_t row_count() const { return row_order_.size(); }

  private:
    std::vector<int> years_;
    std::vector<std::string> row_order_;
    std::map<std::string, std::vector<double>> cells_; // indexed per years_

    std::size_t year_index(int year) const;
};

/// Reads a wide CSV (`region,Y1,Y2,...`). Throws data_error with file:line
/// locations on malformed input. Does not normalize row names.
YearTable load_year_table(const std::filesystem::path &path);

/// Writes the table with the given decimal precision. Atomic (temp + rename),
/// LF line endings, dot decimals.
void write_year_table(const YearTable &table, const std::filesystem::path &path, int precision);

/// Atomic whole-file write used by every emitter.
void write_file_atomic(const std::filesystem::path &path, const std::string &content);

/// Fixed-precision, locale-independent number formatting ("%.*f").
std::string format_fixed(double value, int precision);

} // namespace deabench

#endif
