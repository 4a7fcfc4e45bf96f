#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace colldecay {

/// Numeric table with a fixed header. Missing values (a measure that is not
/// defined for the state) are written as empty cells.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;

    /// Throws std::invalid_argument if the row width differs from the header.
    void add_row(std::vector<std::optional<double>> row);
    std::size_t column_index(const std::string& name) const;
};

/// %.17g: 17 significant digits, lossless for doubles.
std::string format_number(double x);

void write_csv(const CsvTable& table, std::ostream& os);
/// Throws std::runtime_error when the file cannot be written.
void write_csv_file(const CsvTable& table, const std::string& path);

}  // namespace colldecay
