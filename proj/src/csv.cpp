#include "colldecay/csv.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace colldecay {

void CsvTable::add_row(std::vector<std::optional<double>> row) {
    if (row.size() != columns.size()) throw std::invalid_argument("CsvTable: row width does not match header");
    rows.push_back(std::move(row));
}

std::size_t CsvTable::column_index(const std::string& name) const {
    for (std::size_t k = 0; k < columns.size(); ++k)
        if (columns[k] == name) return k;
    throw std::out_of_range("CsvTable: no column " + name);
}

std::string format_number(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_csv(const CsvTable& table, std::ostream& os) {
    for (std::size_t k = 0; k < table.columns.size(); ++k) os << (k ? "," : "") << table.columns[k];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) os << ',';
            if (row[k]) os << format_number(*row[k]);
        }
        os << '\n';
    }
}

void write_csv_file(const CsvTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_csv(table, out);
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace colldecay
