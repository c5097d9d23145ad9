#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hnls {

class CsvError : public std::runtime_error {
  public:
    explicit CsvError(const std::string& what) : std::runtime_error(what) {}
};

/// Minimal CSV carrier: one header row plus string cells. Numeric cells are
/// rendered with 17 significant digits so a parse/write cycle is
/// byte-identical on our own output.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string format_double(double value);  // %.17g

/// Parse CSV text; every row must match the header width.
/// Errors carry the 1-based row number.
CsvTable parse_csv(const std::string& text);

std::string write_csv(const CsvTable& table);

CsvTable read_csv_file(const std::string& path);
void write_csv_file(const CsvTable& table, const std::string& path);

/// Numeric view of one cell; CsvError names the row/column on failure.
double cell_as_double(const CsvTable& table, size_t row, size_t column);

}  // namespace hnls
