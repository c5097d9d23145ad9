#include "hnls/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hnls {

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream stream(line);
    while (std::getline(stream, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

}  // namespace

CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::istringstream stream(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1) {
            table.header = split_row(line);
            if (table.header.empty()) throw CsvError("row 1: empty header");
            continue;
        }
        if (line.empty()) continue;
        auto cells = split_row(line);
        if (cells.size() != table.header.size()) {
            throw CsvError("row " + std::to_string(lineno) + ": expected " +
                           std::to_string(table.header.size()) + " columns, got " +
                           std::to_string(cells.size()));
        }
        table.rows.push_back(std::move(cells));
    }
    if (table.header.empty()) throw CsvError("row 1: missing header");
    return table;
}

std::string write_csv(const CsvTable& table) {
    std::string out;
    for (size_t j = 0; j < table.header.size(); ++j) {
        if (j) out += ',';
        out += table.header[j];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += row[j];
        }
        out += '\n';
    }
    return out;
}

CsvTable read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CsvError("cannot open CSV file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str());
}

void write_csv_file(const CsvTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CsvError("cannot write CSV file: " + path);
    out << write_csv(table);
}

double cell_as_double(const CsvTable& table, size_t row, size_t column) {
    const std::string& cell = table.rows.at(row).at(column);
    try {
        size_t used = 0;
        const double value = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument("trailing");
        return value;
    } catch (const std::exception&) {
        throw CsvError("row " + std::to_string(row + 2) + ", column '" +
                       table.header.at(column) + "': not a number: '" + cell + "'");
    }
}

}  // namespace hnls
