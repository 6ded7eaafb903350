#include "fr/csv.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fr {

namespace {

std::string fixed9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw std::runtime_error("csv line " + std::to_string(line) + ": " + msg);
}

}  // namespace

std::string format_curve_csv(const std::vector<CsvRow>& rows) {
    std::string out = "r,dh_prev,empty,vertices\n";
    for (const CsvRow& row : rows) {
        out += fixed9(row.r);
        out += ',';
        if (row.dh_prev) out += row.dh_prev->is_finite() ? fixed9(row.dh_prev->value()) : "inf";
        out += ',';
        out += row.empty ? '1' : '0';
        out += ',';
        out += std::to_string(row.vertices);
        out += '\n';
    }
    return out;
}

std::vector<CsvRow> parse_curve_csv(const std::string& text) {
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    if (!std::getline(ss, line)) fail(1, "empty document");
    ++lineno;
    if (line == "r,dh_prev,empty,vertices\r") line.pop_back();
    if (line != "r,dh_prev,empty,vertices") fail(1, "bad header");

    std::vector<CsvRow> rows;
    while (std::getline(ss, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() == 3 && line.back() != ',') cells.emplace_back();
        if (cells.size() != 4) fail(lineno, "expected 4 fields");

        CsvRow row;
        try {
            row.r = std::stod(cells[0]);
            if (!cells[1].empty())
                row.dh_prev = cells[1] == "inf" ? HausdorffValue::infinite()
                                                : HausdorffValue::finite(std::stod(cells[1]));
            if (cells[2] != "0" && cells[2] != "1") fail(lineno, "empty flag must be 0 or 1");
            row.empty = cells[2] == "1";
            row.vertices = std::stoul(cells[3]);
        } catch (const std::runtime_error&) {
            throw;
        } catch (const std::exception&) {
            fail(lineno, "malformed numeric field");
        }
        if (!rows.empty() && !(row.r > rows.back().r)) fail(lineno, "rows must be sorted by r");
        rows.push_back(row);
    }
    return rows;
}

}  // namespace fr
