#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fr/hausdorff_value.hpp"

namespace fr {

// One curve sample as it appears in the CSV: header r,dh_prev,empty,vertices.
// dh_prev is empty for the first row and the literal token "inf" for an
// infinite distance (so plotting treats it as a break, never a number).
struct CsvRow {
    double r = 0.0;
    std::optional<HausdorffValue> dh_prev;
    bool empty = false;
    size_t vertices = 0;
};

// Fixed decimal notation with 9 fractional digits; deterministic bytes.
std::string format_curve_csv(const std::vector<CsvRow>& rows);

// Inverse of format_curve_csv; throws with a line number on malformed input.
std::vector<CsvRow> parse_curve_csv(const std::string& text);

}  // namespace fr
