#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "jensenlab/ball.hpp"

namespace jensenlab {

// A flat report table. CSV renders comments as leading '#' lines; the JSON
// form mirrors the CSV one-to-one (same strings, same order), so either
// format carries identical information and both are byte-deterministic.
struct Table {
    std::string schema;                 // e.g. "jensenlab.xi-coeffs.v1"
    std::vector<std::string> comments;  // "key=value" lines
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);

// Writes to the given path ("" or "-" means stdout), format "csv" or "json".
void write_table(const std::string& path, const std::string& format,
                 const Table& t);

// Decimal midpoint with enough digits to round-trip the mpfr value
// (ceil(prec log10 2) + 2 significant digits).
std::string ball_mid_decimal(const Ball& b);
// Decimal upper bound of the radius, 6 significant digits, "0" if exact.
std::string ball_rad_decimal(const Ball& b);

}  // namespace jensenlab
