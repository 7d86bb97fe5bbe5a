#ifndef NIMMO_CSV_HPP
#define NIMMO_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nimmo::csv {

using Row = std::vector<std::string>;

/// Quotes a field when it contains a comma, quote or newline.
std::string escape(const std::string& field);

void write_row(std::ostream& out, const Row& row);

/// Parses RFC 4180-style CSV (quoted fields, doubled quotes).
std::vector<Row> parse(std::istream& in);

} // namespace nimmo::csv

#endif
