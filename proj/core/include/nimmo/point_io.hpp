#ifndef NIMMO_POINT_IO_HPP
#define NIMMO_POINT_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "nimmo/types.hpp"

namespace nimmo {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Plain-text point files: one point per line, whitespace-separated values,
/// lines starting with '#' ignored. When `expected_dims` is set every row
/// must have that many columns.
PointSet read_points(std::istream& in, std::optional<std::size_t> expected_dims = {},
                     const std::string& source = "<stream>");
PointSet read_points(const std::filesystem::path& path,
                     std::optional<std::size_t> expected_dims = {});

void write_points(std::ostream& out, const PointSet& points, const std::string& comment = {});
void write_points(const std::filesystem::path& path, const PointSet& points,
                  const std::string& comment = {});

/// 12 significant digits, '.' decimal point, independent of locale.
std::string format_number(double value);

} // namespace nimmo

#endif
