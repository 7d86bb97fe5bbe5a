#include "nimmo/point_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nimmo {

namespace {

bool parse_double(std::string_view token, double& out)
{
    // from_chars for double is locale-independent
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    if (first != last && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

} // namespace

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

PointSet read_points(std::istream& in, std::optional<std::size_t> expected_dims,
                     const std::string& source)
{
    PointSet points;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        std::istringstream fields(line);
        std::string token;
        Vector p;
        while (fields >> token) {
            double v;
            if (!parse_double(token, v))
                throw IoError(source + ":" + std::to_string(line_no) + ": bad number '" + token + "'");
            p.push_back(v);
        }
        const std::size_t want = expected_dims ? *expected_dims
                                               : (points.empty() ? p.size() : points.front().size());
        if (p.size() != want) {
            throw IoError(source + ":" + std::to_string(line_no) + ": expected " +
                          std::to_string(want) + " columns, found " + std::to_string(p.size()));
        }
        points.push_back(std::move(p));
    }
    return points;
}

PointSet read_points(const std::filesystem::path& path, std::optional<std::size_t> expected_dims)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path.string());
    return read_points(in, expected_dims, path.string());
}

void write_points(std::ostream& out, const PointSet& points, const std::string& comment)
{
    if (!comment.empty())
        out << "# " << comment << '\n';
    for (const auto& p : points) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j)
                out << ' ';
            out << format_number(p[j]);
        }
        out << '\n';
    }
}

void write_points(const std::filesystem::path& path, const PointSet& points,
                  const std::string& comment)
{
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write " + path.string());
    write_points(out, points, comment);
    if (!out)
        throw IoError("write failed for " + path.string());
}

} // namespace nimmo
