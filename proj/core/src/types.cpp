#include "nimmo/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nimmo {

Bounds::Bounds(Vector lower, Vector upper) : lower_(std::move(lower)), upper_(std::move(upper))
{
    if (lower_.empty() || lower_.size() != upper_.size())
        throw ContractViolation("Bounds: lower and upper must have the same nonzero length");
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        if (!(lower_[j] < upper_[j]))
            throw ContractViolation("Bounds: lower[" + std::to_string(j) + "] must be < upper");
    }
}

Bounds Bounds::uniform(std::size_t dims, double lower, double upper)
{
    return Bounds(Vector(dims, lower), Vector(dims, upper));
}

bool Bounds::contains(std::span<const double> x) const
{
    if (x.size() != dims())
        return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!(x[j] >= lower_[j] && x[j] <= upper_[j]))
            return false;
    }
    return true;
}

bool Box::contains(std::span<const double> x, double tol) const
{
    if (x.size() != dims())
        return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] < lower[j] - tol || x[j] > upper[j] + tol)
            return false;
    }
    return true;
}

Box Box::enclosing(const PointSet& points)
{
    if (points.empty())
        throw ContractViolation("Box::enclosing: empty point set");
    Box box{points.front(), points.front()};
    for (const auto& p : points) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            box.lower[j] = std::min(box.lower[j], p[j]);
            box.upper[j] = std::max(box.upper[j], p[j]);
        }
    }
    return box;
}

bool dominates(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size() || a.empty())
        throw ContractViolation("dominates: objective vectors must have equal nonzero length");
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i])
            return false;
        if (a[i] < b[i])
            strictly_better = true;
    }
    return strictly_better;
}

double normalized_distance_unchecked(std::span<const double> x, std::span<const double> y,
                                     const Bounds& b) noexcept
{
    double sum = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double d = (x[j] - y[j]) / b.width(j);
        sum += d * d;
    }
    return std::sqrt(sum);
}

double normalized_euclidean_distance(std::span<const double> x, std::span<const double> y,
                                     const Bounds& b)
{
    if (!b.contains(x) || !b.contains(y))
        throw ContractViolation("normalized_euclidean_distance: input outside bounds");
    return normalized_distance_unchecked(x, y, b);
}

double euclidean_distance(std::span<const double> x, std::span<const double> y) noexcept
{
    double sum = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double d = x[j] - y[j];
        sum += d * d;
    }
    return std::sqrt(sum);
}

Vector clip_to_bounds(Vector x, const Bounds& b)
{
    if (x.size() != b.dims())
        throw ContractViolation("clip_to_bounds: dimension mismatch");
    for (std::size_t j = 0; j < x.size(); ++j)
        x[j] = std::clamp(x[j], b.lower(j), b.upper(j));
    return x;
}

} // namespace nimmo
