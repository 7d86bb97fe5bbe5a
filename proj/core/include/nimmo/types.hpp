#ifndef NIMMO_TYPES_HPP
#define NIMMO_TYPES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nimmo {

using Vector = std::vector<double>;
using PointSet = std::vector<Vector>;

/// Raised when a caller breaks an operation's precondition (length mismatch,
/// out-of-bounds input, empty set where one is required).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised for invalid algorithm or experiment configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Closed box [lower_j, upper_j] with lower_j < upper_j in every coordinate.
class Bounds {
public:
    Bounds(Vector lower, Vector upper);

    /// Same interval in every one of `dims` coordinates.
    static Bounds uniform(std::size_t dims, double lower, double upper);

    std::size_t dims() const noexcept { return lower_.size(); }
    const Vector& lower() const noexcept { return lower_; }
    const Vector& upper() const noexcept { return upper_; }
    double lower(std::size_t j) const { return lower_[j]; }
    double upper(std::size_t j) const { return upper_[j]; }
    double width(std::size_t j) const { return upper_[j] - lower_[j]; }

    bool contains(std::span<const double> x) const;

private:
    Vector lower_;
    Vector upper_;
};

/// Per-variable extent of a point set. Unlike Bounds, degenerate
/// intervals (lower == upper) are allowed.
struct Box {
    Vector lower;
    Vector upper;

    std::size_t dims() const noexcept { return lower.size(); }
    bool contains(std::span<const double> x, double tol = 0.0) const;
    static Box enclosing(const PointSet& points);
};

struct Individual {
    Vector x;
    Vector f;
    std::optional<double> fitness;
};

using Population = std::vector<Individual>;

/// Pareto dominance for minimization.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Euclidean distance after mapping each coordinate onto [0, 1] by the
/// bounds. Points on the boundary are legal.
double normalized_euclidean_distance(std::span<const double> x, std::span<const double> y,
                                     const Bounds& b);

/// Same as above without the containment check; used on hot paths where the
/// inputs are known to be feasible.
double normalized_distance_unchecked(std::span<const double> x, std::span<const double> y,
                                     const Bounds& b) noexcept;

double euclidean_distance(std::span<const double> x, std::span<const double> y) noexcept;

Vector clip_to_bounds(Vector x, const Bounds& b);

} // namespace nimmo

#endif
