#ifndef NIMMO_FITNESS_HPP
#define NIMMO_FITNESS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nimmo/types.hpp"

namespace nimmo {

enum class IndicatorKind { EpsilonPlus, Hypervolume };

std::string to_string(IndicatorKind kind);
IndicatorKind indicator_from_string(const std::string& name);

/// Binary indicator and scale factor used by the exponential fitness.
struct FitnessScheme {
    IndicatorKind kind = IndicatorKind::EpsilonPlus;
    double kappa = 0.05;
    /// Reference point for the hypervolume indicator, in normalized objective
    /// space. Defaults to 1.1 in every objective.
    std::optional<Vector> hd_reference;

    void validate() const;
};

/// Objective vectors mapped onto [0, 1] per objective using the extrema of
/// the set itself. Objectives with zero spread map to 0.
class NormalizedSet {
public:
    NormalizedSet(std::size_t size, std::size_t dims);

    std::size_t size() const noexcept { return size_; }
    std::size_t dims() const noexcept { return dims_; }

    std::span<const double> operator[](std::size_t i) const
    {
        return {values_.data() + i * dims_, dims_};
    }
    std::span<double> row(std::size_t i) { return {values_.data() + i * dims_, dims_}; }

    const Vector& f_min() const noexcept { return f_min_; }
    const Vector& f_max() const noexcept { return f_max_; }

private:
    friend NormalizedSet normalize_objectives(std::span<const Vector* const> set);

    std::size_t size_;
    std::size_t dims_;
    std::vector<double> values_;
    Vector f_min_;
    Vector f_max_;
};

NormalizedSet normalize_objectives(std::span<const Vector* const> set);
NormalizedSet normalize_objectives(const PointSet& set);

/// Additive epsilon indicator I(y, x): the smallest shift by which y weakly
/// dominates x, max_i (y_i - x_i).
double eps_plus(std::span<const double> y, std::span<const double> x);

/// Volume dominated by x but not by y, bounded by `ref`. Requires ref to be
/// strictly greater than both points in every objective.
double hd_indicator(std::span<const double> y, std::span<const double> x,
                    std::span<const double> ref);

struct FitnessAssignment {
    std::vector<double> values;
    double max_abs_indicator = 0.0;
    /// True when every indicator value was zero (all members identical in
    /// objective space); every member then gets fitness |R| - 1.
    bool degenerate = false;
};

/// F(x) = sum over y != x of exp(-I(y, x) / (kappa * Imax)), normalized over
/// exactly the given set. Smaller is better.
FitnessAssignment assign_fitness(std::span<const Vector* const> objectives,
                                 const FitnessScheme& scheme);
FitnessAssignment assign_fitness(const PointSet& objectives, const FitnessScheme& scheme);

} // namespace nimmo

#endif
