#ifndef NIMMO_VARIATION_HPP
#define NIMMO_VARIATION_HPP

#include <functional>
#include <utility>

#include "nimmo/rng.hpp"
#include "nimmo/types.hpp"

namespace nimmo {

struct OperatorConfig {
    double crossover_probability = 1.0;   // p_c
    double crossover_eta = 20.0;          // eta_c
    double mutation_probability = -1.0;   // p_m; negative means 1/D
    double mutation_eta = 20.0;           // eta_m

    /// Throws ConfigError if a probability is outside [0, 1] or an index is
    /// not positive.
    void validate() const;

    /// Copy with p_m = 1/D filled in when it was left at the default.
    OperatorConfig resolved(std::size_t num_variables) const;
};

using ObjectiveFunction = std::function<Vector(std::span<const double>)>;

/// `mu` individuals drawn uniformly inside the bounds and evaluated.
Population init_population(std::size_t mu, const Bounds& b, const ObjectiveFunction& evaluate,
                           RngStream& rng);

/// Spread factor for a uniform draw u in [0, 1): u = 0.5 gives beta = 1.
double sbx_spread_factor(double u, double eta);

/// Recombines one variable with the given spread factor. The children's
/// midpoint equals the parents' midpoint.
std::pair<double, double> sbx_blend(double p1, double p2, double beta) noexcept;

/// Simulated binary crossover. Each variable is recombined with probability
/// 0.5 (and only when the parents differ there); recombined values are then
/// swapped between the children with probability 0.5. Children are clipped
/// to the bounds.
std::pair<Vector, Vector> sbx_crossover(std::span<const double> p1, std::span<const double> p2,
                                        const OperatorConfig& cfg, const Bounds& b,
                                        RngStream& rng);

/// Bounded polynomial perturbation of a single value; u = 0.5 leaves it
/// unchanged and the result always lies in [lower, upper].
double polynomial_perturbation(double value, double lower, double upper, double u, double eta);

Vector polynomial_mutation(Vector x, const OperatorConfig& cfg, const Bounds& b, RngStream& rng);

} // namespace nimmo

#endif
