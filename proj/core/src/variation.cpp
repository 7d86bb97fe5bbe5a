#include "nimmo/variation.hpp"

#include <algorithm>
#include <cmath>

namespace nimmo {

namespace {

constexpr double kMinParentGap = 1.0e-14;

} // namespace

void OperatorConfig::validate() const
{
    if (!(crossover_probability >= 0.0 && crossover_probability <= 1.0))
        throw ConfigError("operators.crossover_probability must lie in [0, 1]");
    if (!(crossover_eta > 0.0))
        throw ConfigError("operators.crossover_eta must be positive");
    // Negative p_m is the "1/D" placeholder and is resolved later.
    if (std::isnan(mutation_probability) || mutation_probability > 1.0)
        throw ConfigError("operators.mutation_probability must lie in [0, 1]");
    if (!(mutation_eta > 0.0))
        throw ConfigError("operators.mutation_eta must be positive");
}

OperatorConfig OperatorConfig::resolved(std::size_t num_variables) const
{
    OperatorConfig out = *this;
    if (out.mutation_probability < 0.0)
        out.mutation_probability = 1.0 / static_cast<double>(num_variables);
    out.validate();
    return out;
}

Population init_population(std::size_t mu, const Bounds& b, const ObjectiveFunction& evaluate,
                           RngStream& rng)
{
    if (mu < 2)
        throw ConfigError("population size must be at least 2");
    Population pop;
    pop.reserve(mu);
    for (std::size_t i = 0; i < mu; ++i) {
        Vector x(b.dims());
        for (std::size_t j = 0; j < x.size(); ++j)
            x[j] = rng.uniform(b.lower(j), b.upper(j));
        Vector f = evaluate(x);
        pop.push_back({std::move(x), std::move(f), std::nullopt});
    }
    return pop;
}

double sbx_spread_factor(double u, double eta)
{
    const double exponent = 1.0 / (eta + 1.0);
    if (u <= 0.5)
        return std::pow(2.0 * u, exponent);
    return std::pow(1.0 / (2.0 * (1.0 - u)), exponent);
}

std::pair<double, double> sbx_blend(double p1, double p2, double beta) noexcept
{
    const double c1 = 0.5 * ((1.0 + beta) * p1 + (1.0 - beta) * p2);
    const double c2 = 0.5 * ((1.0 - beta) * p1 + (1.0 + beta) * p2);
    return {c1, c2};
}

std::pair<Vector, Vector> sbx_crossover(std::span<const double> p1, std::span<const double> p2,
                                        const OperatorConfig& cfg, const Bounds& b,
                                        RngStream& rng)
{
    Vector c1(p1.begin(), p1.end());
    Vector c2(p2.begin(), p2.end());
    if (rng.uniform01() >= cfg.crossover_probability)
        return {std::move(c1), std::move(c2)};

    for (std::size_t j = 0; j < c1.size(); ++j) {
        if (rng.uniform01() > 0.5 || std::abs(p1[j] - p2[j]) <= kMinParentGap)
            continue;
        const double beta = sbx_spread_factor(rng.uniform01(), cfg.crossover_eta);
        auto [a, c] = sbx_blend(p1[j], p2[j], beta);
        if (rng.uniform01() <= 0.5)
            std::swap(a, c);
        c1[j] = std::clamp(a, b.lower(j), b.upper(j));
        c2[j] = std::clamp(c, b.lower(j), b.upper(j));
    }
    return {std::move(c1), std::move(c2)};
}

double polynomial_perturbation(double value, double lower, double upper, double u, double eta)
{
    const double range = upper - lower;
    const double delta1 = (value - lower) / range;
    const double delta2 = (upper - value) / range;
    const double power = 1.0 / (eta + 1.0);
    double deltaq;
    if (u < 0.5) {
        const double xy = 1.0 - delta1;
        const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta + 1.0);
        deltaq = std::pow(val, power) - 1.0;
    } else {
        const double xy = 1.0 - delta2;
        const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta + 1.0);
        deltaq = 1.0 - std::pow(val, power);
    }
    return std::clamp(value + deltaq * range, lower, upper);
}

Vector polynomial_mutation(Vector x, const OperatorConfig& cfg, const Bounds& b, RngStream& rng)
{
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (rng.uniform01() >= cfg.mutation_probability)
            continue;
        x[j] = polynomial_perturbation(x[j], b.lower(j), b.upper(j), rng.uniform01(),
                                       cfg.mutation_eta);
    }
    return x;
}

} // namespace nimmo
