#include "nimmo/algorithm.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "nimmo/assessment.hpp"

namespace nimmo {

namespace {

constexpr double kTieTolerance = 1e-12;

} // namespace

void AlgorithmConfig::validate() const
{
    if (population_size < 2)
        throw ConfigError("population_size must be at least 2");
    if (neighborhood_size < 1 || neighborhood_size > population_size)
        throw ConfigError("neighborhood_size must satisfy 1 <= T <= mu");
    if (max_evaluations < population_size)
        throw ConfigError("max_evaluations must be at least the population size");
    fitness.validate();
    operators.validate();
}

std::size_t AlgorithmConfig::default_neighborhood(std::size_t mu)
{
    return std::max<std::size_t>(1, mu / 10);
}

std::pair<std::size_t, std::size_t> select_parents(std::size_t population_size, RngStream& rng)
{
    if (population_size < 2)
        throw ConfigError("select_parents: population must hold at least two members");
    const auto a = static_cast<std::size_t>(rng.below(population_size));
    auto b = static_cast<std::size_t>(rng.below(population_size - 1));
    if (b >= a)
        ++b;
    return {a, b};
}

std::vector<std::size_t> select_neighbors(const Population& population, std::span<const double> u,
                                          std::size_t count, const Bounds& b)
{
    const std::size_t n = population.size();
    count = std::min(count, n);
    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i)
        dist[i] = normalized_distance_unchecked(population[i].x, u, b);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (count < n) {
        auto closer = [&dist](std::size_t l, std::size_t r) {
            return dist[l] < dist[r] || (dist[l] == dist[r] && l < r);
        };
        std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count),
                         order.end(), closer);
        order.resize(count);
    }
    std::sort(order.begin(), order.end());
    return order;
}

SelectionOutcome environmental_selection(std::span<const Vector* const> niche,
                                         const FitnessScheme& scheme, RngStream& rng)
{
    FitnessAssignment fit = assign_fitness(niche, scheme);
    const double worst = *std::max_element(fit.values.begin(), fit.values.end());
    const double threshold = worst - kTieTolerance * std::abs(worst);
    std::vector<std::size_t> tied;
    for (std::size_t i = 0; i < fit.values.size(); ++i) {
        if (fit.values[i] >= threshold)
            tied.push_back(i);
    }
    const std::size_t removed =
        tied.size() == 1 ? tied.front() : tied[static_cast<std::size_t>(rng.below(tied.size()))];
    return {removed, std::move(fit.values), fit.degenerate};
}

NimmoSolver::NimmoSolver(const Problem& problem, AlgorithmConfig cfg)
    : problem_(problem), cfg_(std::move(cfg)), rng_(cfg_.seed)
{
    cfg_.operators = cfg_.operators.resolved(problem_.num_variables);
    cfg_.validate();
    if (problem_.bounds.dims() != problem_.num_variables)
        throw ConfigError("problem bounds do not match its variable count");
    population_ = init_population(cfg_.population_size, problem_.bounds, problem_.objective, rng_);
    evaluations_ = cfg_.population_size;
}

NimmoSolver::Step NimmoSolver::step()
{
    const auto [a, b] = select_parents(population_.size(), rng_);
    auto children = sbx_crossover(population_[a].x, population_[b].x, cfg_.operators,
                                  problem_.bounds, rng_);
    Vector child_x = polynomial_mutation(std::move(children.first), cfg_.operators,
                                         problem_.bounds, rng_);
    child_x = clip_to_bounds(std::move(child_x), problem_.bounds);
    Individual child{child_x, problem_.evaluate(child_x), std::nullopt};
    ++evaluations_;

    Step out;
    out.neighbors = select_neighbors(population_, child.x, cfg_.neighborhood_size, problem_.bounds);

    // Niche in ascending slot order with the child last.
    std::vector<const Vector*> niche;
    niche.reserve(out.neighbors.size() + 1);
    for (std::size_t slot : out.neighbors)
        niche.push_back(&population_[slot].f);
    niche.push_back(&child.f);

    const SelectionOutcome sel = environmental_selection(niche, cfg_.fitness, rng_);
    for (std::size_t i = 0; i < out.neighbors.size(); ++i)
        population_[out.neighbors[i]].fitness = sel.fitness[i];
    if (sel.removed < out.neighbors.size()) {
        const std::size_t slot = out.neighbors[sel.removed];
        child.fitness = sel.fitness.back();
        population_[slot] = std::move(child);
        out.replaced = slot;
    }
    ++iterations_;
    assert(population_.size() == cfg_.population_size);
    return out;
}

RunResult run(const Problem& problem, const AlgorithmConfig& cfg, const RunOptions& options)
{
    NimmoSolver solver(problem, cfg);
    RunResult result;
    const bool tracing = options.trace_interval > 0 && options.trace;
    std::size_t next_trace = options.trace_interval;
    auto record = [&] {
        result.trace.push_back({solver.evaluations(), options.trace(solver.population())});
    };
    if (tracing) {
        record();
        while (next_trace <= solver.evaluations())
            next_trace += options.trace_interval;
    }
    while (!solver.done()) {
        solver.step();
        if (tracing && solver.evaluations() >= next_trace) {
            record();
            next_trace += options.trace_interval;
        }
    }
    result.final_population = solver.population();
    result.nondominated = nondominated(result.final_population);
    result.evaluations_used = solver.evaluations();
    result.iterations = solver.iterations();
    return result;
}

} // namespace nimmo
