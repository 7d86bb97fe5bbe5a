#ifndef NIMMO_ALGORITHM_HPP
#define NIMMO_ALGORITHM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nimmo/fitness.hpp"
#include "nimmo/problems.hpp"
#include "nimmo/rng.hpp"
#include "nimmo/types.hpp"
#include "nimmo/variation.hpp"

namespace nimmo {

struct AlgorithmConfig {
    std::size_t population_size = 200;  // mu
    std::size_t neighborhood_size = 20; // T; T == mu is the steady-state IBEA baseline
    FitnessScheme fitness;
    OperatorConfig operators;
    std::size_t max_evaluations = 10'000;
    std::uint64_t seed = 0;

    void validate() const;

    /// floor(0.1 * mu), at least 1.
    static std::size_t default_neighborhood(std::size_t mu);
};

/// Indicator values (or anything else) recorded every `trace_interval`
/// evaluations.
struct TracePoint {
    std::size_t evaluations;
    std::vector<double> values;
};

struct RunOptions {
    std::size_t trace_interval = 0;
    std::function<std::vector<double>(const Population&)> trace;
};

struct RunResult {
    Population final_population;
    Population nondominated;
    std::size_t evaluations_used = 0;
    std::size_t iterations = 0;
    std::vector<TracePoint> trace;
};

/// Two distinct member indices, uniform over ordered pairs.
std::pair<std::size_t, std::size_t> select_parents(std::size_t population_size, RngStream& rng);

/// The T members closest to `u` in normalized decision space, in ascending
/// index order. Distance ties go to the lower index.
std::vector<std::size_t> select_neighbors(const Population& population, std::span<const double> u,
                                          std::size_t count, const Bounds& b);

struct SelectionOutcome {
    std::size_t removed;              ///< position in the niche of the discarded member
    std::vector<double> fitness;      ///< fitness of every niche member
    bool degenerate = false;
};

/// Assigns fitness over exactly the given objective vectors and picks the
/// worst. Members within a relative 1e-12 of the maximum are tied; one of them
/// is drawn uniformly (the stream is only consumed on a tie).
SelectionOutcome environmental_selection(std::span<const Vector* const> niche,
                                         const FitnessScheme& scheme, RngStream& rng);

/// Step-by-step driver for one run.
class NimmoSolver {
public:
    NimmoSolver(const Problem& problem, AlgorithmConfig cfg);

    struct Step {
        std::vector<std::size_t> neighbors; ///< population slots forming the niche
        std::optional<std::size_t> replaced; ///< slot that received the child
    };

    bool done() const noexcept { return evaluations_ >= cfg_.max_evaluations; }

    /// One steady-state iteration: mate, vary, evaluate the child, form the
    /// niche and discard its worst member. The child takes the discarded
    /// member's slot; if the child itself is worst the population is unchanged.
    Step step();

    const Population& population() const noexcept { return population_; }
    std::size_t evaluations() const noexcept { return evaluations_; }
    std::size_t iterations() const noexcept { return iterations_; }
    const AlgorithmConfig& config() const noexcept { return cfg_; }

private:
    const Problem& problem_;
    AlgorithmConfig cfg_;
    RngStream rng_;
    Population population_;
    std::size_t evaluations_ = 0;
    std::size_t iterations_ = 0;
};

RunResult run(const Problem& problem, const AlgorithmConfig& cfg, const RunOptions& options = {});

} // namespace nimmo

#endif
