#ifndef NIMMO_HARNESS_HPP
#define NIMMO_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nimmo/algorithm.hpp"
#include "nimmo/assessment.hpp"
#include "nimmo/problems.hpp"

namespace nimmo {

struct ProblemSpec {
    std::string name;
    std::optional<std::size_t> objectives; ///< polygon problems
    std::optional<std::size_t> variables;  ///< omnitest
    /// External reference files; both or neither.
    std::optional<std::filesystem::path> reference_sol;
    std::optional<std::filesystem::path> reference_obj;
};

struct AlgorithmSpec {
    std::string name;
    std::optional<std::size_t> population_size;
    std::optional<std::size_t> neighborhood_size;
    /// T = floor(fraction * mu) when neighborhood_size is not given.
    std::optional<double> neighborhood_fraction;
    FitnessScheme fitness;
    OperatorConfig operators;
    /// When set, indicators are computed on this many members picked from the
    /// final population by max-min subset selection instead of on its
    /// nondominated subset.
    std::optional<std::size_t> subset_size;
};

struct ExperimentSpec {
    std::vector<ProblemSpec> problems;
    std::vector<AlgorithmSpec> algorithms;
    std::size_t runs = 31;
    std::size_t budget = 10'000;
    std::uint64_t base_seed = 1;
    std::size_t reference_size = 5'000;
    std::filesystem::path output_dir = "results";
    std::size_t workers = 0; ///< 0: one per hardware thread
    bool dump_points = true;

    /// Throws ConfigError with the offending field in the message.
    void validate() const;
};

/// Population size by objective count: 200, 210, 210, 156, 210, 230, 135 for
/// M = 2, 3, 5, 8, 9, 10, 15; 200 otherwise.
std::size_t default_population_size(std::size_t num_objectives);

/// Concrete configuration of `algo` on `problem`.
AlgorithmConfig resolve_config(const AlgorithmSpec& algo, const Problem& problem,
                               std::size_t budget, std::uint64_t seed);

ExperimentSpec parse_spec(const std::string& json_text);
ExperimentSpec load_spec(const std::filesystem::path& path);

/// Builds the algorithm list of a T sweep (values are fractions of mu) or a
/// mu sweep (values are population sizes, scored on `subset_size` members).
enum class SweepParameter { NeighborhoodFraction, PopulationSize };
std::vector<AlgorithmSpec> sweep_algorithms(const AlgorithmSpec& base, SweepParameter parameter,
                                            const std::vector<double>& values,
                                            std::size_t subset_size = 100);

struct RunRecord {
    std::string problem;
    std::string algorithm;
    std::size_t run = 0;
    std::uint64_t seed = 0;
    bool failed = false;
    std::string error;
    std::size_t evaluations = 0;
    IndicatorReport report;
    std::string solution_file;
    std::string objective_file;
};

struct ExperimentResult {
    std::vector<RunRecord> records; ///< sorted by (problem, algorithm, run) in spec order
    std::size_t failures = 0;
};

/// Reference sets for a problem spec: loaded from files when given,
/// otherwise sampled with a stream derived from the base seed.
ReferenceSet reference_sets_for(const ProblemSpec& spec, const Problem& problem,
                                std::size_t size, std::uint64_t base_seed,
                                std::size_t problem_index);

Problem build_problem(const ProblemSpec& spec);

ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Runs the algorithms of `spec` on caller-supplied problems and reference
/// sets; `spec.problems` is ignored. A run whose configuration or evaluation
/// throws is recorded as failed.
ExperimentResult run_experiment(const ExperimentSpec& spec, const std::vector<Problem>& problems,
                                const std::vector<ReferenceSet>& references);

struct SummaryRow {
    std::string problem;
    std::string algorithm;
    std::string indicator;
    double mean = 0.0;
    double median = 0.0;
    std::optional<double> rank; ///< rank among algorithms on this problem (by mean)
    std::size_t runs = 0;
    std::size_t failed = 0;
};

inline const std::vector<std::string>& indicator_names()
{
    static const std::vector<std::string> names{"igd", "igdx", "psp", "cr"};
    return names;
}

/// Per (problem, algorithm, indicator) mean and median over successful runs.
/// Ranks are filled in per problem and indicator.
std::vector<SummaryRow> aggregate(const std::vector<RunRecord>& records);

/// Average rank per algorithm across problems for one indicator. Lower is
/// better for igd/igdx, higher for psp/cr; ties share the mean rank. Throws
/// ConfigError listing missing (problem, algorithm) cells.
std::map<std::string, double> friedman_ranks(const std::vector<SummaryRow>& summary,
                                             const std::string& indicator);

/// Writes summary.csv, runs.csv and ranks.csv into `out_dir`.
void export_results(const std::vector<RunRecord>& records, const std::vector<SummaryRow>& summary,
                    const std::filesystem::path& out_dir);

std::vector<RunRecord> read_runs_csv(const std::filesystem::path& path);
std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& path);

} // namespace nimmo

#endif
