// nimmo: run experiments, generate reference sets and score point files.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "nimmo/assessment.hpp"
#include "nimmo/harness.hpp"
#include "nimmo/point_io.hpp"
#include "nimmo/problems.hpp"

namespace fs = std::filesystem;
using namespace nimmo;

namespace {

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> runs;
    std::optional<std::size_t> budget;
    std::optional<std::string> out;
    std::optional<std::size_t> workers;
};

void add_overrides(CLI::App* cmd, Overrides& o)
{
    cmd->add_option("--seed", o.seed, "Base seed");
    cmd->add_option("--runs", o.runs, "Runs per (problem, algorithm)")->check(CLI::PositiveNumber);
    cmd->add_option("--budget", o.budget, "Evaluations per run")->check(CLI::PositiveNumber);
    cmd->add_option("--out", o.out, "Output directory");
    cmd->add_option("--workers", o.workers, "Concurrent runs (0 = hardware threads)");
}

void apply(ExperimentSpec& spec, const Overrides& o)
{
    if (o.seed)
        spec.base_seed = *o.seed;
    if (o.runs)
        spec.runs = *o.runs;
    if (o.budget)
        spec.budget = *o.budget;
    if (o.out)
        spec.output_dir = *o.out;
    if (o.workers)
        spec.workers = *o.workers;
    spec.validate();
}

int execute(const ExperimentSpec& spec)
{
    std::cerr << "running " << spec.problems.size() << " problem(s) x " << spec.algorithms.size()
              << " algorithm(s) x " << spec.runs << " run(s)\n";
    const auto result = run_experiment(spec);
    const auto summary = aggregate(result.records);
    export_results(result.records, summary, spec.output_dir);

    for (const auto& row : summary) {
        std::printf("%-14s %-16s %-5s mean=%-14s median=%s\n", row.problem.c_str(),
                    row.algorithm.c_str(), row.indicator.c_str(),
                    format_number(row.mean).c_str(), format_number(row.median).c_str());
    }
    for (const auto& r : result.records) {
        if (r.failed)
            std::cerr << "failed: " << r.problem << " / " << r.algorithm << " run " << r.run
                      << ": " << r.error << '\n';
    }
    std::cerr << "results in " << spec.output_dir.string() << '\n';
    return result.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Niching indicator-based multi-modal optimizer"};
    app.require_subcommand(1);

    std::string spec_path;
    Overrides overrides;

    auto* run_cmd = app.add_subcommand("run", "Run an experiment described by a JSON spec");
    run_cmd->add_option("--spec", spec_path, "Experiment spec file")->required()->check(CLI::ExistingFile);
    add_overrides(run_cmd, overrides);

    std::string sweep_param;
    std::vector<double> sweep_values;
    std::size_t subset_size = 100;
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "Run one base algorithm over a grid of T fractions or population sizes");
    sweep_cmd->add_option("--spec", spec_path, "Experiment spec with one base algorithm")
        ->required()
        ->check(CLI::ExistingFile);
    sweep_cmd->add_option("--parameter", sweep_param, "T or mu")
        ->required()
        ->check(CLI::IsMember({"T", "mu"}));
    sweep_cmd->add_option("--values", sweep_values, "T fractions of mu, or population sizes")
        ->required();
    sweep_cmd->add_option("--subset-size", subset_size,
                          "Members scored per run in a mu sweep")
        ->check(CLI::PositiveNumber);
    add_overrides(sweep_cmd, overrides);

    std::string problem_name;
    std::optional<std::size_t> num_objectives, num_variables;
    std::size_t ref_size = 5000;
    std::uint64_t ref_seed = 1;
    std::string ref_out = ".";
    auto* refset_cmd = app.add_subcommand("refset", "Sample reference sets for a problem");
    refset_cmd->add_option("--problem", problem_name, "Problem name")->required();
    refset_cmd->add_option("--objectives,-M", num_objectives, "Objectives (polygon problems)");
    refset_cmd->add_option("--variables,-D", num_variables, "Variables (Omni-test)");
    refset_cmd->add_option("--size,-n", ref_size, "Points per set")->check(CLI::PositiveNumber);
    refset_cmd->add_option("--seed", ref_seed, "Sampling seed");
    refset_cmd->add_option("--out", ref_out, "Output directory");

    std::string sol_path, obj_path, ref_sol_path, ref_obj_path;
    auto* score_cmd = app.add_subcommand("score", "Compute IGD, IGDX, CR and PSP for point files");
    score_cmd->add_option("--problem", problem_name, "Problem name")->required();
    score_cmd->add_option("--objectives,-M", num_objectives, "Objectives (polygon problems)");
    score_cmd->add_option("--variables,-D", num_variables, "Variables (Omni-test)");
    score_cmd->add_option("--sol", sol_path, "Decision vectors")->required()->check(CLI::ExistingFile);
    score_cmd->add_option("--obj", obj_path, "Objective vectors (evaluated from --sol if omitted)")
        ->check(CLI::ExistingFile);
    auto* rs = score_cmd->add_option("--ref-sol", ref_sol_path, "Reference decision vectors")
                   ->check(CLI::ExistingFile);
    auto* ro = score_cmd->add_option("--ref-obj", ref_obj_path, "Reference objective vectors")
                   ->check(CLI::ExistingFile);
    rs->needs(ro);
    ro->needs(rs);
    score_cmd->add_option("--size,-n", ref_size, "Reference points when sampling")
        ->check(CLI::PositiveNumber);
    score_cmd->add_option("--seed", ref_seed, "Reference sampling seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            auto spec = load_spec(spec_path);
            apply(spec, overrides);
            return execute(spec);
        }
        if (sweep_cmd->parsed()) {
            auto spec = load_spec(spec_path);
            if (spec.algorithms.size() != 1)
                throw ConfigError("sweep: spec must list exactly one base algorithm");
            const auto kind = sweep_param == "T" ? SweepParameter::NeighborhoodFraction
                                                 : SweepParameter::PopulationSize;
            spec.algorithms = sweep_algorithms(spec.algorithms.front(), kind, sweep_values, subset_size);
            apply(spec, overrides);
            return execute(spec);
        }
        if (refset_cmd->parsed()) {
            const Problem p = make_problem(problem_name, num_objectives, num_variables);
            RngStream rng(ref_seed);
            const auto ref = generate_reference_sets(p, ref_size, rng);
            fs::create_directories(ref_out);
            const std::string stem = p.name;
            write_points(fs::path(ref_out) / (stem + ".sol"), ref.sol, p.name + " Pareto set sample");
            write_points(fs::path(ref_out) / (stem + ".obj"), ref.obj, p.name + " Pareto front sample");
            std::cerr << "wrote " << ref.sol.size() << " + " << ref.obj.size() << " points to "
                      << ref_out << '\n';
            return 0;
        }
        if (score_cmd->parsed()) {
            const Problem p = make_problem(problem_name, num_objectives, num_variables);
            const PointSet sol = read_points(fs::path(sol_path), p.num_variables);
            PointSet obj;
            if (!obj_path.empty()) {
                obj = read_points(fs::path(obj_path), p.num_objectives);
                if (obj.size() != sol.size())
                    throw IoError("--sol and --obj have different row counts");
            } else {
                for (const auto& x : sol)
                    obj.push_back(p.evaluate(x));
            }
            ReferenceSet ref;
            if (!ref_sol_path.empty()) {
                ref.sol = read_points(fs::path(ref_sol_path), p.num_variables);
                ref.obj = read_points(fs::path(ref_obj_path), p.num_objectives);
            } else {
                RngStream rng(ref_seed);
                ref = generate_reference_sets(p, ref_size, rng);
            }
            const auto r = evaluate_indicators(sol, obj, ref.sol, ref.obj, p.ps_box);
            std::printf("igd,igdx,cr,psp,archive_size\n%s,%s,%s,%s,%zu\n",
                        format_number(r.igd).c_str(), format_number(r.igdx).c_str(),
                        format_number(r.cr).c_str(), format_number(r.psp).c_str(), r.archive_size);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
