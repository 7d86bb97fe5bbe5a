#include <benchmark/benchmark.h>

#include "nimmo/algorithm.hpp"
#include "nimmo/assessment.hpp"
#include "nimmo/fitness.hpp"
#include "nimmo/problems.hpp"

using namespace nimmo;

namespace {

PointSet random_points(std::size_t n, std::size_t dims, std::uint64_t seed)
{
    RngStream rng(seed);
    PointSet out(n, Vector(dims));
    for (auto& v : out)
        for (auto& c : v)
            c = rng.uniform01();
    return out;
}

void BM_AssignFitness(benchmark::State& state)
{
    const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 2, 1);
    FitnessScheme scheme;
    for (auto _ : state)
        benchmark::DoNotOptimize(assign_fitness(pts, scheme));
}
BENCHMARK(BM_AssignFitness)->Arg(21)->Arg(201);

void BM_AssignFitnessHd(benchmark::State& state)
{
    const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 3, 2);
    FitnessScheme scheme;
    scheme.kind = IndicatorKind::Hypervolume;
    for (auto _ : state)
        benchmark::DoNotOptimize(assign_fitness(pts, scheme));
}
BENCHMARK(BM_AssignFitnessHd)->Arg(21)->Arg(201);

void BM_NimmoStep(benchmark::State& state)
{
    const Problem p = make_sympart(1);
    AlgorithmConfig cfg;
    cfg.population_size = 200;
    cfg.neighborhood_size = static_cast<std::size_t>(state.range(0));
    cfg.max_evaluations = std::numeric_limits<std::size_t>::max();
    cfg.seed = 3;
    NimmoSolver solver(p, cfg);
    for (auto _ : state)
        benchmark::DoNotOptimize(solver.step());
}
BENCHMARK(BM_NimmoStep)->Arg(20)->Arg(200);

void BM_Igd(benchmark::State& state)
{
    const auto approx = random_points(200, 2, 4);
    const auto ref = random_points(static_cast<std::size_t>(state.range(0)), 2, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(igd(approx, ref));
}
BENCHMARK(BM_Igd)->Arg(5000);

} // namespace

BENCHMARK_MAIN();
