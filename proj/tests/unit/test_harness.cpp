#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nimmo/csv.hpp"
#include "nimmo/harness.hpp"
#include "nimmo/point_io.hpp"

using namespace nimmo;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("nimmo_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::size_t line_count(const fs::path& p)
{
    std::ifstream in(p);
    std::size_t n = 0;
    std::string line;
    while (std::getline(in, line))
        ++n;
    return n;
}

RunRecord record(const std::string& problem, const std::string& algorithm, std::size_t run,
                 double igd, double igdx, double psp)
{
    RunRecord r;
    r.problem = problem;
    r.algorithm = algorithm;
    r.run = run;
    r.report.igd = igd;
    r.report.igdx = igdx;
    r.report.psp = psp;
    r.report.cr = 1.0;
    return r;
}

const SummaryRow& find_row(const std::vector<SummaryRow>& rows, const std::string& problem,
                           const std::string& algorithm, const std::string& indicator)
{
    for (const auto& r : rows)
        if (r.problem == problem && r.algorithm == algorithm && r.indicator == indicator)
            return r;
    throw std::runtime_error("row not found");
}

const char* kSmallSpec = R"({
    // two problems, two algorithms
    "problems": ["SYM-PART1", {"name": "polygon", "M": 3}],
    "algorithms": [
        {"name": "NIMMO", "mu": 20},
        {"name": "IBEA", "mu": 20, "t_fraction": 1.0}
    ],
    "runs": 3,
    "budget": 400,
    "base_seed": 99,
    "reference_size": 500,
    "workers": 2
})";

} // namespace

TEST_CASE("population schedule and neighborhood defaults")
{
    CHECK(default_population_size(2) == 200);
    CHECK(default_population_size(3) == 210);
    CHECK(default_population_size(5) == 210);
    CHECK(default_population_size(8) == 156);
    CHECK(default_population_size(9) == 210);
    CHECK(default_population_size(10) == 230);
    CHECK(default_population_size(15) == 135);

    const auto spec = parse_spec(R"({"problems": [{"name": "polygon", "M": 15}],
                                     "algorithms": [{"name": "NIMMO"}]})");
    const Problem p = build_problem(spec.problems[0]);
    const auto cfg = resolve_config(spec.algorithms[0], p, spec.budget, 1);
    CHECK(cfg.population_size == 135);
    CHECK(cfg.neighborhood_size == 13);
    CHECK(spec.runs == 31);
    CHECK(spec.budget == 10000);
    CHECK(spec.reference_size == 5000);

    AlgorithmSpec half;
    half.name = "half";
    half.neighborhood_fraction = 0.5;
    CHECK(resolve_config(half, make_sympart(1), 10000, 1).neighborhood_size == 100);
    half.neighborhood_size = 7;
    CHECK(resolve_config(half, make_sympart(1), 10000, 1).neighborhood_size == 7);
}

TEST_CASE("spec validation reports the field")
{
    auto message = [](const std::string& text) {
        try {
            parse_spec(text);
        } catch (const ConfigError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message(R"({"problems": ["MMF1"], "algorithms": []})").find("algorithms") !=
          std::string::npos);
    CHECK(message(R"({"problems": ["MMF1"], "algorithms": [{"name": "a"}], "runs": 0})")
              .find("runs") != std::string::npos);
    CHECK(message(R"({"problems": ["nope"], "algorithms": [{"name": "a"}]})")
              .find("problems[0]") != std::string::npos);
    CHECK(message(R"({"problems": ["MMF1"], "algorithms": [{"name": "a", "T": 500}]})")
              .find("algorithms[0]") != std::string::npos);
    CHECK(message(R"({"problems": ["MMF1"], "algorithms": [{"name": "a", "kappa": "x"}]})")
              .find("algorithms[0].kappa") != std::string::npos);
    CHECK(message(R"({"problems": ["MMF1"], "algorithms": [{"name": "a", "colour": 1}]})")
              .find("algorithms[0].colour") != std::string::npos);
    CHECK(message(R"({"problems": ["MMF1"], "algorithms": [{"name": "a"}, {"name": "a"}]})")
              .find("duplicate") != std::string::npos);
    CHECK(message(R"({"problems": ["MMF1"], "algorithms": [{"name": "a",
                      "operators": {"crossover_probability": 2}}]})")
              .find("algorithms[0].operators") != std::string::npos);
    CHECK(message("{ not json").find("parse error") != std::string::npos);
    CHECK(message(R"({"problems": [{"name": "MMF1", "reference_sol": "a.txt"}],
                      "algorithms": [{"name": "a"}]})")
              .find("together") != std::string::npos);
    CHECK_THROWS_AS(load_spec("/nonexistent/spec.json"), ConfigError);
}

TEST_CASE("sweeps")
{
    const auto spec = parse_spec(R"({"problems": ["SYM-PART1"],
        "algorithms": [{"name": "NIMMO", "mu": 100}],
        "sweep": {"parameter": "T", "values": [0.1, 0.5, 1.0]}})");
    REQUIRE(spec.algorithms.size() == 3);
    const Problem p = make_sympart(1);
    CHECK(resolve_config(spec.algorithms[0], p, 10000, 0).neighborhood_size == 10);
    CHECK(resolve_config(spec.algorithms[1], p, 10000, 0).neighborhood_size == 50);
    CHECK(resolve_config(spec.algorithms[2], p, 10000, 0).neighborhood_size == 100);

    AlgorithmSpec base;
    base.name = "NIMMO";
    const auto mus = sweep_algorithms(base, SweepParameter::PopulationSize, {100, 200, 400});
    REQUIRE(mus.size() == 3);
    CHECK(mus[2].population_size == 400u);
    CHECK(mus[2].subset_size == 100u);
    CHECK(resolve_config(mus[2], p, 10000, 0).neighborhood_size == 40);
    CHECK_THROWS_AS(sweep_algorithms(base, SweepParameter::PopulationSize, {10.5}), ConfigError);
    CHECK_THROWS_AS(sweep_algorithms(base, SweepParameter::NeighborhoodFraction, {1.5}), ConfigError);
}

TEST_CASE("aggregate")
{
    const auto single = aggregate({record("P", "A", 0, 0.5, 0.25, 4.0)});
    const auto& row = find_row(single, "P", "A", "igd");
    CHECK(row.mean == 0.5);
    CHECK(row.median == 0.5);

    std::vector<RunRecord> recs{record("P", "A", 0, 1, 1, 1), record("P", "A", 1, 2, 2, 2),
                                record("P", "A", 2, 3, 3, 3)};
    auto failed = record("P", "A", 3, 100, 100, 100);
    failed.failed = true;
    recs.push_back(failed);
    const auto rows = aggregate(recs);
    const auto& igd_row = find_row(rows, "P", "A", "igd");
    CHECK(igd_row.mean == 2.0);
    CHECK(igd_row.median == 2.0);
    CHECK(igd_row.runs == 3);
    CHECK(igd_row.failed == 1);

    recs.push_back(record("P", "A", 4, 10, 10, 10));
    CHECK(find_row(aggregate(recs), "P", "A", "igdx").median == 2.5);
}

TEST_CASE("friedman ranks")
{
    std::vector<RunRecord> recs;
    for (const char* p : {"P1", "P2", "P3"}) {
        recs.push_back(record(p, "best", 0, 0.1, 0.1, 9.0));
        recs.push_back(record(p, "mid", 0, 0.2, 0.2, 5.0));
        recs.push_back(record(p, "worst", 0, 0.3, 0.3, 1.0));
    }
    const auto rows = aggregate(recs);
    for (const char* ind : {"igd", "igdx", "psp"}) {
        const auto ranks = friedman_ranks(rows, ind);
        CHECK(ranks.at("best") == 1.0);
        CHECK(ranks.at("mid") == 2.0);
        CHECK(ranks.at("worst") == 3.0);
    }

    const auto split = aggregate({record("P1", "a", 0, 1, 1, 1), record("P1", "b", 0, 2, 2, 2),
                                  record("P2", "a", 0, 2, 2, 2), record("P2", "b", 0, 1, 1, 1)});
    const auto r = friedman_ranks(split, "igd");
    CHECK(r.at("a") == 1.5);
    CHECK(r.at("b") == 1.5);

    const auto tie = aggregate({record("P", "a", 0, 1, 1, 1), record("P", "b", 0, 1, 1, 1),
                                record("P", "c", 0, 2, 2, 2)});
    const auto t = friedman_ranks(tie, "igdx");
    CHECK(t.at("a") == 1.5);
    CHECK(t.at("b") == 1.5);
    CHECK(t.at("c") == 3.0);
    CHECK(find_row(tie, "P", "a", "igdx").rank == 1.5);

    auto gap = aggregate({record("P1", "a", 0, 1, 1, 1), record("P1", "b", 0, 2, 2, 2),
                          record("P2", "a", 0, 2, 2, 2)});
    try {
        friedman_ranks(gap, "igd");
        FAIL("expected an error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("(P2, b)") != std::string::npos);
    }
    CHECK_THROWS_AS(friedman_ranks(gap, "hv"), ConfigError);
}

TEST_CASE("csv quoting round-trips")
{
    const std::vector<csv::Row> rows{{"plain", "with,comma", "with \"quote\"", ""},
                                     {"multi\nline", "x", "", "3.5"}};
    std::stringstream buf;
    for (const auto& r : rows)
        csv::write_row(buf, r);
    CHECK(csv::parse(buf) == rows);
}

TEST_CASE("export round-trips")
{
    const fs::path dir = scratch("export");
    std::vector<RunRecord> recs{record("P1", "a", 0, 0.123456789012345, 1.5, 2.0 / 3.0),
                                record("P1", "b", 0, 1e-7, 2.5, 0.5)};
    recs[1].report.psp = std::numeric_limits<double>::infinity();
    recs[1].report.psp_infinite = true;
    recs[0].seed = 18446744073709551615ull;
    auto bad = record("P1", "a", 1, 0, 0, 0);
    bad.failed = true;
    bad.error = "boom, \"quoted\"";
    recs.push_back(bad);
    const auto summary = aggregate(recs);
    export_results(recs, summary, dir);

    const auto back = read_runs_csv(dir / "runs.csv");
    REQUIRE(back.size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(back[i].problem == recs[i].problem);
        CHECK(back[i].algorithm == recs[i].algorithm);
        CHECK(back[i].run == recs[i].run);
        CHECK(back[i].seed == recs[i].seed);
        CHECK(back[i].failed == recs[i].failed);
        CHECK(back[i].error == recs[i].error);
        if (!recs[i].failed) {
            CHECK(back[i].report.igd == doctest::Approx(recs[i].report.igd).epsilon(1e-11));
            if (std::isinf(recs[i].report.psp))
                CHECK(std::isinf(back[i].report.psp));
            else
                CHECK(back[i].report.psp == doctest::Approx(recs[i].report.psp).epsilon(1e-11));
        }
    }
    const auto summary_back = read_summary_csv(dir / "summary.csv");
    REQUIRE(summary_back.size() == summary.size());
    for (std::size_t i = 0; i < summary.size(); ++i) {
        CHECK(summary_back[i].problem == summary[i].problem);
        CHECK(summary_back[i].indicator == summary[i].indicator);
        if (std::isinf(summary[i].mean))
            CHECK(summary_back[i].mean == summary[i].mean);
        else
            CHECK(summary_back[i].mean == doctest::Approx(summary[i].mean).epsilon(1e-11));
        CHECK(summary_back[i].rank == summary[i].rank);
        CHECK(summary_back[i].runs == summary[i].runs);
    }

    // parse(export(x)) is a fixed point once values carry 12 digits
    const fs::path again = scratch("export_again");
    export_results(back, aggregate(back), again);
    CHECK(slurp(again / "runs.csv") == slurp(dir / "runs.csv"));

    CHECK(line_count(dir / "runs.csv") == recs.size() + 1);
    CHECK(line_count(dir / "summary.csv") == summary.size() + 1);
    CHECK(slurp(dir / "summary.csv").substr(0, 47) ==
          "problem,algorithm,indicator,mean,median,rank,ru");
    CHECK_THROWS_AS(export_results(recs, summary, "/proc/nimmo_cannot_write"), std::exception);
}

TEST_CASE("point files")
{
    std::stringstream in("# comment\n1 2.5\n\n  -3e-2\t4\n");
    const auto pts = read_points(in);
    REQUIRE(pts.size() == 2);
    CHECK(pts[1] == Vector{-0.03, 4});
    std::stringstream bad("1 2\n3\n");
    CHECK_THROWS_AS(read_points(bad), IoError);
    std::stringstream bad2("1 x\n");
    CHECK_THROWS_AS(read_points(bad2), IoError);
    std::stringstream wrong("1 2 3\n");
    CHECK_THROWS_AS(read_points(wrong, 2), IoError);

    std::stringstream out;
    write_points(out, {{0.1, 1.0 / 3.0}}, "note");
    CHECK(out.str() == "# note\n0.1 0.333333333333\n");
    CHECK(format_number(1e300) == "1e+300");
    CHECK(format_number(-0.5) == "-0.5");
}

TEST_CASE("small experiment end to end")
{
    const fs::path dir = scratch("experiment");
    auto spec = parse_spec(kSmallSpec);
    spec.output_dir = dir / "a";
    const auto result = run_experiment(spec);
    CHECK(result.records.size() == 2 * 2 * 3);
    CHECK(result.failures == 0);
    for (std::size_t i = 0; i < result.records.size(); ++i) {
        const auto& r = result.records[i];
        CHECK(r.run == i % 3);
        CHECK(r.evaluations == 400);
        CHECK(r.report.archive_size > 0);
        const Problem p = make_problem(r.problem == "3-Polygon" ? "polygon" : r.problem);
        const auto sol = read_points(spec.output_dir / r.solution_file, p.num_variables);
        const auto obj = read_points(spec.output_dir / r.objective_file, p.num_objectives);
        CHECK(sol.size() == r.report.archive_size);
        CHECK(obj.size() == sol.size());
        for (const auto& x : sol)
            CHECK(p.bounds.contains(x));
    }
    export_results(result.records, aggregate(result.records), spec.output_dir);

    // same seed, different worker count: byte-identical tables
    spec.output_dir = dir / "b";
    spec.workers = 1;
    const auto again = run_experiment(spec);
    export_results(again.records, aggregate(again.records), spec.output_dir);
    CHECK(slurp(dir / "a" / "summary.csv") == slurp(dir / "b" / "summary.csv"));
    CHECK(slurp(dir / "a" / "runs.csv") == slurp(dir / "b" / "runs.csv"));

    spec.output_dir = dir / "c";
    spec.base_seed = 100;
    const auto other = run_experiment(spec);
    export_results(other.records, aggregate(other.records), spec.output_dir);
    CHECK(slurp(dir / "a" / "runs.csv") != slurp(dir / "c" / "runs.csv"));
}

TEST_CASE("a failing run is isolated")
{
    const fs::path dir = scratch("failing");
    ExperimentSpec spec;
    spec.algorithms.push_back(AlgorithmSpec{"NIMMO", 10, 2, {}, {}, {}, {}});
    spec.runs = 2;
    spec.budget = 50;
    spec.output_dir = dir;
    spec.workers = 1;

    Problem good = make_sympart(1);
    Problem broken = make_sympart(1);
    broken.name = "broken";
    broken.objective = [](std::span<const double>) -> Vector { throw std::runtime_error("bad"); };
    RngStream rng(1);
    const auto ref = generate_reference_sets(good, 100, rng);
    const auto result = run_experiment(spec, {good, broken}, {ref, ref});
    REQUIRE(result.records.size() == 4);
    CHECK(result.failures == 2);
    CHECK_FALSE(result.records[0].failed);
    CHECK(result.records[2].failed);
    CHECK(result.records[2].error == "bad");
    const auto rows = aggregate(result.records);
    CHECK(find_row(rows, "broken", "NIMMO", "igd").failed == 2);
    CHECK(find_row(rows, "broken", "NIMMO", "igd").runs == 0);
    CHECK_THROWS_AS(friedman_ranks(rows, "igd"), ConfigError);
}

TEST_CASE("reference sets from files")
{
    const fs::path dir = scratch("refs");
    const Problem p = make_mmf(1);
    RngStream rng(3);
    const auto ref = generate_reference_sets(p, 50, rng);
    write_points(dir / "mmf1.sol", ref.sol);
    write_points(dir / "mmf1.obj", ref.obj);
    ProblemSpec ps{"MMF1", {}, {}, dir / "mmf1.sol", dir / "mmf1.obj"};
    const auto loaded = reference_sets_for(ps, p, 5000, 1, 0);
    CHECK(loaded.sol.size() == 50);
    CHECK(loaded.obj[3][1] == doctest::Approx(ref.obj[3][1]).epsilon(1e-11));
    ps.reference_obj = dir / "mmf1.sol.missing";
    CHECK_THROWS_AS(reference_sets_for(ps, p, 5000, 1, 0), IoError);
}
