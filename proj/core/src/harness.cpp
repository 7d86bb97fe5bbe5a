#include "nimmo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "nimmo/csv.hpp"
#include "nimmo/point_io.hpp"

namespace nimmo {

namespace {

using json = nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what)
{
    throw ConfigError(field + ": " + what);
}

template <typename T>
T get_field(const json& obj, const std::string& key, const std::string& path)
{
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        field_error(path + key, e.what());
    }
}

std::size_t get_count(const json& obj, const std::string& key, const std::string& path)
{
    const json& v = obj.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        field_error(path + key, "expected a non-negative integer");
    return v.get<std::size_t>();
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& path)
{
    if (!obj.is_object())
        field_error(path.empty() ? "<root>" : path, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key))
            field_error(path + key, "unknown field");
    }
}

OperatorConfig parse_operators(const json& obj, const std::string& path)
{
    check_keys(obj, {"crossover_probability", "crossover_eta", "mutation_probability",
                     "mutation_eta"},
               path);
    OperatorConfig ops;
    if (obj.contains("crossover_probability"))
        ops.crossover_probability = get_field<double>(obj, "crossover_probability", path);
    if (obj.contains("crossover_eta"))
        ops.crossover_eta = get_field<double>(obj, "crossover_eta", path);
    if (obj.contains("mutation_probability"))
        ops.mutation_probability = get_field<double>(obj, "mutation_probability", path);
    if (obj.contains("mutation_eta"))
        ops.mutation_eta = get_field<double>(obj, "mutation_eta", path);
    try {
        ops.validate();
    } catch (const ConfigError& e) {
        field_error(path.substr(0, path.size() - 1), e.what());
    }
    return ops;
}

AlgorithmSpec parse_algorithm(const json& obj, const std::string& path)
{
    check_keys(obj, {"name", "mu", "T", "t_fraction", "indicator", "kappa", "hd_reference",
                     "operators", "subset_size"},
               path);
    AlgorithmSpec a;
    a.name = get_field<std::string>(obj, "name", path);
    if (obj.contains("mu"))
        a.population_size = get_count(obj, "mu", path);
    if (obj.contains("T"))
        a.neighborhood_size = get_count(obj, "T", path);
    if (obj.contains("t_fraction"))
        a.neighborhood_fraction = get_field<double>(obj, "t_fraction", path);
    if (obj.contains("indicator")) {
        try {
            a.fitness.kind = indicator_from_string(get_field<std::string>(obj, "indicator", path));
        } catch (const ConfigError& e) {
            field_error(path + "indicator", e.what());
        }
    }
    if (obj.contains("kappa"))
        a.fitness.kappa = get_field<double>(obj, "kappa", path);
    if (obj.contains("hd_reference"))
        a.fitness.hd_reference = get_field<Vector>(obj, "hd_reference", path);
    if (obj.contains("operators"))
        a.operators = parse_operators(obj.at("operators"), path + "operators.");
    if (obj.contains("subset_size"))
        a.subset_size = get_count(obj, "subset_size", path);
    return a;
}

ProblemSpec parse_problem(const json& obj, const std::string& path)
{
    if (obj.is_string())
        return ProblemSpec{obj.get<std::string>(), {}, {}, {}, {}};
    check_keys(obj, {"name", "M", "D", "reference_sol", "reference_obj"}, path);
    ProblemSpec p;
    p.name = get_field<std::string>(obj, "name", path);
    if (obj.contains("M"))
        p.objectives = get_count(obj, "M", path);
    if (obj.contains("D"))
        p.variables = get_count(obj, "D", path);
    if (obj.contains("reference_sol"))
        p.reference_sol = get_field<std::string>(obj, "reference_sol", path);
    if (obj.contains("reference_obj"))
        p.reference_obj = get_field<std::string>(obj, "reference_obj", path);
    return p;
}

std::string safe_name(const std::string& s)
{
    std::string out;
    for (char c : s) {
        const bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ||
                          c == '.' || c == '=';
        out += keep ? c : '_';
    }
    return out;
}

bool lower_is_better(const std::string& indicator)
{
    if (indicator == "igd" || indicator == "igdx")
        return true;
    if (indicator == "psp" || indicator == "cr")
        return false;
    throw ConfigError("unknown indicator '" + indicator + "'");
}

double indicator_value(const IndicatorReport& r, const std::string& indicator)
{
    if (indicator == "igd")
        return r.igd;
    if (indicator == "igdx")
        return r.igdx;
    if (indicator == "psp")
        return r.psp;
    if (indicator == "cr")
        return r.cr;
    throw ConfigError("unknown indicator '" + indicator + "'");
}

double median_of(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

/// Ranks 1..n with ties sharing the mean rank.
std::vector<double> fractional_ranks(const std::vector<double>& values, bool ascending)
{
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ascending ? values[a] < values[b] : values[a] > values[b];
    });
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]])
            ++j;
        const double shared = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k)
            ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

double parse_number(const std::string& s, const std::string& where)
{
    if (s == "inf")
        return std::numeric_limits<double>::infinity();
    if (s == "-inf")
        return -std::numeric_limits<double>::infinity();
    if (s == "nan")
        return std::numeric_limits<double>::quiet_NaN();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw IoError(where + ": bad number '" + s + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& s, const std::string& where)
{
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw IoError(where + ": bad integer '" + s + "'");
    return v;
}

std::vector<csv::Row> read_csv_file(const std::filesystem::path& path, const csv::Row& header)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path.string());
    auto rows = csv::parse(in);
    if (rows.empty() || rows.front() != header)
        throw IoError(path.string() + ": unexpected header");
    rows.erase(rows.begin());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != header.size())
            throw IoError(path.string() + ":" + std::to_string(i + 2) + ": expected " +
                          std::to_string(header.size()) + " fields");
    }
    return rows;
}

const csv::Row kRunsHeader{"problem", "algorithm", "run",  "seed", "status",
                           "evaluations", "archive_size", "igd", "igdx", "cr",
                           "psp", "solution_file", "objective_file", "error"};
const csv::Row kSummaryHeader{"problem", "algorithm", "indicator", "mean",
                              "median",  "rank",      "runs",      "failed"};

} // namespace

void ExperimentSpec::validate() const
{
    if (problems.empty())
        throw ConfigError("problems: list is empty");
    if (algorithms.empty())
        throw ConfigError("algorithms: list is empty");
    if (runs < 1)
        throw ConfigError("runs: must be at least 1");
    if (runs > 0xFFFFFFFFull)
        throw ConfigError("runs: too many");
    if (problems.size() > 0xFFFF || algorithms.size() >= 0xFFFF)
        throw ConfigError("too many problems or algorithms");
    if (reference_size < 1)
        throw ConfigError("reference_size: must be at least 1");

    std::set<std::string> names;
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
        const auto& alg = algorithms[a];
        const std::string path = "algorithms[" + std::to_string(a) + "]";
        if (alg.name.empty())
            throw ConfigError(path + ".name: empty");
        if (!names.insert(alg.name).second)
            throw ConfigError(path + ".name: duplicate '" + alg.name + "'");
        if (alg.neighborhood_fraction &&
            !(*alg.neighborhood_fraction > 0.0 && *alg.neighborhood_fraction <= 1.0))
            throw ConfigError(path + ".t_fraction: must be in (0, 1]");
        if (alg.subset_size && *alg.subset_size < 1)
            throw ConfigError(path + ".subset_size: must be at least 1");
    }
    std::set<std::string> pnames;
    for (std::size_t p = 0; p < problems.size(); ++p) {
        const auto& prob = problems[p];
        const std::string path = "problems[" + std::to_string(p) + "]";
        if (prob.reference_sol.has_value() != prob.reference_obj.has_value())
            throw ConfigError(path + ": reference_sol and reference_obj must be given together");
        Problem built = [&] {
            try {
                return build_problem(prob);
            } catch (const std::exception& e) {
                throw ConfigError(path + ".name: " + e.what());
            }
        }();
        if (!pnames.insert(built.name).second)
            throw ConfigError(path + ": duplicate problem '" + built.name + "'");
        for (std::size_t a = 0; a < algorithms.size(); ++a) {
            try {
                resolve_config(algorithms[a], built, budget, 0).validate();
            } catch (const std::exception& e) {
                throw ConfigError("algorithms[" + std::to_string(a) + "] on " + built.name +
                                  ": " + e.what());
            }
        }
    }
}

std::size_t default_population_size(std::size_t num_objectives)
{
    switch (num_objectives) {
    case 2: return 200;
    case 3: return 210;
    case 5: return 210;
    case 8: return 156;
    case 9: return 210;
    case 10: return 230;
    case 15: return 135;
    default: return 200;
    }
}

AlgorithmConfig resolve_config(const AlgorithmSpec& algo, const Problem& problem,
                               std::size_t budget, std::uint64_t seed)
{
    AlgorithmConfig cfg;
    cfg.population_size = algo.population_size.value_or(
        default_population_size(problem.num_objectives));
    if (algo.neighborhood_size) {
        cfg.neighborhood_size = *algo.neighborhood_size;
    } else if (algo.neighborhood_fraction) {
        const double t = std::floor(*algo.neighborhood_fraction *
                                    static_cast<double>(cfg.population_size));
        cfg.neighborhood_size = std::clamp<std::size_t>(static_cast<std::size_t>(t), 1,
                                                        cfg.population_size);
    } else {
        cfg.neighborhood_size = AlgorithmConfig::default_neighborhood(cfg.population_size);
    }
    cfg.fitness = algo.fitness;
    cfg.operators = algo.operators;
    cfg.max_evaluations = budget;
    cfg.seed = seed;
    return cfg;
}

ExperimentSpec parse_spec(const std::string& json_text)
{
    json root;
    try {
        root = json::parse(json_text, nullptr, true, true);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("parse error: ") + e.what());
    }
    check_keys(root, {"problems", "algorithms", "runs", "budget", "base_seed", "reference_size",
                      "out", "workers", "dump_points", "sweep"},
               "");
    ExperimentSpec spec;
    if (!root.contains("problems") || !root.at("problems").is_array())
        throw ConfigError("problems: expected a list");
    for (std::size_t i = 0; i < root.at("problems").size(); ++i)
        spec.problems.push_back(
            parse_problem(root.at("problems")[i], "problems[" + std::to_string(i) + "]."));
    if (!root.contains("algorithms") || !root.at("algorithms").is_array())
        throw ConfigError("algorithms: expected a list");
    for (std::size_t i = 0; i < root.at("algorithms").size(); ++i)
        spec.algorithms.push_back(
            parse_algorithm(root.at("algorithms")[i], "algorithms[" + std::to_string(i) + "]."));
    if (root.contains("runs"))
        spec.runs = get_count(root, "runs", "");
    if (root.contains("budget"))
        spec.budget = get_count(root, "budget", "");
    if (root.contains("base_seed")) {
        const json& v = root.at("base_seed");
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
            field_error("base_seed", "expected an unsigned 64-bit integer");
        spec.base_seed = v.get<std::uint64_t>();
    }
    if (root.contains("reference_size"))
        spec.reference_size = get_count(root, "reference_size", "");
    if (root.contains("out"))
        spec.output_dir = get_field<std::string>(root, "out", "");
    if (root.contains("workers"))
        spec.workers = get_count(root, "workers", "");
    if (root.contains("dump_points"))
        spec.dump_points = get_field<bool>(root, "dump_points", "");

    if (root.contains("sweep")) {
        const json& sw = root.at("sweep");
        check_keys(sw, {"parameter", "values", "subset_size"}, "sweep.");
        const auto param = get_field<std::string>(sw, "parameter", "sweep.");
        SweepParameter kind;
        if (param == "T")
            kind = SweepParameter::NeighborhoodFraction;
        else if (param == "mu")
            kind = SweepParameter::PopulationSize;
        else
            field_error("sweep.parameter", "expected \"T\" or \"mu\"");
        const auto values = get_field<std::vector<double>>(sw, "values", "sweep.");
        if (values.empty())
            field_error("sweep.values", "list is empty");
        const std::size_t subset = sw.contains("subset_size") ? get_count(sw, "subset_size", "sweep.")
                                                              : 100;
        if (spec.algorithms.size() != 1)
            field_error("sweep", "needs exactly one base algorithm");
        spec.algorithms = sweep_algorithms(spec.algorithms.front(), kind, values, subset);
    }
    spec.validate();
    return spec;
}

ExperimentSpec load_spec(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open spec " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_spec(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

std::vector<AlgorithmSpec> sweep_algorithms(const AlgorithmSpec& base, SweepParameter parameter,
                                            const std::vector<double>& values,
                                            std::size_t subset_size)
{
    std::vector<AlgorithmSpec> out;
    for (double v : values) {
        AlgorithmSpec a = base;
        if (parameter == SweepParameter::NeighborhoodFraction) {
            if (!(v > 0.0 && v <= 1.0))
                throw ConfigError("sweep.values: T fractions must be in (0, 1]");
            a.neighborhood_size.reset();
            a.neighborhood_fraction = v;
            a.name = base.name + "-T" + format_number(v);
        } else {
            if (!(v >= 2.0) || v != std::floor(v))
                throw ConfigError("sweep.values: population sizes must be integers >= 2");
            a.population_size = static_cast<std::size_t>(v);
            a.neighborhood_size.reset();
            a.subset_size = subset_size;
            a.name = base.name + "-mu" + format_number(v);
        }
        out.push_back(std::move(a));
    }
    return out;
}

Problem build_problem(const ProblemSpec& spec)
{
    return make_problem(spec.name, spec.objectives, spec.variables);
}

ReferenceSet reference_sets_for(const ProblemSpec& spec, const Problem& problem,
                                std::size_t size, std::uint64_t base_seed,
                                std::size_t problem_index)
{
    if (spec.reference_sol) {
        ReferenceSet ref;
        ref.sol = read_points(*spec.reference_sol, problem.num_variables);
        ref.obj = read_points(*spec.reference_obj, problem.num_objectives);
        if (ref.sol.empty() || ref.obj.empty())
            throw IoError("empty reference set for " + problem.name);
        return ref;
    }
    // algorithm index 0xFFFF is reserved for reference sampling
    RngStream rng = RngStream::derive(base_seed, problem_index, 0xFFFF, 0);
    return generate_reference_sets(problem, size, rng);
}

ExperimentResult run_experiment(const ExperimentSpec& spec)
{
    spec.validate();
    std::vector<Problem> problems;
    std::vector<ReferenceSet> references;
    for (std::size_t p = 0; p < spec.problems.size(); ++p) {
        problems.push_back(build_problem(spec.problems[p]));
        references.push_back(reference_sets_for(spec.problems[p], problems.back(),
                                                spec.reference_size, spec.base_seed, p));
    }
    return run_experiment(spec, problems, references);
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const std::vector<Problem>& problems,
                                const std::vector<ReferenceSet>& references)
{
    if (problems.size() != references.size())
        throw ContractViolation("run_experiment: one reference set per problem required");
    if (problems.empty() || spec.algorithms.empty() || spec.runs < 1)
        throw ConfigError("run_experiment: nothing to run");

    const std::size_t n_alg = spec.algorithms.size();
    const std::size_t total = problems.size() * n_alg * spec.runs;
    std::vector<RunRecord> records(total);

    const std::filesystem::path point_dir = spec.output_dir / "points";
    if (spec.dump_points)
        std::filesystem::create_directories(point_dir);

    auto execute = [&](std::size_t task) {
        const std::size_t r = task % spec.runs;
        const std::size_t a = (task / spec.runs) % n_alg;
        const std::size_t p = task / (spec.runs * n_alg);
        const Problem& problem = problems[p];
        const AlgorithmSpec& alg = spec.algorithms[a];

        RunRecord& rec = records[task];
        rec.problem = problem.name;
        rec.algorithm = alg.name;
        rec.run = r;
        rec.seed = RngStream::derive_seed(spec.base_seed, p, a, r);
        try {
            const AlgorithmConfig cfg = resolve_config(alg, problem, spec.budget, rec.seed);
            RunResult result = run(problem, cfg);
            rec.evaluations = result.evaluations_used;

            Population archive;
            if (alg.subset_size) {
                RngStream pick = RngStream(rec.seed).split(1);
                archive = subset_select(result.final_population,
                                        std::min(*alg.subset_size, result.final_population.size()),
                                        problem.bounds, pick);
            } else {
                archive = std::move(result.nondominated);
            }
            PointSet sol, obj;
            for (const auto& ind : archive) {
                sol.push_back(ind.x);
                obj.push_back(ind.f);
            }
            rec.report = evaluate_indicators(sol, obj, references[p].sol, references[p].obj,
                                             problem.ps_box);
            if (spec.dump_points) {
                const std::string stem =
                    safe_name(problem.name) + "_" + safe_name(alg.name) + "_" + std::to_string(r);
                write_points(point_dir / (stem + ".sol"), sol);
                write_points(point_dir / (stem + ".obj"), obj);
                rec.solution_file = "points/" + stem + ".sol";
                rec.objective_file = "points/" + stem + ".obj";
            }
        } catch (const std::exception& e) {
            rec.failed = true;
            rec.error = e.what();
        } catch (...) {
            rec.failed = true;
            rec.error = "unknown failure";
        }
    };

    std::size_t workers = spec.workers ? spec.workers : std::thread::hardware_concurrency();
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(total, 1));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < total; t = next++)
            execute(t);
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(worker);
    }

    ExperimentResult out;
    out.records = std::move(records);
    out.failures = static_cast<std::size_t>(
        std::count_if(out.records.begin(), out.records.end(), [](const RunRecord& r) { return r.failed; }));
    return out;
}

std::vector<SummaryRow> aggregate(const std::vector<RunRecord>& records)
{
    // group in order of first appearance
    std::vector<std::pair<std::string, std::string>> keys;
    std::map<std::pair<std::string, std::string>, std::vector<const RunRecord*>> groups;
    for (const auto& r : records) {
        auto key = std::make_pair(r.problem, r.algorithm);
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted)
            keys.push_back(key);
        it->second.push_back(&r);
    }

    std::vector<SummaryRow> rows;
    for (const auto& key : keys) {
        const auto& group = groups.at(key);
        for (const auto& ind : indicator_names()) {
            SummaryRow row;
            row.problem = key.first;
            row.algorithm = key.second;
            row.indicator = ind;
            std::vector<double> values;
            for (const RunRecord* r : group) {
                if (r->failed)
                    ++row.failed;
                else
                    values.push_back(indicator_value(r->report, ind));
            }
            row.runs = values.size();
            if (values.empty()) {
                row.mean = row.median = std::numeric_limits<double>::quiet_NaN();
            } else {
                row.mean = std::accumulate(values.begin(), values.end(), 0.0) /
                           static_cast<double>(values.size());
                row.median = median_of(values);
            }
            rows.push_back(std::move(row));
        }
    }

    // per (problem, indicator) ranks over algorithms with a value
    std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> by_cell;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].runs > 0)
            by_cell[{rows[i].problem, rows[i].indicator}].push_back(i);
    }
    for (const auto& [cell, idx] : by_cell) {
        std::vector<double> means;
        for (std::size_t i : idx)
            means.push_back(rows[i].mean);
        const auto ranks = fractional_ranks(means, lower_is_better(cell.second));
        for (std::size_t k = 0; k < idx.size(); ++k)
            rows[idx[k]].rank = ranks[k];
    }
    return rows;
}

std::map<std::string, double> friedman_ranks(const std::vector<SummaryRow>& summary,
                                             const std::string& indicator)
{
    const bool ascending = lower_is_better(indicator);
    std::vector<std::string> problems, algorithms;
    std::map<std::pair<std::string, std::string>, double> cell;
    for (const auto& row : summary) {
        if (row.indicator != indicator)
            continue;
        if (std::find(problems.begin(), problems.end(), row.problem) == problems.end())
            problems.push_back(row.problem);
        if (std::find(algorithms.begin(), algorithms.end(), row.algorithm) == algorithms.end())
            algorithms.push_back(row.algorithm);
        if (row.runs > 0 && !std::isnan(row.mean))
            cell[{row.problem, row.algorithm}] = row.mean;
    }
    if (problems.empty())
        throw ConfigError("friedman_ranks: no rows for indicator '" + indicator + "'");

    std::string gaps;
    for (const auto& p : problems) {
        for (const auto& a : algorithms) {
            if (!cell.count({p, a}))
                gaps += (gaps.empty() ? "" : ", ") + std::string("(") + p + ", " + a + ")";
        }
    }
    if (!gaps.empty())
        throw ConfigError("friedman_ranks: missing cells " + gaps);

    std::map<std::string, double> total;
    for (const auto& p : problems) {
        std::vector<double> values;
        for (const auto& a : algorithms)
            values.push_back(cell.at({p, a}));
        const auto ranks = fractional_ranks(values, ascending);
        for (std::size_t k = 0; k < algorithms.size(); ++k)
            total[algorithms[k]] += ranks[k];
    }
    for (auto& [name, sum] : total)
        sum /= static_cast<double>(problems.size());
    return total;
}

void export_results(const std::vector<RunRecord>& records, const std::vector<SummaryRow>& summary,
                    const std::filesystem::path& out_dir)
{
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

    auto open = [&](const std::string& name) {
        std::ofstream out(out_dir / name, std::ios::binary);
        if (!out)
            throw IoError("cannot write " + (out_dir / name).string());
        return out;
    };

    {
        auto out = open("runs.csv");
        csv::write_row(out, kRunsHeader);
        for (const auto& r : records) {
            const auto num = [&](double v) { return r.failed ? std::string() : format_number(v); };
            csv::write_row(out, {r.problem, r.algorithm, std::to_string(r.run),
                                 std::to_string(r.seed), r.failed ? "failed" : "ok",
                                 std::to_string(r.evaluations),
                                 std::to_string(r.report.archive_size), num(r.report.igd),
                                 num(r.report.igdx), num(r.report.cr), num(r.report.psp),
                                 r.solution_file, r.objective_file, r.error});
        }
        if (!out)
            throw IoError("write failed for " + (out_dir / "runs.csv").string());
    }
    {
        auto out = open("summary.csv");
        csv::write_row(out, kSummaryHeader);
        for (const auto& s : summary) {
            csv::write_row(out, {s.problem, s.algorithm, s.indicator, format_number(s.mean),
                                 format_number(s.median), s.rank ? format_number(*s.rank) : "",
                                 std::to_string(s.runs), std::to_string(s.failed)});
        }
        if (!out)
            throw IoError("write failed for " + (out_dir / "summary.csv").string());
    }
    {
        auto out = open("ranks.csv");
        csv::write_row(out, {"indicator", "algorithm", "average_rank"});
        for (const auto& ind : indicator_names()) {
            std::map<std::string, double> ranks;
            try {
                ranks = friedman_ranks(summary, ind);
            } catch (const ConfigError&) {
                continue; // incomplete table; summary.csv still has per-problem ranks
            }
            for (const auto& [alg, rank] : ranks)
                csv::write_row(out, {ind, alg, format_number(rank)});
        }
    }
}

std::vector<RunRecord> read_runs_csv(const std::filesystem::path& path)
{
    const auto rows = read_csv_file(path, kRunsHeader);
    std::vector<RunRecord> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const std::string where = path.string() + ":" + std::to_string(i + 2);
        RunRecord r;
        r.problem = row[0];
        r.algorithm = row[1];
        r.run = parse_u64(row[2], where);
        r.seed = parse_u64(row[3], where);
        if (row[4] != "ok" && row[4] != "failed")
            throw IoError(where + ": bad status '" + row[4] + "'");
        r.failed = row[4] == "failed";
        r.evaluations = parse_u64(row[5], where);
        r.report.archive_size = parse_u64(row[6], where);
        if (!r.failed) {
            r.report.igd = parse_number(row[7], where);
            r.report.igdx = parse_number(row[8], where);
            r.report.cr = parse_number(row[9], where);
            r.report.psp = parse_number(row[10], where);
            r.report.psp_infinite = std::isinf(r.report.psp);
        }
        r.solution_file = row[11];
        r.objective_file = row[12];
        r.error = row[13];
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<SummaryRow> read_summary_csv(const std::filesystem::path& path)
{
    const auto rows = read_csv_file(path, kSummaryHeader);
    std::vector<SummaryRow> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const std::string where = path.string() + ":" + std::to_string(i + 2);
        SummaryRow s;
        s.problem = row[0];
        s.algorithm = row[1];
        s.indicator = row[2];
        s.mean = parse_number(row[3], where);
        s.median = parse_number(row[4], where);
        if (!row[5].empty())
            s.rank = parse_number(row[5], where);
        s.runs = parse_u64(row[6], where);
        s.failed = parse_u64(row[7], where);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace nimmo
