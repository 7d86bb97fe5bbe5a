#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "nimmo/assessment.hpp"
#include "nimmo/problems.hpp"
#include "oracles.hpp"

using namespace nimmo;

namespace {

PointSet random_set(RngStream& rng, std::size_t n, std::size_t d, double lo = 0.0, double hi = 1.0)
{
    PointSet out(n, Vector(d));
    for (auto& p : out)
        for (auto& v : p)
            v = rng.uniform(lo, hi);
    return out;
}

double min_pairwise(const PointSet& pts, const Bounds& b)
{
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::min(best, normalized_euclidean_distance(pts[i], pts[j], b));
    return best;
}

} // namespace

TEST_CASE("nondominated filter")
{
    CHECK(nondominated_indices({{0, 1}, {1, 0}, {1, 1}}) == std::vector<std::size_t>{0, 1});
    CHECK(nondominated_indices({{2, 2}, {2, 2}, {2, 2}}).size() == 3);
    CHECK(nondominated_indices({}).empty());

    RngStream rng(1);
    const PointSet set = random_set(rng, 200, 3);
    std::vector<std::size_t> expect;
    for (std::size_t i = 0; i < set.size(); ++i) {
        bool beaten = false;
        for (std::size_t j = 0; j < set.size(); ++j) {
            bool le = true, lt = false;
            for (std::size_t k = 0; k < 3; ++k) {
                le = le && set[j][k] <= set[i][k];
                lt = lt || set[j][k] < set[i][k];
            }
            beaten = beaten || (le && lt);
        }
        if (!beaten)
            expect.push_back(i);
    }
    CHECK(nondominated_indices(set) == expect);

    Population pop;
    for (const auto& f : set)
        pop.push_back({f, f, std::nullopt});
    CHECK(nondominated(pop).size() == expect.size());
}

TEST_CASE("igd and igdx hand values")
{
    CHECK(igd({{0, 0}}, {{0, 0}, {1, 1}}) == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-12));
    CHECK(igdx({{0}}, {{0}, {10}}) == doctest::Approx(5.0));
    const PointSet a{{0.3, 0.1}, {0.9, 0.4}};
    CHECK(igd(a, a) == 0.0);
    CHECK(igdx(a, a) == 0.0);
    CHECK_THROWS_AS(igd({}, a), ContractViolation);
    CHECK_THROWS_AS(igdx(a, {}), ContractViolation);
}

TEST_CASE("igd and igdx equal a brute-force pairwise scan exactly")
{
    RngStream rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = 1 + rng.below(5);
        const PointSet a = random_set(rng, 1 + rng.below(60), d, -3, 3);
        const PointSet z = random_set(rng, 1 + rng.below(200), d, -3, 3);
        CHECK(igd(a, z) == oracle::brute_inverted_distance(a, z));
        CHECK(igdx(a, z) == oracle::brute_inverted_distance(a, z));
    }
}

TEST_CASE("igd translation invariance, scaling and monotonicity")
{
    RngStream rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        PointSet a = random_set(rng, 20, 2), z = random_set(rng, 100, 2);
        const double base = igdx(a, z);
        PointSet at = a, zt = z, as = a, zs = z;
        for (auto& p : at) { p[0] += 7; p[1] -= 2; }
        for (auto& p : zt) { p[0] += 7; p[1] -= 2; }
        for (auto& p : as) { p[0] *= 3; p[1] *= 3; }
        for (auto& p : zs) { p[0] *= 3; p[1] *= 3; }
        CHECK(igdx(at, zt) == doctest::Approx(base).epsilon(1e-9));
        CHECK(igdx(as, zs) == doctest::Approx(3 * base).epsilon(1e-12));
        PointSet bigger = a;
        bigger.push_back({rng.uniform01(), rng.uniform01()});
        CHECK(igdx(bigger, z) <= base);
        CHECK(igd(bigger, z) <= igd(a, z));
    }
}

TEST_CASE("cover rate")
{
    const Box ps{{0.0, 0.0}, {1.0, 2.0}};
    CHECK(cover_rate({{0.0, 0.0}, {1.0, 2.0}}, ps) == doctest::Approx(1.0));
    CHECK(cover_rate({{0.0, 3.0}, {1.0, 4.0}}, ps) == 0.0);
    CHECK(cover_rate({{0.0}, {5.0}}, Box{{0.0}, {10.0}}) == doctest::Approx(0.5).epsilon(1e-12));
    // degenerate Pareto range counts as fully covered, even out of range
    CHECK(cover_rate({{0.0, 9.0}, {1.0, 9.5}}, Box{{0.0, 3.0}, {1.0, 3.0}}) == doctest::Approx(1.0));
    // a range touching the box only at its edge does not overlap
    CHECK(cover_rate({{1.0, 0.0}, {1.5, 2.0}}, ps) == 0.0);
    // wider than the box clamps to full coverage
    CHECK(cover_rate({{-5.0, -5.0}, {5.0, 5.0}}, ps) == doctest::Approx(1.0));
    CHECK_THROWS_AS(cover_rate({}, ps), ContractViolation);

    RngStream rng(4);
    for (int i = 0; i < 500; ++i) {
        const double cr = cover_rate(random_set(rng, 5, 2, -1, 3), ps);
        CHECK(cr >= 0.0);
        CHECK(cr <= 1.0);
    }
}

TEST_CASE("psp")
{
    CHECK(psp(1.0, 0.05).value == doctest::Approx(20.0));
    CHECK(psp(0.0, 0.3).value == 0.0);
    const auto perfect = psp(1.0, 0.0);
    CHECK(perfect.perfect_cover);
    CHECK(std::isinf(perfect.value));

    RngStream rng(5);
    const Problem p = make_sympart(1);
    const auto ref = generate_reference_sets(p, 500, rng);
    for (int i = 0; i < 100; ++i) {
        PointSet sol = random_set(rng, 10, 2, -20, 20);
        PointSet obj;
        for (const auto& x : sol)
            obj.push_back(p.evaluate(x));
        const auto r = evaluate_indicators(sol, obj, ref.sol, ref.obj, p.ps_box);
        CHECK(std::abs(r.psp - r.cr / r.igdx) <= 1e-12 * std::max(1.0, std::abs(r.psp)));
        CHECK(r.archive_size == 10);
    }
}

TEST_CASE("spread versus dense sets on Two-On-One")
{
    const Problem p = make_two_on_one();
    RngStream rng(6);
    const auto ref = generate_reference_sets(p, 5000, rng);
    PointSet branch;
    for (const auto& x : ref.sol)
        if (x[0] >= 0.0)
            branch.push_back(x);
    std::sort(branch.begin(), branch.end(), [](const Vector& a, const Vector& b) {
        return a[0] * a[0] + a[1] * a[1] < b[0] * b[0] + b[1] * b[1];
    });
    // dense: 20 points along one subset; spread: 10 positions on each subset
    PointSet one, spread;
    for (std::size_t i = 0; i < 20; ++i)
        one.push_back(branch[i * (branch.size() - 1) / 19]);
    for (std::size_t i = 0; i < 20; i += 2) {
        spread.push_back(one[i]);
        spread.push_back({-one[i][0], -one[i][1]});
    }
    auto objectives = [&](const PointSet& s) {
        PointSet f;
        for (const auto& x : s)
            f.push_back(p.evaluate(x));
        return f;
    };
    CHECK(igdx(spread, ref.sol) < igdx(one, ref.sol));
    CHECK(igd(objectives(spread), ref.obj) > igd(objectives(one), ref.obj));
}

TEST_CASE("subset selection")
{
    const auto b = Bounds::uniform(1, 0.0, 10.0);
    const PointSet pts{{0}, {1}, {10}};
    // find a seed whose first pick is member 0
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        RngStream probe(seed);
        if (probe.below(3) != 0)
            continue;
        RngStream rng(seed);
        const auto idx = subset_select_indices(pts, 2, b, rng);
        CHECK(idx == std::vector<std::size_t>{0, 2});
        break;
    }
    RngStream rng(1);
    auto all = subset_select_indices(pts, 3, b, rng);
    std::sort(all.begin(), all.end());
    CHECK(all == std::vector<std::size_t>{0, 1, 2});
    CHECK_THROWS_AS(subset_select_indices(pts, 4, b, rng), ContractViolation);
    CHECK(subset_select_indices(pts, 0, b, rng).empty());

    RngStream r1(9), r2(9);
    const PointSet many = [] {
        RngStream g(3);
        return random_set(g, 50, 2, 0, 10);
    }();
    const auto b2 = Bounds::uniform(2, 0.0, 10.0);
    CHECK(subset_select_indices(many, 10, b2, r1) == subset_select_indices(many, 10, b2, r2));
}

TEST_CASE("max-min selection beats random subsets")
{
    const auto b = Bounds::uniform(2, 0.0, 1.0);
    RngStream rng(7);
    int wins = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
        const PointSet pts = random_set(rng, 60, 2);
        PointSet chosen;
        for (std::size_t i : subset_select_indices(pts, 8, b, rng))
            chosen.push_back(pts[i]);
        const double greedy = min_pairwise(chosen, b);
        double best_random = 0.0;
        for (int r = 0; r < 1000; ++r) {
            std::vector<std::size_t> idx(pts.size());
            for (std::size_t i = 0; i < idx.size(); ++i)
                idx[i] = i;
            PointSet sample;
            for (std::size_t k = 0; k < 8; ++k) {
                const std::size_t j = k + rng.below(idx.size() - k);
                std::swap(idx[k], idx[j]);
                sample.push_back(pts[idx[k]]);
            }
            best_random = std::max(best_random, min_pairwise(sample, b));
        }
        wins += greedy >= best_random;
    }
    CHECK(wins >= 99);
}
