#include "nimmo/assessment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nimmo {

namespace {

double inverted_distance(const PointSet& approximation, const PointSet& reference,
                         const char* who)
{
    if (approximation.empty())
        throw ContractViolation(std::string(who) + ": approximation set is empty");
    if (reference.empty())
        throw ContractViolation(std::string(who) + ": reference set is empty");
    double total = 0.0;
    for (const auto& z : reference) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& a : approximation)
            nearest = std::min(nearest, euclidean_distance(a, z));
        total += nearest;
    }
    return total / static_cast<double>(reference.size());
}

} // namespace

std::vector<std::size_t> nondominated_indices(const PointSet& objectives)
{
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < objectives.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < objectives.size() && !dominated; ++j)
            dominated = j != i && dominates(objectives[j], objectives[i]);
        if (!dominated)
            keep.push_back(i);
    }
    return keep;
}

Population nondominated(const Population& members)
{
    PointSet objectives;
    objectives.reserve(members.size());
    for (const auto& m : members)
        objectives.push_back(m.f);
    Population out;
    for (std::size_t i : nondominated_indices(objectives))
        out.push_back(members[i]);
    return out;
}

double igd(const PointSet& approximation, const PointSet& reference)
{
    return inverted_distance(approximation, reference, "igd");
}

double igdx(const PointSet& approximation, const PointSet& reference)
{
    return inverted_distance(approximation, reference, "igdx");
}

double cover_rate(const PointSet& solutions, const Box& ps_box)
{
    if (solutions.empty())
        throw ContractViolation("cover_rate: approximation set is empty");
    const Box range = Box::enclosing(solutions);
    const std::size_t d = ps_box.dims();
    if (range.dims() != d)
        throw ContractViolation("cover_rate: dimension mismatch");
    double product = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
        const double ps_lo = ps_box.lower[i];
        const double ps_hi = ps_box.upper[i];
        double delta;
        if (ps_hi == ps_lo) {
            delta = 1.0;
        } else if (range.lower[i] >= ps_hi || range.upper[i] <= ps_lo) {
            delta = 0.0;
        } else {
            const double overlap = std::min(ps_hi, range.upper[i]) - std::max(ps_lo, range.lower[i]);
            const double ratio = std::max(0.0, overlap) / (ps_hi - ps_lo);
            delta = ratio * ratio;
        }
        product *= delta;
    }
    return std::pow(product, 1.0 / (2.0 * static_cast<double>(d)));
}

PspValue psp(double cr, double igdx_value)
{
    if (igdx_value == 0.0)
        return {std::numeric_limits<double>::infinity(), true};
    return {cr / igdx_value, false};
}

IndicatorReport evaluate_indicators(const PointSet& solutions, const PointSet& objectives,
                                    const PointSet& reference_sol, const PointSet& reference_obj,
                                    const Box& ps_box)
{
    IndicatorReport report;
    report.archive_size = solutions.size();
    report.igd = igd(objectives, reference_obj);
    report.igdx = igdx(solutions, reference_sol);
    report.cr = cover_rate(solutions, ps_box);
    const PspValue p = psp(report.cr, report.igdx);
    report.psp = p.value;
    report.psp_infinite = p.perfect_cover;
    return report;
}

std::vector<std::size_t> subset_select_indices(const PointSet& solutions, std::size_t k,
                                               const Bounds& b, RngStream& rng)
{
    const std::size_t n = solutions.size();
    if (k > n)
        throw ContractViolation("subset_select: k exceeds the population size");
    std::vector<std::size_t> chosen;
    if (k == 0)
        return chosen;
    chosen.reserve(k);
    std::vector<bool> taken(n, false);
    // nearest[i]: distance from member i to the closest selected member
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());

    std::size_t next = static_cast<std::size_t>(rng.below(n));
    while (true) {
        chosen.push_back(next);
        taken[next] = true;
        if (chosen.size() == k)
            break;
        for (std::size_t i = 0; i < n; ++i) {
            if (!taken[i])
                nearest[i] = std::min(nearest[i],
                                      normalized_distance_unchecked(solutions[i], solutions[next], b));
        }
        double best = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!taken[i] && nearest[i] > best) {
                best = nearest[i];
                next = i;
            }
        }
    }
    return chosen;
}

Population subset_select(const Population& members, std::size_t k, const Bounds& b,
                         RngStream& rng)
{
    PointSet xs;
    xs.reserve(members.size());
    for (const auto& m : members)
        xs.push_back(m.x);
    Population out;
    for (std::size_t i : subset_select_indices(xs, k, b, rng))
        out.push_back(members[i]);
    return out;
}

} // namespace nimmo
