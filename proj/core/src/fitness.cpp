#include "nimmo/fitness.hpp"

#include <algorithm>
#include <cmath>

namespace nimmo {

namespace {

constexpr double kDefaultHdReference = 1.1;

std::vector<const Vector*> row_pointers(const PointSet& set)
{
    std::vector<const Vector*> rows;
    rows.reserve(set.size());
    for (const auto& v : set)
        rows.push_back(&v);
    return rows;
}

} // namespace

std::string to_string(IndicatorKind kind)
{
    return kind == IndicatorKind::EpsilonPlus ? "eps" : "hd";
}

IndicatorKind indicator_from_string(const std::string& name)
{
    if (name == "eps" || name == "epsilon" || name == "eps+")
        return IndicatorKind::EpsilonPlus;
    if (name == "hd" || name == "hypervolume")
        return IndicatorKind::Hypervolume;
    throw ConfigError("unknown indicator '" + name + "' (expected eps or hd)");
}

void FitnessScheme::validate() const
{
    if (!(kappa > 0.0))
        throw ConfigError("fitness.kappa must be positive");
}

NormalizedSet::NormalizedSet(std::size_t size, std::size_t dims)
    : size_(size), dims_(dims), values_(size * dims, 0.0), f_min_(dims), f_max_(dims)
{
}

NormalizedSet normalize_objectives(std::span<const Vector* const> set)
{
    if (set.size() < 2)
        throw ContractViolation("normalize_objectives: need at least two members");
    const std::size_t m = set.front()->size();
    NormalizedSet out(set.size(), m);
    out.f_min_ = *set.front();
    out.f_max_ = *set.front();
    for (const Vector* f : set) {
        if (f->size() != m)
            throw ContractViolation("normalize_objectives: objective vectors differ in length");
        for (std::size_t i = 0; i < m; ++i) {
            out.f_min_[i] = std::min(out.f_min_[i], (*f)[i]);
            out.f_max_[i] = std::max(out.f_max_[i], (*f)[i]);
        }
    }
    for (std::size_t k = 0; k < set.size(); ++k) {
        auto row = out.row(k);
        for (std::size_t i = 0; i < m; ++i) {
            const double spread = out.f_max_[i] - out.f_min_[i];
            row[i] = spread > 0.0 ? ((*set[k])[i] - out.f_min_[i]) / spread : 0.0;
        }
    }
    return out;
}

NormalizedSet normalize_objectives(const PointSet& set)
{
    const auto rows = row_pointers(set);
    return normalize_objectives(std::span<const Vector* const>(rows));
}

double eps_plus(std::span<const double> y, std::span<const double> x)
{
    double worst = y[0] - x[0];
    for (std::size_t i = 1; i < y.size(); ++i)
        worst = std::max(worst, y[i] - x[i]);
    return worst;
}

double hd_indicator(std::span<const double> y, std::span<const double> x,
                    std::span<const double> ref)
{
    if (y.size() != x.size() || ref.size() != x.size())
        throw ContractViolation("hd_indicator: dimension mismatch");
    // vol(box(x)) - vol(box(x) and box(y)); the intersection is the box
    // anchored at the coordinate-wise maximum.
    double own = 1.0;
    double shared = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(ref[i] > x[i] && ref[i] > y[i]))
            throw ContractViolation("hd_indicator: reference point must exceed both points");
        own *= ref[i] - x[i];
        shared *= ref[i] - std::max(x[i], y[i]);
    }
    return own - shared;
}

FitnessAssignment assign_fitness(std::span<const Vector* const> objectives,
                                 const FitnessScheme& scheme)
{
    const std::size_t n = objectives.size();
    if (n < 2)
        throw ContractViolation("assign_fitness: need at least two members");
    const NormalizedSet norm = normalize_objectives(objectives);

    Vector ref;
    if (scheme.kind == IndicatorKind::Hypervolume)
        ref = scheme.hd_reference.value_or(Vector(norm.dims(), kDefaultHdReference));

    // indicator[y * n + x] = I(y, x)
    std::vector<double> indicator(n * n, 0.0);
    double max_abs = 0.0;
    for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t x = 0; x < n; ++x) {
            if (x == y)
                continue;
            const double v = scheme.kind == IndicatorKind::EpsilonPlus
                                 ? eps_plus(norm[y], norm[x])
                                 : hd_indicator(norm[y], norm[x], ref);
            indicator[y * n + x] = v;
            max_abs = std::max(max_abs, std::abs(v));
        }
    }

    FitnessAssignment out;
    out.max_abs_indicator = max_abs;
    if (max_abs == 0.0) {
        out.values.assign(n, static_cast<double>(n - 1));
        out.degenerate = true;
        return out;
    }
    const double scale = -1.0 / (scheme.kappa * max_abs);
    out.values.assign(n, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        double sum = 0.0;
        for (std::size_t y = 0; y < n; ++y) {
            if (y != x)
                sum += std::exp(indicator[y * n + x] * scale);
        }
        out.values[x] = sum;
    }
    return out;
}

FitnessAssignment assign_fitness(const PointSet& objectives, const FitnessScheme& scheme)
{
    const auto rows = row_pointers(objectives);
    return assign_fitness(std::span<const Vector* const>(rows), scheme);
}

} // namespace nimmo
