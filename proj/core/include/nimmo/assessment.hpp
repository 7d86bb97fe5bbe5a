#ifndef NIMMO_ASSESSMENT_HPP
#define NIMMO_ASSESSMENT_HPP

#include <cstddef>
#include <vector>

#include "nimmo/rng.hpp"
#include "nimmo/types.hpp"

namespace nimmo {

/// Indices of members not dominated by any other member, in input order.
/// Members with identical objective vectors are all kept.
std::vector<std::size_t> nondominated_indices(const PointSet& objectives);
Population nondominated(const Population& members);

/// Mean distance from each reference objective vector to its nearest member
/// of `approximation`.
double igd(const PointSet& approximation, const PointSet& reference);

/// Same as igd, in decision space and raw variable units.
double igdx(const PointSet& approximation, const PointSet& reference);

/// Cover rate of the Pareto-set box by the per-variable range of `solutions`.
/// Per variable the overlap ratio is squared; a degenerate Pareto range
/// counts as 1, a disjoint or negative overlap as 0.
double cover_rate(const PointSet& solutions, const Box& ps_box);

struct PspValue {
    double value;
    /// Set when IGDX is zero; value is then +infinity.
    bool perfect_cover;
};

PspValue psp(double cr, double igdx_value);

struct IndicatorReport {
    double igd = 0.0;
    double igdx = 0.0;
    double cr = 0.0;
    double psp = 0.0;
    bool psp_infinite = false;
    std::size_t archive_size = 0;
};

/// All indicators for one approximation set (decision and objective vectors
/// in matching order).
IndicatorReport evaluate_indicators(const PointSet& solutions, const PointSet& objectives,
                                    const PointSet& reference_sol, const PointSet& reference_obj,
                                    const Box& ps_box);

/// Greedy max-min subset of size k in normalized decision space. The first
/// member is drawn uniformly; each later pick maximizes the distance to its
/// nearest already-selected member (ties go to the lowest index). Returns
/// indices in selection order.
std::vector<std::size_t> subset_select_indices(const PointSet& solutions, std::size_t k,
                                               const Bounds& b, RngStream& rng);
Population subset_select(const Population& members, std::size_t k, const Bounds& b,
                         RngStream& rng);

} // namespace nimmo

#endif
