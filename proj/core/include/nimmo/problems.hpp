#ifndef NIMMO_PROBLEMS_HPP
#define NIMMO_PROBLEMS_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nimmo/pareto_set.hpp"
#include "nimmo/rng.hpp"
#include "nimmo/types.hpp"

namespace nimmo {

/// Raised when a reference set cannot be generated for a problem.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using SymmetryMap = std::function<Vector(std::span<const double>)>;

/// A bounded multi-objective benchmark problem.
struct Problem {
    std::string name;
    std::size_t num_objectives;
    std::size_t num_variables;
    Bounds bounds;
    /// Number of equivalent Pareto subsets.
    std::size_t n_same;
    std::function<Vector(std::span<const double>)> objective;
    /// Per-variable range of the true Pareto set (used by the cover rate).
    Box ps_box;
    /// Null when the Pareto set cannot be sampled.
    std::shared_ptr<const ParetoSetModel> pareto_set;
    /// Maps that take a Pareto-optimal x to an equivalent x' with f(x') == f(x).
    std::vector<SymmetryMap> symmetries;

    Vector evaluate(std::span<const double> x) const { return objective(x); }
};

struct ReferenceSet {
    PointSet sol; ///< Pareto-optimal decision vectors, uniform in decision space.
    PointSet obj; ///< Pareto-optimal objective vectors, uniform in objective space.
};

/// Regular polygons placed on a rectangular grid of cells.
struct PolygonLayout {
    std::size_t rows = 3;
    std::size_t cols = 3;
    Vector origin{0.0, 0.0};   ///< lower-left corner of the grid
    double spacing = 100.0 / 3.0;
    double radius = 8.0;       ///< circumradius of each polygon

    /// Bounds of the whole grid, used as the decision space.
    Bounds bounds() const;
    Vector center(std::size_t k) const;
};

/// K congruent regular M-gons on `layout`; objective i is the distance to the
/// nearest i-th vertex over all polygons. When `rotated`, polygon k is turned
/// by k*pi/(2K). Throws ConfigError when two polygons are close enough that
/// a point inside one is nearer to another's vertex.
Problem make_polygon(std::size_t num_objectives, std::size_t num_polygons,
                     const PolygonLayout& layout, bool rotated);

/// Standard 9-polygon instance on [0, 100]^2.
Problem make_polygon(std::size_t num_objectives, bool rotated = false);

/// Polygon problem from explicit vertex lists; polygons[k][i] is the i-th
/// vertex of polygon k. Polygons must be convex with vertices in order.
Problem make_polygon_from_vertices(std::vector<PointSet> polygons, Bounds bounds,
                                   std::string name);

/// SYM-PART 1 (plain), 2 (rotated) or 3 (rotated and distorted).
Problem make_sympart(int variant);

Problem make_omnitest(std::size_t num_variables = 5);

/// Symmetric Two-On-One instance: Pareto set point-symmetric about the origin.
Problem make_two_on_one();

Problem make_mmf(int id);

/// Problem by name: "sympart1".."sympart3", "omnitest", "two_on_one",
/// "mmf1".."mmf8", "polygon", "rpolygon". `num_objectives` applies to the
/// polygon problems, `num_variables` to omnitest.
Problem make_problem(const std::string& name, std::optional<std::size_t> num_objectives = {},
                     std::optional<std::size_t> num_variables = {});

/// Samples n Pareto-optimal solutions uniform in decision space and n
/// objective vectors uniform over the front.
ReferenceSet generate_reference_sets(const Problem& p, std::size_t n, RngStream& rng);

} // namespace nimmo

#endif
