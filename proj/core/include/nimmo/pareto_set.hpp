#ifndef NIMMO_PARETO_SET_HPP
#define NIMMO_PARETO_SET_HPP

#include <functional>
#include <span>
#include <vector>

#include "nimmo/rng.hpp"
#include "nimmo/types.hpp"

namespace nimmo {

/// Segment (two vertices) or triangle (three vertices) of a piecewise-linear
/// Pareto set in decision space.
struct Simplex {
    std::vector<Vector> vertices;
    /// Pieces flagged here together map onto the Pareto front exactly once;
    /// they are used for sampling uniformly in objective space.
    bool covers_front = false;
};

/// Piecewise-linear model of a problem's Pareto set. Curved sets are
/// approximated by dense polylines.
class ParetoSetModel {
public:
    explicit ParetoSetModel(std::vector<Simplex> pieces);

    const std::vector<Simplex>& pieces() const noexcept { return pieces_; }

    /// Bounding box of all vertices; encloses every sample.
    Box bounding_box() const;

    /// n points uniform over the set with respect to length/area in decision
    /// space.
    PointSet sample_solutions(std::size_t n, RngStream& rng) const;

    /// n decision vectors whose images are uniform over the front with
    /// respect to length/area in objective space. Only `covers_front` pieces
    /// are used.
    PointSet sample_front_preimages(std::size_t n,
                                    const std::function<Vector(std::span<const double>)>& f,
                                    RngStream& rng) const;

    /// Appends consecutive segments along `points`.
    static void add_polyline(std::vector<Simplex>& pieces, const PointSet& points,
                             bool covers_front);

    /// Triangulates a convex polygon (vertices in order) and refines every
    /// triangle `levels` times by midpoint subdivision.
    static void add_convex_polygon(std::vector<Simplex>& pieces, const PointSet& polygon,
                                   bool covers_front, int levels = 0);

private:
    std::vector<Simplex> pieces_;
};

/// Length of a segment or area of a triangle embedded in any dimension.
double simplex_measure(std::span<const Vector> vertices);

/// Uniform point inside a segment or triangle.
Vector sample_in_simplex(std::span<const Vector> vertices, RngStream& rng);

} // namespace nimmo

#endif
