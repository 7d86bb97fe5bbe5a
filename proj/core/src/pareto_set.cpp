#include "nimmo/pareto_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nimmo {

namespace {

double dot(std::span<const double> a, std::span<const double> b)
{
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

Vector difference(const Vector& a, const Vector& b)
{
    Vector d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        d[i] = a[i] - b[i];
    return d;
}

Vector midpoint(const Vector& a, const Vector& b)
{
    Vector m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        m[i] = 0.5 * (a[i] + b[i]);
    return m;
}

// Draws piece indices proportionally to `weights` with a binary search over
// the cumulative sum.
class WeightedPicker {
public:
    explicit WeightedPicker(const std::vector<double>& weights) : cumulative_(weights.size())
    {
        std::partial_sum(weights.begin(), weights.end(), cumulative_.begin());
        if (cumulative_.empty() || !(cumulative_.back() > 0.0))
            throw ContractViolation("ParetoSetModel: pieces have zero total measure");
    }

    std::size_t pick(RngStream& rng) const
    {
        const double r = rng.uniform01() * cumulative_.back();
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
        return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()),
                                     cumulative_.size() - 1);
    }

private:
    std::vector<double> cumulative_;
};

void subdivide(std::vector<Simplex>& pieces, const Vector& a, const Vector& b, const Vector& c,
               bool covers_front, int levels)
{
    if (levels <= 0) {
        pieces.push_back({{a, b, c}, covers_front});
        return;
    }
    const Vector ab = midpoint(a, b);
    const Vector bc = midpoint(b, c);
    const Vector ca = midpoint(c, a);
    subdivide(pieces, a, ab, ca, covers_front, levels - 1);
    subdivide(pieces, ab, b, bc, covers_front, levels - 1);
    subdivide(pieces, ca, bc, c, covers_front, levels - 1);
    subdivide(pieces, ab, bc, ca, covers_front, levels - 1);
}

} // namespace

double simplex_measure(std::span<const Vector> vertices)
{
    if (vertices.size() == 2) {
        const Vector d = difference(vertices[1], vertices[0]);
        return std::sqrt(dot(d, d));
    }
    if (vertices.size() == 3) {
        // Gram determinant: area = 0.5 * sqrt(|u|^2 |v|^2 - (u.v)^2)
        const Vector u = difference(vertices[1], vertices[0]);
        const Vector v = difference(vertices[2], vertices[0]);
        const double uu = dot(u, u);
        const double vv = dot(v, v);
        const double uv = dot(u, v);
        return 0.5 * std::sqrt(std::max(0.0, uu * vv - uv * uv));
    }
    throw ContractViolation("simplex_measure: only segments and triangles are supported");
}

Vector sample_in_simplex(std::span<const Vector> vertices, RngStream& rng)
{
    const std::size_t d = vertices.front().size();
    Vector out(d);
    if (vertices.size() == 2) {
        const double t = rng.uniform01();
        for (std::size_t i = 0; i < d; ++i)
            out[i] = vertices[0][i] + t * (vertices[1][i] - vertices[0][i]);
        return out;
    }
    const double r1 = std::sqrt(rng.uniform01());
    const double r2 = rng.uniform01();
    const double wa = 1.0 - r1;
    const double wb = r1 * (1.0 - r2);
    const double wc = r1 * r2;
    for (std::size_t i = 0; i < d; ++i)
        out[i] = wa * vertices[0][i] + wb * vertices[1][i] + wc * vertices[2][i];
    return out;
}

ParetoSetModel::ParetoSetModel(std::vector<Simplex> pieces) : pieces_(std::move(pieces))
{
    if (pieces_.empty())
        throw ContractViolation("ParetoSetModel: no pieces");
    for (const auto& p : pieces_) {
        if (p.vertices.size() != 2 && p.vertices.size() != 3)
            throw ContractViolation("ParetoSetModel: pieces must be segments or triangles");
    }
}

Box ParetoSetModel::bounding_box() const
{
    PointSet all;
    for (const auto& p : pieces_)
        all.insert(all.end(), p.vertices.begin(), p.vertices.end());
    return Box::enclosing(all);
}

PointSet ParetoSetModel::sample_solutions(std::size_t n, RngStream& rng) const
{
    std::vector<double> weights;
    weights.reserve(pieces_.size());
    for (const auto& p : pieces_)
        weights.push_back(simplex_measure(p.vertices));
    const WeightedPicker picker(weights);
    PointSet out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(sample_in_simplex(pieces_[picker.pick(rng)].vertices, rng));
    return out;
}

PointSet ParetoSetModel::sample_front_preimages(
    std::size_t n, const std::function<Vector(std::span<const double>)>& f, RngStream& rng) const
{
    std::vector<const Simplex*> cover;
    std::vector<double> weights;
    for (const auto& p : pieces_) {
        if (!p.covers_front)
            continue;
        PointSet image;
        for (const auto& v : p.vertices)
            image.push_back(f(v));
        cover.push_back(&p);
        weights.push_back(simplex_measure(image));
    }
    if (cover.empty())
        throw ContractViolation("ParetoSetModel: no piece is flagged as covering the front");
    const WeightedPicker picker(weights);
    PointSet out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(sample_in_simplex(cover[picker.pick(rng)]->vertices, rng));
    return out;
}

void ParetoSetModel::add_polyline(std::vector<Simplex>& pieces, const PointSet& points,
                                  bool covers_front)
{
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        pieces.push_back({{points[i], points[i + 1]}, covers_front});
}

void ParetoSetModel::add_convex_polygon(std::vector<Simplex>& pieces, const PointSet& polygon,
                                        bool covers_front, int levels)
{
    for (std::size_t i = 1; i + 1 < polygon.size(); ++i)
        subdivide(pieces, polygon[0], polygon[i], polygon[i + 1], covers_front, levels);
}

} // namespace nimmo
