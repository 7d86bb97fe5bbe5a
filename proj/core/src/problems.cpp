#include "nimmo/problems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>

namespace nimmo {

namespace {

using std::numbers::pi;

constexpr std::size_t kCurveResolution = 2000;
constexpr int kPolygonRefinement = 3;

double square(double v) { return v * v; }

// ---------------------------------------------------------------- polygons

using Complex = std::complex<double>;

Complex to_complex(const Vector& v) { return {v[0], v[1]}; }

// Similarity z -> a z + b taking polygon `from` onto polygon `to` vertex by
// vertex.
struct Similarity {
    Complex a;
    Complex b;

    Vector apply(std::span<const double> x) const
    {
        const Complex z = a * Complex(x[0], x[1]) + b;
        return {z.real(), z.imag()};
    }
};

Similarity similarity_between(const PointSet& from, const PointSet& to)
{
    const Complex w0 = to_complex(from[0]);
    const Complex w1 = to_complex(from[1]);
    const Complex v0 = to_complex(to[0]);
    const Complex v1 = to_complex(to[1]);
    const Complex a = (v1 - v0) / (w1 - w0);
    return {a, v0 - a * w0};
}

Vector centroid(const PointSet& polygon)
{
    Vector c(2, 0.0);
    for (const auto& v : polygon) {
        c[0] += v[0];
        c[1] += v[1];
    }
    c[0] /= static_cast<double>(polygon.size());
    c[1] /= static_cast<double>(polygon.size());
    return c;
}

// Every vertex of polygon k must be at least as close to vertex i of k as to
// vertex i of any other polygon. Half-planes are convex, so checking the
// vertices covers the whole polygon.
void check_polygon_separation(const std::vector<PointSet>& polygons)
{
    const std::size_t m = polygons.front().size();
    for (std::size_t k = 0; k < polygons.size(); ++k) {
        for (const auto& w : polygons[k]) {
            for (std::size_t i = 0; i < m; ++i) {
                const double own = euclidean_distance(w, polygons[k][i]);
                for (std::size_t other = 0; other < polygons.size(); ++other) {
                    if (other == k)
                        continue;
                    if (euclidean_distance(w, polygons[other][i]) < own - 1e-12) {
                        throw ConfigError("polygon layout: polygon " + std::to_string(k) +
                                          " reaches into the vertex region of polygon " +
                                          std::to_string(other) +
                                          " (increase spacing or decrease radius)");
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------- SYM-PART

struct SymPart {
    static constexpr double a = 1.0;
    static constexpr double b = 10.0;
    static constexpr double c = 8.0;
    static constexpr double angle = pi / 4.0;
    static constexpr double distortion = 0.5;

    int variant;

    static double sign(double v) { return (v > 0.0) - (v < 0.0); }

    // Tile index in {-1, 0, 1} for each coordinate of the tile-space point.
    static std::pair<double, double> tile(double s1, double s2)
    {
        const double t1 = sign(s1) * std::min(std::ceil((std::abs(s1) - a - c / 2.0) / (2.0 * a + c)), 1.0);
        const double t2 = sign(s2) * std::min(std::ceil((std::abs(s2) - b / 2.0) / b), 1.0);
        return {t1, t2};
    }

    // decision space -> tile space
    std::pair<double, double> forward(double x1, double x2) const
    {
        if (variant == 1)
            return {x1, x2};
        const double ca = std::cos(angle);
        const double sa = std::sin(angle);
        const double t1 = ca * x1 + sa * x2;
        const double t2 = -sa * x1 + ca * x2;
        if (variant == 2)
            return {t1, t2};
        return {t1, t2 + distortion * std::sin(pi * t1 / 2.0)};
    }

    // tile space -> decision space
    std::pair<double, double> inverse(double s1, double s2) const
    {
        if (variant == 1)
            return {s1, s2};
        const double t1 = s1;
        const double t2 = variant == 3 ? s2 - distortion * std::sin(pi * s1 / 2.0) : s2;
        const double ca = std::cos(angle);
        const double sa = std::sin(angle);
        return {ca * t1 - sa * t2, sa * t1 + ca * t2};
    }

    Vector evaluate(std::span<const double> x) const
    {
        const auto [s1, s2] = forward(x[0], x[1]);
        const auto [t1, t2] = tile(s1, s2);
        const double p1 = s1 - t1 * (c + 2.0 * a);
        const double p2 = s2 - t2 * b;
        return {square(p1 + a) + square(p2), square(p1 - a) + square(p2)};
    }

    // Moves x to the same local position in the next tile (row-major, cyclic).
    Vector next_tile(std::span<const double> x) const
    {
        const auto [s1, s2] = forward(x[0], x[1]);
        const auto [t1, t2] = tile(s1, s2);
        const int index = static_cast<int>((t2 + 1) * 3 + (t1 + 1));
        const int next = (index + 1) % 9;
        const double n1 = next % 3 - 1;
        const double n2 = next / 3 - 1;
        const double shifted1 = s1 + (n1 - t1) * (c + 2.0 * a);
        const double shifted2 = s2 + (n2 - t2) * b;
        const auto [y1, y2] = inverse(shifted1, shifted2);
        return {y1, y2};
    }
};

// ---------------------------------------------------------------- Two-On-One

double two_on_one_f1(double x1, double x2)
{
    return std::pow(x1, 4) + std::pow(x2, 4) - x1 * x1 + x2 * x2 - 10.0 * x1 * x2 + 20.0;
}

template <typename F>
double golden_section_min(F&& fn, double lo, double hi, int iterations = 200)
{
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = fn(c);
    double fd = fn(d);
    for (int i = 0; i < iterations && (b - a) > 1e-15; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = fn(d);
        }
    }
    return 0.5 * (a + b);
}

// Angle in [0, pi) minimizing f1 on the circle of radius r.
double two_on_one_best_angle(double r)
{
    auto on_circle = [r](double th) { return two_on_one_f1(r * std::cos(th), r * std::sin(th)); };
    constexpr int coarse = 720;
    int best = 0;
    double best_value = on_circle(0.0);
    for (int i = 1; i < coarse; ++i) {
        const double v = on_circle(pi * i / coarse);
        if (v < best_value) {
            best_value = v;
            best = i;
        }
    }
    const double step = pi / coarse;
    return golden_section_min(on_circle, pi * best / coarse - step, pi * best / coarse + step);
}

double two_on_one_branch_min(double r)
{
    const double th = two_on_one_best_angle(r);
    return two_on_one_f1(r * std::cos(th), r * std::sin(th));
}

PointSet two_on_one_branch()
{
    // The branch runs from the origin (minimum of f2) out to the radius of
    // the minimum of f1.
    const double r_end = golden_section_min(two_on_one_branch_min, 1.5, 3.0);
    PointSet branch;
    branch.reserve(kCurveResolution + 1);
    branch.push_back({0.0, 0.0});
    for (std::size_t i = 1; i <= kCurveResolution; ++i) {
        const double r = r_end * static_cast<double>(i) / kCurveResolution;
        const double th = two_on_one_best_angle(r);
        branch.push_back({r * std::cos(th), r * std::sin(th)});
    }
    return branch;
}

// ---------------------------------------------------------------- MMF

double mmf_penalty(double y)
{
    return 2.0 * (4.0 * y * y - 2.0 * std::cos(20.0 * y * pi / std::sqrt(2.0)) + 2.0);
}

// Curve sampled at kCurveResolution + 1 evenly spaced parameter values.
template <typename Curve>
PointSet sample_curve(Curve&& curve, double t0, double t1)
{
    PointSet points;
    points.reserve(kCurveResolution + 1);
    for (std::size_t i = 0; i <= kCurveResolution; ++i) {
        const double t = t0 + (t1 - t0) * static_cast<double>(i) / kCurveResolution;
        points.push_back(curve(t));
    }
    return points;
}

PointSet transformed(const PointSet& points, const std::function<Vector(const Vector&)>& map)
{
    PointSet out;
    out.reserve(points.size());
    for (const auto& p : points)
        out.push_back(map(p));
    return out;
}

Problem finish(Problem p, std::vector<Simplex> pieces)
{
    p.pareto_set = std::make_shared<const ParetoSetModel>(std::move(pieces));
    p.ps_box = p.pareto_set->bounding_box();
    return p;
}

Problem base_problem(std::string name, std::size_t m, Bounds bounds, std::size_t n_same,
                     std::function<Vector(std::span<const double>)> objective)
{
    const std::size_t d = bounds.dims();
    return Problem{std::move(name), m, d, std::move(bounds), n_same, std::move(objective),
                   Box{}, nullptr, {}};
}

Vector mirror_x1(std::span<const double> x, double about)
{
    return {2.0 * about - x[0], x[1]};
}

} // namespace

// ---------------------------------------------------------------- polygons

Bounds PolygonLayout::bounds() const
{
    return Bounds({origin[0], origin[1]},
                  {origin[0] + spacing * static_cast<double>(cols),
                   origin[1] + spacing * static_cast<double>(rows)});
}

Vector PolygonLayout::center(std::size_t k) const
{
    const double col = static_cast<double>(k % cols);
    const double row = static_cast<double>(k / cols);
    return {origin[0] + spacing * (col + 0.5), origin[1] + spacing * (row + 0.5)};
}

Problem make_polygon_from_vertices(std::vector<PointSet> polygons, Bounds bounds,
                                   std::string name)
{
    if (polygons.empty())
        throw ConfigError("polygon problem needs at least one polygon");
    const std::size_t m = polygons.front().size();
    if (m < 3)
        throw ConfigError("polygon problem needs at least three objectives");
    if (bounds.dims() != 2)
        throw ConfigError("polygon problem is two-dimensional");
    for (const auto& poly : polygons) {
        if (poly.size() != m)
            throw ConfigError("all polygons must have the same number of vertices");
        for (const auto& v : poly) {
            if (!bounds.contains(v))
                throw ConfigError("polygon vertex outside the decision space");
        }
    }
    check_polygon_separation(polygons);

    auto shared_polygons = std::make_shared<const std::vector<PointSet>>(polygons);
    auto objective = [shared_polygons, m](std::span<const double> x) {
        Vector f(m, std::numeric_limits<double>::infinity());
        for (const auto& poly : *shared_polygons) {
            for (std::size_t i = 0; i < m; ++i)
                f[i] = std::min(f[i], std::hypot(x[0] - poly[i][0], x[1] - poly[i][1]));
        }
        return f;
    };

    Problem p = base_problem(std::move(name), m, std::move(bounds), polygons.size(),
                             std::move(objective));

    std::vector<Simplex> pieces;
    for (std::size_t k = 0; k < polygons.size(); ++k)
        ParetoSetModel::add_convex_polygon(pieces, polygons[k], k == 0, kPolygonRefinement);

    if (polygons.size() > 1) {
        // Maps a point of polygon k (nearest centroid) onto polygon k + 1.
        PointSet centers;
        std::vector<Similarity> maps;
        for (std::size_t k = 0; k < polygons.size(); ++k) {
            centers.push_back(centroid(polygons[k]));
            maps.push_back(similarity_between(polygons[k], polygons[(k + 1) % polygons.size()]));
        }
        p.symmetries.push_back([centers, maps](std::span<const double> x) {
            std::size_t nearest = 0;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < centers.size(); ++k) {
                const double d = euclidean_distance(x, centers[k]);
                if (d < best) {
                    best = d;
                    nearest = k;
                }
            }
            return maps[nearest].apply(x);
        });
    }
    return finish(std::move(p), std::move(pieces));
}

Problem make_polygon(std::size_t num_objectives, std::size_t num_polygons,
                     const PolygonLayout& layout, bool rotated)
{
    if (num_objectives < 3)
        throw ConfigError("polygon problem needs M >= 3");
    if (num_polygons < 1 || num_polygons > layout.rows * layout.cols)
        throw ConfigError("polygon count must be between 1 and the number of grid cells");
    std::vector<PointSet> polygons;
    for (std::size_t k = 0; k < num_polygons; ++k) {
        const Vector c = layout.center(k);
        const double theta = rotated ? static_cast<double>(k) * pi / (2.0 * num_polygons) : 0.0;
        PointSet poly;
        for (std::size_t i = 0; i < num_objectives; ++i) {
            const double phi = 2.0 * pi * static_cast<double>(i) / num_objectives + theta;
            poly.push_back({c[0] + layout.radius * std::cos(phi), c[1] + layout.radius * std::sin(phi)});
        }
        polygons.push_back(std::move(poly));
    }
    const std::string name = std::to_string(num_objectives) + (rotated ? "-RPolygon" : "-Polygon");
    return make_polygon_from_vertices(std::move(polygons), layout.bounds(), name);
}

Problem make_polygon(std::size_t num_objectives, bool rotated)
{
    return make_polygon(num_objectives, 9, PolygonLayout{}, rotated);
}

// ---------------------------------------------------------------- SYM-PART

Problem make_sympart(int variant)
{
    if (variant < 1 || variant > 3)
        throw ConfigError("SYM-PART variant must be 1, 2 or 3");
    const SymPart sp{variant};
    Problem p = base_problem("SYM-PART" + std::to_string(variant), 2,
                             Bounds::uniform(2, -20.0, 20.0), 9,
                             [sp](std::span<const double> x) { return sp.evaluate(x); });

    // In tile space the optimal set is p2 = 0, p1 in [-a, a] for each tile.
    std::vector<Simplex> pieces;
    for (int t2 = -1; t2 <= 1; ++t2) {
        for (int t1 = -1; t1 <= 1; ++t1) {
            const double center1 = t1 * (SymPart::c + 2.0 * SymPart::a);
            const double center2 = t2 * SymPart::b;
            const bool covers = t1 == 0 && t2 == 0;
            auto curve = [&sp, center1, center2](double s) {
                const auto [y1, y2] = sp.inverse(center1 + s, center2);
                return Vector{y1, y2};
            };
            if (variant == 3) {
                ParetoSetModel::add_polyline(pieces, sample_curve(curve, -SymPart::a, SymPart::a),
                                             covers);
            } else {
                pieces.push_back({{curve(-SymPart::a), curve(SymPart::a)}, covers});
            }
        }
    }
    p.symmetries.push_back([sp](std::span<const double> x) { return sp.next_tile(x); });
    return finish(std::move(p), std::move(pieces));
}

// ---------------------------------------------------------------- Omni-test

Problem make_omnitest(std::size_t num_variables)
{
    if (num_variables < 1)
        throw ConfigError("Omni-test needs at least one variable");
    auto objective = [](std::span<const double> x) {
        double f1 = 0.0;
        double f2 = 0.0;
        for (double v : x) {
            f1 += std::sin(pi * v);
            f2 += std::cos(pi * v);
        }
        return Vector{f1, f2};
    };
    // 360 is the commonly reported count for D = 5; the segment enumeration
    // below has 3^D pieces.
    Problem p = base_problem("Omni-test", 2, Bounds::uniform(num_variables, 0.0, 6.0), 360,
                             std::move(objective));

    for (std::size_t j = 0; j < num_variables; ++j) {
        p.symmetries.push_back([j](std::span<const double> x) {
            Vector y(x.begin(), x.end());
            y[j] = y[j] + 2.0 <= 6.0 ? y[j] + 2.0 : y[j] - 4.0;
            return y;
        });
    }

    // Optimal set: every variable in the same phase a in [1, 1.5] of one of
    // the three periods, i.e. x_j = a + 2 m_j. One segment per period choice.
    constexpr std::size_t kMaxEnumerated = 8;
    if (num_variables > kMaxEnumerated) {
        p.ps_box = Box{Vector(num_variables, 1.0), Vector(num_variables, 5.5)};
        return p;
    }
    std::size_t combos = 1;
    for (std::size_t j = 0; j < num_variables; ++j)
        combos *= 3;
    std::vector<Simplex> pieces;
    pieces.reserve(combos);
    for (std::size_t code = 0; code < combos; ++code) {
        Vector start(num_variables);
        Vector end(num_variables);
        std::size_t rest = code;
        for (std::size_t j = 0; j < num_variables; ++j) {
            const double offset = 2.0 * static_cast<double>(rest % 3);
            rest /= 3;
            start[j] = 1.0 + offset;
            end[j] = 1.5 + offset;
        }
        pieces.push_back({{start, end}, code == 0});
    }
    return finish(std::move(p), std::move(pieces));
}

// ---------------------------------------------------------------- Two-On-One

Problem make_two_on_one()
{
    auto objective = [](std::span<const double> x) {
        return Vector{two_on_one_f1(x[0], x[1]), x[0] * x[0] + x[1] * x[1]};
    };
    Problem p = base_problem("Two-On-One", 2, Bounds::uniform(2, -3.0, 3.0), 2,
                             std::move(objective));
    const PointSet branch = two_on_one_branch();
    std::vector<Simplex> pieces;
    ParetoSetModel::add_polyline(pieces, branch, true);
    ParetoSetModel::add_polyline(
        pieces, transformed(branch, [](const Vector& v) { return Vector{-v[0], -v[1]}; }), false);
    p.symmetries.push_back([](std::span<const double> x) { return Vector{-x[0], -x[1]}; });
    return finish(std::move(p), std::move(pieces));
}

// ---------------------------------------------------------------- MMF

Problem make_mmf(int id)
{
    std::vector<Simplex> pieces;
    auto add_branch = [&pieces](const PointSet& curve, bool covers) {
        ParetoSetModel::add_polyline(pieces, curve, covers);
    };
    auto shift_x2 = [](double by) {
        return [by](const Vector& v) { return Vector{v[0], v[1] + by}; };
    };
    auto mirror = [](double about) {
        return [about](const Vector& v) { return Vector{2.0 * about - v[0], v[1]}; };
    };
    const std::string name = "MMF" + std::to_string(id);

    switch (id) {
    case 1: {
        Problem p = base_problem(name, 2, Bounds({1.0, -1.0}, {3.0, 1.0}), 2,
                                 [](std::span<const double> x) {
                                     const double d = std::abs(x[0] - 2.0);
                                     return Vector{d, 1.0 - std::sqrt(d) +
                                                          2.0 * square(x[1] - std::sin(6.0 * pi * d + pi))};
                                 });
        const PointSet right = sample_curve(
            [](double d) { return Vector{2.0 + d, std::sin(6.0 * pi * d + pi)}; }, 0.0, 1.0);
        add_branch(right, true);
        add_branch(transformed(right, mirror(2.0)), false);
        p.symmetries.push_back([](std::span<const double> x) { return mirror_x1(x, 2.0); });
        return finish(std::move(p), std::move(pieces));
    }
    case 2: {
        Problem p = base_problem(name, 2, Bounds({0.0, 0.0}, {1.0, 2.0}), 2,
                                 [](std::span<const double> x) {
                                     const double r = std::sqrt(x[0]);
                                     const double y = x[1] <= 1.0 ? x[1] - r : x[1] - 1.0 - r;
                                     return Vector{x[0], 1.0 - r + mmf_penalty(y)};
                                 });
        const PointSet lower = sample_curve([](double t) { return Vector{t * t, t}; }, 0.0, 1.0);
        add_branch(lower, true);
        add_branch(transformed(lower, shift_x2(1.0)), false);
        p.symmetries.push_back([](std::span<const double> x) {
            return Vector{x[0], x[1] <= 1.0 ? x[1] + 1.0 : x[1] - 1.0};
        });
        return finish(std::move(p), std::move(pieces));
    }
    case 3: {
        Problem p = base_problem(name, 2, Bounds({0.0, 0.0}, {1.0, 1.5}), 2,
                                 [](std::span<const double> x) {
                                     const double r = std::sqrt(x[0]);
                                     const bool lower = (x[1] <= 0.5) ||
                                                        (x[1] < 1.0 && x[0] > 0.25);
                                     const double y = lower ? x[1] - r : x[1] - 0.5 - r;
                                     return Vector{x[0], 1.0 - r + mmf_penalty(y)};
                                 });
        const PointSet lower = sample_curve([](double t) { return Vector{t * t, t}; }, 0.0, 1.0);
        add_branch(lower, true);
        add_branch(transformed(lower, shift_x2(0.5)), false);
        p.symmetries.push_back([](std::span<const double> x) {
            const double r = std::sqrt(x[0]);
            const bool on_lower = std::abs(x[1] - r) < std::abs(x[1] - 0.5 - r);
            return Vector{x[0], on_lower ? x[1] + 0.5 : x[1] - 0.5};
        });
        return finish(std::move(p), std::move(pieces));
    }
    case 4: {
        Problem p = base_problem(name, 2, Bounds({-1.0, 0.0}, {1.0, 2.0}), 4,
                                 [](std::span<const double> x) {
                                     const double s = std::sin(pi * std::abs(x[0]));
                                     const double y = x[1] < 1.0 ? x[1] - s : x[1] - 1.0 - s;
                                     return Vector{std::abs(x[0]), 1.0 - x[0] * x[0] + 2.0 * y * y};
                                 });
        const PointSet right =
            sample_curve([](double t) { return Vector{t, std::sin(pi * t)}; }, 0.0, 1.0);
        add_branch(right, true);
        add_branch(transformed(right, mirror(0.0)), false);
        add_branch(transformed(right, shift_x2(1.0)), false);
        add_branch(transformed(transformed(right, mirror(0.0)), shift_x2(1.0)), false);
        p.symmetries.push_back([](std::span<const double> x) { return mirror_x1(x, 0.0); });
        p.symmetries.push_back([](std::span<const double> x) {
            return Vector{x[0], x[1] < 1.0 ? x[1] + 1.0 : x[1] - 1.0};
        });
        return finish(std::move(p), std::move(pieces));
    }
    case 5: {
        Problem p = base_problem(name, 2, Bounds({1.0, -1.0}, {3.0, 3.0}), 4,
                                 [](std::span<const double> x) {
                                     const double d = std::abs(x[0] - 2.0);
                                     const double s = std::sin(6.0 * pi * d + pi);
                                     const double y = x[1] <= 1.0 ? x[1] - s : x[1] - 2.0 - s;
                                     return Vector{d, 1.0 - std::sqrt(d) + 2.0 * y * y};
                                 });
        const PointSet right = sample_curve(
            [](double d) { return Vector{2.0 + d, std::sin(6.0 * pi * d + pi)}; }, 0.0, 1.0);
        add_branch(right, true);
        add_branch(transformed(right, mirror(2.0)), false);
        add_branch(transformed(right, shift_x2(2.0)), false);
        add_branch(transformed(transformed(right, mirror(2.0)), shift_x2(2.0)), false);
        p.symmetries.push_back([](std::span<const double> x) { return mirror_x1(x, 2.0); });
        p.symmetries.push_back([](std::span<const double> x) {
            return Vector{x[0], x[1] <= 1.0 ? x[1] + 2.0 : x[1] - 2.0};
        });
        return finish(std::move(p), std::move(pieces));
    }
    case 6: {
        Problem p = base_problem(name, 2, Bounds({1.0, -1.0}, {3.0, 2.0}), 4,
                                 [](std::span<const double> x) {
                                     const double d = std::abs(x[0] - 2.0);
                                     const double s = std::sin(6.0 * pi * d + pi);
                                     const double y = x[1] <= 1.0 ? x[1] - s : x[1] - 1.0 - s;
                                     return Vector{d, 1.0 - std::sqrt(d) + 2.0 * y * y};
                                 });
        auto lower = [](double d) { return Vector{2.0 + d, std::sin(6.0 * pi * d + pi)}; };
        const PointSet right = sample_curve(lower, 0.0, 1.0);
        add_branch(right, true);
        add_branch(transformed(right, mirror(2.0)), false);
        // The upper copy is only optimal where it lies above x2 = 1, which is
        // where sin(6 pi d + pi) > 0: d in (1/6, 1/3), (1/2, 2/3), (5/6, 1).
        for (int k = 0; k < 3; ++k) {
            const double d0 = (2.0 * k + 1.0) / 6.0;
            const PointSet upper = transformed(sample_curve(lower, d0, d0 + 1.0 / 6.0), shift_x2(1.0));
            add_branch(upper, false);
            add_branch(transformed(upper, mirror(2.0)), false);
        }
        p.symmetries.push_back([](std::span<const double> x) { return mirror_x1(x, 2.0); });
        return finish(std::move(p), std::move(pieces));
    }
    case 7: {
        auto shape = [](double d) {
            return (0.3 * d * d * std::cos(24.0 * pi * d + 4.0 * pi) + 0.6 * d) *
                   std::sin(6.0 * pi * d + pi);
        };
        Problem p = base_problem(name, 2, Bounds({1.0, -1.0}, {3.0, 1.0}), 2,
                                 [shape](std::span<const double> x) {
                                     const double d = std::abs(x[0] - 2.0);
                                     return Vector{d, 1.0 - std::sqrt(d) + square(x[1] - shape(d))};
                                 });
        const PointSet right =
            sample_curve([shape](double d) { return Vector{2.0 + d, shape(d)}; }, 0.0, 1.0);
        add_branch(right, true);
        add_branch(transformed(right, mirror(2.0)), false);
        p.symmetries.push_back([](std::span<const double> x) { return mirror_x1(x, 2.0); });
        return finish(std::move(p), std::move(pieces));
    }
    case 8: {
        Problem p = base_problem(name, 2, Bounds({-pi, 0.0}, {pi, 9.0}), 4,
                                 [](std::span<const double> x) {
                                     const double a = std::abs(x[0]);
                                     const double s = std::sin(a);
                                     const double y = x[1] <= 4.0 ? x[1] - s - a : x[1] - 4.0 - s - a;
                                     return Vector{s, std::sqrt(std::max(0.0, 1.0 - s * s)) + 2.0 * y * y};
                                 });
        // Reference subsets use |x1| in [pi/2, pi], as in the published
        // reference data for this problem.
        const PointSet right =
            sample_curve([](double a) { return Vector{a, std::sin(a) + a}; }, pi / 2.0, pi);
        add_branch(right, true);
        add_branch(transformed(right, mirror(0.0)), false);
        add_branch(transformed(right, shift_x2(4.0)), false);
        add_branch(transformed(transformed(right, mirror(0.0)), shift_x2(4.0)), false);
        p.symmetries.push_back([](std::span<const double> x) { return mirror_x1(x, 0.0); });
        p.symmetries.push_back([](std::span<const double> x) {
            return Vector{x[0], x[1] <= 4.0 ? x[1] + 4.0 : x[1] - 4.0};
        });
        return finish(std::move(p), std::move(pieces));
    }
    default:
        throw ConfigError("MMF id must be in 1..8");
    }
}

// ---------------------------------------------------------------- registry

Problem make_problem(const std::string& raw_name, std::optional<std::size_t> num_objectives,
                     std::optional<std::size_t> num_variables)
{
    std::string name;
    for (char ch : raw_name) {
        if (ch != '-' && ch != '_')
            name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    if (name == "sympart1" || name == "sympart2" || name == "sympart3")
        return make_sympart(name.back() - '0');
    if (name == "omnitest")
        return make_omnitest(num_variables.value_or(5));
    if (name == "twoonone")
        return make_two_on_one();
    if (name.size() == 4 && name.starts_with("mmf") && name[3] >= '1' && name[3] <= '8')
        return make_mmf(name[3] - '0');
    if (name == "polygon" || name == "rpolygon")
        return make_polygon(num_objectives.value_or(3), name == "rpolygon");
    throw ConfigError("unknown problem '" + raw_name + "'");
}

ReferenceSet generate_reference_sets(const Problem& p, std::size_t n, RngStream& rng)
{
    if (!p.pareto_set)
        throw UnsupportedError("no analytic Pareto set for problem " + p.name +
                               "; load reference files instead");
    ReferenceSet ref;
    ref.sol = p.pareto_set->sample_solutions(n, rng);
    const PointSet preimages = p.pareto_set->sample_front_preimages(n, p.objective, rng);
    ref.obj.reserve(n);
    for (const auto& x : preimages)
        ref.obj.push_back(p.evaluate(x));
    return ref;
}

} // namespace nimmo
