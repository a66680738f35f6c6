#include "semitoric/polygon.hpp"

#include <algorithm>
#include <string>

#include "semitoric/affine_group.hpp"
#include "semitoric/errors.hpp"

namespace semitoric {

namespace {

Rational signed_area2(const std::vector<Point2>& v)
{
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& p = v[i];
        const Point2& q = v[(i + 1) % v.size()];
        s += p.x * q.y - p.y * q.x;
    }
    return s;
}

void drop_duplicates(std::vector<Point2>& v)
{
    std::vector<Point2> out;
    for (const auto& p : v)
        if (out.empty() || !(out.back() == p))
            out.push_back(p);
    while (out.size() > 1 && out.front() == out.back())
        out.pop_back();
    v = std::move(out);
}

void drop_collinear(std::vector<Point2>& v)
{
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point2& prev = v[(i + v.size() - 1) % v.size()];
            const Point2& cur = v[i];
            const Point2& next = v[(i + 1) % v.size()];
            if (turn(prev, cur, next) != 0)
                continue;
            const Rational dot = (cur.x - prev.x) * (next.x - cur.x) + (cur.y - prev.y) * (next.y - cur.y);
            if (dot < 0)
                throw GeometryError("polygon boundary doubles back at " + to_string(cur));
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            break;
        }
    }
}

BoundaryChain make_chain(Side side, std::vector<Point2> pts)
{
    BoundaryChain c;
    c.side = side;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        c.slopes.push_back((pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x));
    c.breakpoints = std::move(pts);
    return c;
}

std::size_t vertex_index(const Polygon& polygon, const Point2& v)
{
    const auto& vs = polygon.vertices();
    auto it = std::find(vs.begin(), vs.end(), v);
    if (it == vs.end())
        throw GeometryError(to_string(v) + " is not a vertex of the polygon");
    return static_cast<std::size_t>(it - vs.begin());
}

void require_interior_abscissa(const Polygon& polygon, const Rational& j)
{
    if (j <= polygon.min_x() || j >= polygon.max_x())
        throw BoundaryError("line x = " + to_string(j) + " does not cross the interior of the polygon");
}

} // namespace

Rational BoundaryChain::y_at(const Rational& x) const
{
    if (x < breakpoints.front().x || x > breakpoints.back().x)
        throw BoundaryError("abscissa " + to_string(x) + " outside the chain");
    auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), x,
                               [](const Point2& p, const Rational& v) { return p.x < v; });
    if (it->x == x)
        return it->y;
    const std::size_t seg = static_cast<std::size_t>(it - breakpoints.begin()) - 1;
    return breakpoints[seg].y + slopes[seg] * (x - breakpoints[seg].x);
}

Polygon::Polygon(std::vector<Point2> vertices)
{
    drop_duplicates(vertices);
    if (vertices.size() < 3)
        throw GeometryError("a polygon needs at least three distinct vertices");
    const Rational area = signed_area2(vertices);
    if (area == 0)
        throw GeometryError("polygon has empty interior");
    if (area < 0)
        std::reverse(vertices.begin(), vertices.end());
    drop_collinear(vertices);
    if (vertices.size() < 3)
        throw GeometryError("polygon has empty interior");
    auto first = std::min_element(vertices.begin(), vertices.end(), lex_less);
    std::rotate(vertices.begin(), first, vertices.end());

    // Counterclockwise from the bottom-left vertex: rightward edges (lower
    // chain), an optional vertical edge up, leftward edges (upper chain), an
    // optional vertical edge down back to the start.
    const std::size_t n = vertices.size();
    auto dx = [&](std::size_t i) { return vertices[(i + 1) % n].x - vertices[i].x; };
    std::size_t i = 0;
    while (i < n && dx(i) > 0)
        ++i;
    const std::size_t lower_end = i;
    if (i < n && dx(i) == 0)
        ++i;
    const std::size_t upper_begin = i;
    while (i < n && dx(i) < 0)
        ++i;
    const std::size_t upper_end = i;
    if (i < n && dx(i) == 0)
        ++i;
    if (lower_end == 0 || upper_end == upper_begin || i != n)
        throw GeometryError("polygon is not vertically convex or has a vertical edge away from its extreme abscissae");

    std::vector<Point2> lower(vertices.begin(), vertices.begin() + static_cast<std::ptrdiff_t>(lower_end) + 1);
    std::vector<Point2> upper;
    for (std::size_t k = upper_begin; k <= upper_end; ++k)
        upper.push_back(vertices[k % n]);
    std::reverse(upper.begin(), upper.end());

    lower_ = make_chain(Side::lower, std::move(lower));
    upper_ = make_chain(Side::upper, std::move(upper));

    // With both chains x-monotone the polygon is simple iff the lower chain
    // stays strictly below the upper one on the open x-range.
    auto check = [&](const Rational& x) {
        if (x <= min_x() || x >= max_x())
            return;
        if (lower_.y_at(x) >= upper_.y_at(x))
            throw GeometryError("polygon is not simple: chains meet at x = " + to_string(x));
    };
    for (const auto& p : lower_.breakpoints)
        check(p.x);
    for (const auto& p : upper_.breakpoints)
        check(p.x);

    vertices_ = std::move(vertices);
}

bool Polygon::has_vertex(const Point2& p) const
{
    return std::find(vertices_.begin(), vertices_.end(), p) != vertices_.end();
}

bool Polygon::contains_interior(const Point2& p) const
{
    if (p.x <= min_x() || p.x >= max_x())
        return false;
    return lower_.y_at(p.x) < p.y && p.y < upper_.y_at(p.x);
}

std::pair<BoundaryChain, BoundaryChain> boundary_chains(const Polygon& polygon)
{
    return {polygon.lower(), polygon.upper()};
}

bool is_vertex_smooth(const Polygon& polygon, const Point2& v)
{
    const auto& vs = polygon.vertices();
    const std::size_t i = vertex_index(polygon, v);
    const Point2& prev = vs[(i + vs.size() - 1) % vs.size()];
    const Point2& next = vs[(i + 1) % vs.size()];
    if (turn(prev, v, next) <= 0)
        return false;
    const LatticeVector a = primitive_direction(prev.x - v.x, prev.y - v.y);
    const LatticeVector b = primitive_direction(next.x - v.x, next.y - v.y);
    const Integer d = determinant(a, b);
    return d == 1 || d == -1;
}

bool is_convex(const Polygon& polygon)
{
    const auto& vs = polygon.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (turn(vs[(i + vs.size() - 1) % vs.size()], vs[i], vs[(i + 1) % vs.size()]) <= 0)
            return false;
    return true;
}

Rational slope_jump(const Polygon& polygon, const Rational& j, Side side)
{
    require_interior_abscissa(polygon, j);
    const BoundaryChain& c = polygon.chain(side);
    for (std::size_t k = 1; k + 1 < c.breakpoints.size(); ++k)
        if (c.breakpoints[k].x == j)
            return c.slopes[k] - c.slopes[k - 1];
    return 0;
}

Point2 chain_point(const Polygon& polygon, const Rational& j, Side side)
{
    if (j < polygon.min_x() || j > polygon.max_x())
        throw BoundaryError("line x = " + to_string(j) + " misses the polygon");
    return {j, polygon.chain(side).y_at(j)};
}

Rational min_y_on_line(const Polygon& polygon, const Rational& j)
{
    return chain_point(polygon, j, Side::lower).y;
}

std::vector<std::int64_t> wall_ladder(std::int64_t w_lower, const std::vector<int>& multiplicities)
{
    if (multiplicities.empty())
        throw LadderError("a wall ladder needs at least one marked point");
    std::vector<std::int64_t> ladder{w_lower};
    for (int m : multiplicities) {
        if (m <= 0)
            throw LadderError("multiplicity " + std::to_string(m) + " is not positive");
        ladder.push_back(ladder.back() + m);
    }
    return ladder;
}

const char* to_string(CornerClass c)
{
    switch (c) {
    case CornerClass::no_vertex:
        return "no_vertex";
    case CornerClass::hidden:
        return "hidden";
    case CornerClass::violation:
        return "violation";
    }
    return "?";
}

CornerClass classify_wall_point(const Polygon& polygon, const Rational& j, std::int64_t w_adjacent, Side side)
{
    require_interior_abscissa(polygon, j);
    const LineConfig cut({j});
    const Polygon moved = apply_polygon(GroupElement::cut(1, 0, w_adjacent), cut, polygon);
    const Point2 q = chain_point(moved, j, side);
    if (!moved.has_vertex(q))
        return CornerClass::no_vertex;
    return is_vertex_smooth(moved, q) ? CornerClass::hidden : CornerClass::violation;
}

} // namespace semitoric
