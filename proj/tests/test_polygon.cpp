#include <doctest.h>

#include <algorithm>

#include "semitoric/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const Polygon& hp_polygon()
{
    static const Polygon P({{-2, -1}, {0, 1}, {2, 1}, {0, -1}});
    return P;
}

const Polygon& unit_square()
{
    static const Polygon P({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    return P;
}

// Min and max height of the polygon on x = t, by intersecting every edge with the line.
std::pair<Rational, Rational> slice(const Polygon& P, const Rational& t)
{
    std::vector<Rational> ys;
    const auto& v = P.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        const Rational lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
        if (t < lo || t > hi)
            continue;
        if (a.x == b.x) {
            ys.push_back(a.y);
            ys.push_back(b.y);
        } else {
            ys.push_back(a.y + (b.y - a.y) * (t - a.x) / (b.x - a.x));
        }
    }
    return {*std::min_element(ys.begin(), ys.end()), *std::max_element(ys.begin(), ys.end())};
}

} // namespace

TEST_SUITE("polygon")
{
    TEST_CASE("construction normalizes the vertex list")
    {
        const Polygon cw({{0, 1}, {1, 1}, {1, 0}, {0, 0}});
        CHECK(cw == unit_square());
        CHECK(cw.vertices().front() == Point2{0, 0});
        const Polygon extra({{0, 0}, {Rational(1, 2), 0}, {1, 0}, {1, 1}, {1, 1}, {0, 1}});
        CHECK(extra == unit_square());
        CHECK_THROWS_AS(Polygon({{0, 0}, {1, 1}, {2, 2}}), GeometryError);
        CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}}), GeometryError);
        // bow tie
        CHECK_THROWS_AS(Polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), GeometryError);
        // a vertical edge in the middle breaks vertical convexity
        CHECK_THROWS_AS(Polygon({{0, 0}, {2, 0}, {2, 3}, {1, 1}, {1, 3}, {0, 3}}), GeometryError);
    }

    TEST_CASE("boundary chains")
    {
        CHECK(unit_square().lower().slopes == std::vector<Rational>{0});
        CHECK(unit_square().upper().slopes == std::vector<Rational>{0});
        CHECK(hp_polygon().lower().slopes == std::vector<Rational>{0, 1});
        CHECK(hp_polygon().upper().slopes == std::vector<Rational>{1, 0});
        const Polygon tri({{0, 0}, {2, 0}, {0, 2}});
        CHECK(tri.lower().slopes == std::vector<Rational>{0});
        CHECK(tri.upper().slopes == std::vector<Rational>{-1});
        const auto [lower, upper] = boundary_chains(hp_polygon());
        CHECK(lower.side == Side::lower);
        CHECK(upper.breakpoints.front() == Point2{-2, -1});
    }

    TEST_CASE("chains agree with slicing at random abscissae")
    {
        Random rng(5);
        for (const auto& name : complete_fixtures()) {
            const auto I = load_fixture(name);
            const Polygon& P = I.polygon();
            for (int i = 0; i < 100; ++i) {
                const Rational t = P.min_x() + (P.max_x() - P.min_x()) * Rational(rng.integer(0, 997), 997);
                const auto [lo, hi] = slice(P, t);
                CHECK(P.lower().y_at(t) == lo);
                CHECK(P.upper().y_at(t) == hi);
            }
        }
    }

    TEST_CASE("vertex smoothness")
    {
        CHECK(is_vertex_smooth(unit_square(), {0, 0}));
        // edges (1,1) and (1,-3) meet with determinant -4
        const Polygon wedge({{0, 0}, {1, -3}, {1, 1}});
        CHECK_FALSE(is_vertex_smooth(wedge, {0, 0}));
        // locally concave vertex with edges (1,0) and (1,1)
        const Polygon notch({{-1, -1}, {0, 0}, {1, 0}, {1, 3}, {-1, 3}});
        CHECK_FALSE(is_vertex_smooth(notch, {0, 0}));
        CHECK_THROWS(is_vertex_smooth(unit_square(), {Rational(1, 2), 0}));
    }

    TEST_CASE("slope jumps and line minima")
    {
        CHECK(slope_jump(hp_polygon(), 0, Side::lower) == 1);
        CHECK(slope_jump(hp_polygon(), 0, Side::upper) == -1);
        CHECK(slope_jump(unit_square(), Rational(1, 2), Side::lower) == 0);
        CHECK_THROWS_AS(slope_jump(unit_square(), 0, Side::lower), BoundaryError);
        CHECK_THROWS_AS(slope_jump(unit_square(), 5, Side::lower), BoundaryError);
        CHECK(min_y_on_line(hp_polygon(), 0) == -1);
        CHECK(min_y_on_line(unit_square(), Rational(1, 2)) == 0);
        CHECK(min_y_on_line(Polygon({{0, 0}, {2, 0}, {0, 2}}), 1) == 0);
        CHECK_THROWS(min_y_on_line(unit_square(), 3));
    }

    TEST_CASE("wall ladders")
    {
        CHECK(wall_ladder(0, {1, 2}) == std::vector<std::int64_t>{0, 1, 3});
        CHECK(wall_ladder(-4, {5}) == std::vector<std::int64_t>{-4, 1});
        CHECK(wall_ladder(-1, {1, 1}) == std::vector<std::int64_t>{-1, 0, 1});
        CHECK_THROWS_AS(wall_ladder(0, {1, 0}), LadderError);
        CHECK_THROWS_AS(wall_ladder(0, {}), LadderError);
        Random rng(6);
        for (int i = 0; i < 200; ++i) {
            std::vector<int> m(static_cast<std::size_t>(rng.integer(1, 5)));
            int total = 0;
            for (auto& x : m)
                total += x = static_cast<int>(rng.integer(1, 4));
            const std::int64_t w = rng.integer(-10, 10);
            const auto ladder = wall_ladder(w, m);
            CHECK(ladder.front() == w);
            CHECK(ladder.back() == w + total);
            CHECK(std::is_sorted(ladder.begin(), ladder.end(), std::less_equal<>()));
        }
    }

    TEST_CASE("corner classification")
    {
        // lower jump 5 with adjacent index -4 leaves a smooth vertex
        const Polygon jump5({{-1, 0}, {0, 0}, {1, 5}, {-1, 5}});
        CHECK(slope_jump(jump5, 0, Side::lower) == 5);
        CHECK(classify_wall_point(jump5, 0, -4, Side::lower) == CornerClass::hidden);
        CHECK(classify_wall_point(jump5, 0, -5, Side::lower) == CornerClass::no_vertex);
        CHECK(classify_wall_point(jump5, 0, -3, Side::lower) == CornerClass::violation);
        CHECK(classify_wall_point(hp_polygon(), 0, -1, Side::lower) == CornerClass::no_vertex);
        CHECK(classify_wall_point(hp_polygon(), 0, 1, Side::upper) == CornerClass::no_vertex);
        // transformed edges (1,0) and (1,2)
        const Polygon jump2({{-1, 0}, {0, 0}, {1, 2}, {-1, 2}});
        CHECK(classify_wall_point(jump2, 0, 0, Side::lower) == CornerClass::violation);
        CHECK(std::string(to_string(CornerClass::hidden)) == "hidden");
    }

    TEST_CASE("classification is unchanged by re-anchoring")
    {
        Random rng(7);
        const LineConfig cfg({Rational(0)});
        const Polygon jump5({{-1, 0}, {0, 0}, {1, 5}, {-1, 5}});
        for (const Polygon& P : {hp_polygon(), jump5}) {
            for (int trial = 0; trial < 40; ++trial) {
                const std::int64_t k = rng.integer(-3, 3), w = rng.integer(-6, 6);
                const Polygon moved = apply_polygon(GroupElement::cut(1, 0, k), cfg, P);
                for (Side side : {Side::lower, Side::upper})
                    CHECK(classify_wall_point(P, 0, w, side) == classify_wall_point(moved, 0, w - k, side));
            }
        }
    }

    TEST_CASE("convexity")
    {
        CHECK(is_convex(unit_square()));
        CHECK(is_convex(hp_polygon()));
        CHECK_FALSE(is_convex(Polygon({{-1, -1}, {0, 0}, {1, 0}, {1, 3}, {-1, 3}})));
    }
}
