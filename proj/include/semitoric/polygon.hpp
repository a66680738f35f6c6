#ifndef SEMITORIC_POLYGON_HPP
#define SEMITORIC_POLYGON_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "semitoric/rational.hpp"

namespace semitoric {

enum class Side { lower, upper };

/// x-monotone polyline running from the leftmost to the rightmost abscissa
/// of a polygon. slopes[i] is the slope between breakpoints i and i+1.
struct BoundaryChain
{
    Side side = Side::lower;
    std::vector<Point2> breakpoints;
    std::vector<Rational> slopes;

    /// Height of the chain at abscissa x; x must lie in the chain's range.
    Rational y_at(const Rational& x) const;

    friend bool operator==(const BoundaryChain&, const BoundaryChain&) = default;
};

/**
 * A compact, simple, vertically convex polygon with exact vertices.
 *
 * Construction normalizes the vertex list: duplicate and collinear vertices
 * are dropped, the orientation is made counterclockwise and the list starts
 * at the lexicographically smallest vertex. Two polygons are therefore equal
 * as point sets iff their vertex lists are equal.
 *
 * Every vertical line meets the polygon in a segment (semitoric images have
 * connected J-fibres), so the boundary splits into a lower and an upper
 * chain. Vertical edges may only occur at the leftmost and rightmost
 * abscissae.
 */
class Polygon
{
public:
    explicit Polygon(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }

    const Rational& min_x() const noexcept { return lower_.breakpoints.front().x; }
    const Rational& max_x() const noexcept { return lower_.breakpoints.back().x; }

    const BoundaryChain& lower() const noexcept { return lower_; }
    const BoundaryChain& upper() const noexcept { return upper_; }
    const BoundaryChain& chain(Side side) const noexcept { return side == Side::lower ? lower_ : upper_; }

    bool has_vertex(const Point2& p) const;

    /// Strict interior test.
    bool contains_interior(const Point2& p) const;

    friend bool operator==(const Polygon& a, const Polygon& b) { return a.vertices_ == b.vertices_; }

private:
    std::vector<Point2> vertices_;
    BoundaryChain lower_;
    BoundaryChain upper_;
};

std::pair<BoundaryChain, BoundaryChain> boundary_chains(const Polygon& polygon);

/// Locally convex at v, and the primitive edge vectors at v form a lattice basis.
bool is_vertex_smooth(const Polygon& polygon, const Point2& v);

bool is_convex(const Polygon& polygon);

/// Slope right of x = j minus slope left of it on the given chain.
Rational slope_jump(const Polygon& polygon, const Rational& j, Side side);

/// The point of the given chain at abscissa j.
Point2 chain_point(const Polygon& polygon, const Rational& j, Side side);

Rational min_y_on_line(const Polygon& polygon, const Rational& j);

/// Wall-crossing indices of one line, bottom to top: w^0 = w_lower and
/// consecutive indices differ by the multiplicities of the marks between them.
std::vector<std::int64_t> wall_ladder(std::int64_t w_lower, const std::vector<int>& multiplicities);

enum class CornerClass {
    no_vertex, ///< no vertex after re-anchoring (fake corner if the polygon had one)
    hidden,    ///< a smooth vertex remains after re-anchoring
    violation  ///< neither
};

const char* to_string(CornerClass c);

/**
 * Re-anchor the wall-crossing index adjacent to the boundary point on x = j
 * to zero and inspect what is left of the corner there.
 *
 * The polygon is mapped by the cut t_j raised to w_adjacent, which turns an
 * adjacent index w_adjacent into 0; the residual slope jump on the chain is
 * slope_jump + w_adjacent. For the lower point pass the lower wall index
 * w_a, for the upper point pass the top index w_a + (sum of multiplicities).
 */
CornerClass classify_wall_point(const Polygon& polygon, const Rational& j, std::int64_t w_adjacent, Side side);

} // namespace semitoric

#endif
