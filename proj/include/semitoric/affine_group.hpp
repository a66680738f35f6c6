#ifndef SEMITORIC_AFFINE_GROUP_HPP
#define SEMITORIC_AFFINE_GROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semitoric/polygon.hpp"
#include "semitoric/rational.hpp"
#include "semitoric/taylor.hpp"

namespace semitoric {

/// Abscissae j_1 < ... < j_lambda of the vertical cut lines.
class LineConfig
{
public:
    LineConfig() = default;
    explicit LineConfig(std::vector<Rational> abscissae);

    std::size_t size() const noexcept { return j_.size(); }
    const Rational& operator[](std::size_t a) const { return j_.at(a); }
    const std::vector<Rational>& abscissae() const noexcept { return j_; }

    /// Index of the line x = j, if any.
    std::optional<std::size_t> find(const Rational& j) const;

    friend bool operator==(const LineConfig&, const LineConfig&) = default;

private:
    std::vector<Rational> j_;
};

/**
 * (z_0, ..., z_lambda; b) in Z^{lambda+1} x Q, acting on the plane as
 * S_b o t_{j_1}^{z_1} o ... o t_{j_lambda}^{z_lambda} o T^{z_0}, where
 *
 *   T(x, y)   = (x, y + x)
 *   t_j(x, y) = (x, y + (x - j) H(x - j)),  H(s) = 1 iff s >= 0
 *   S_b(x, y) = (x, y + b).
 *
 * The group is Abelian, so composition is componentwise addition.
 */
struct GroupElement
{
    std::vector<std::int64_t> z; ///< z[0] is the T power, z[a] the power of the a-th cut
    Rational b;

    std::size_t lambda() const noexcept { return z.empty() ? 0 : z.size() - 1; }

    static GroupElement identity(std::size_t lambda);
    static GroupElement shear(std::size_t lambda, std::int64_t power);
    /// The cut on line index a (0-based) raised to the given power.
    static GroupElement cut(std::size_t lambda, std::size_t a, std::int64_t power);
    static GroupElement shift(std::size_t lambda, const Rational& b);

    std::string str() const;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);

Point2 apply_point(const GroupElement& g, const LineConfig& cfg, const Point2& p);

/// Open interval of abscissae.
struct XRegion
{
    Rational lo;
    Rational hi;
};

/// Image slope of a segment inside a strip containing no cut line.
Rational apply_slope(const GroupElement& g, const LineConfig& cfg, const Rational& slope, const XRegion& region);

/// Image polygon; edges crossing a cut line are split there before mapping.
Polygon apply_polygon(const GroupElement& g, const LineConfig& cfg, const Polygon& polygon);

/**
 * Change of an action series attached to a mark on line index a (0-based)
 * when the affine coordinates are composed with g. In 2*pi units:
 * T adds X + j_a, a cut on line a' <= a adds X + (j_a - j_a'), cuts right of
 * the mark do nothing, S_b adds b.
 */
TaylorSeries apply_action_series(const GroupElement& g, const LineConfig& cfg, std::size_t a,
                                 const TaylorSeries& series);

} // namespace semitoric

#endif
