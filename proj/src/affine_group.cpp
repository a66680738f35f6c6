#include "semitoric/affine_group.hpp"

#include <algorithm>
#include <sstream>

#include "semitoric/errors.hpp"

namespace semitoric {

namespace {

void require_binding(const GroupElement& g, const LineConfig& cfg)
{
    if (g.z.size() != cfg.size() + 1)
        throw ConfigurationError("group element has " + std::to_string(g.z.size()) + " integer components but the " +
                                 "configuration has " + std::to_string(cfg.size()) + " lines");
}

} // namespace

LineConfig::LineConfig(std::vector<Rational> abscissae)
    : j_(std::move(abscissae))
{
    for (std::size_t a = 1; a < j_.size(); ++a)
        if (!(j_[a - 1] < j_[a]))
            throw ConfigurationError("line abscissae must be strictly increasing");
}

std::optional<std::size_t> LineConfig::find(const Rational& j) const
{
    for (std::size_t a = 0; a < j_.size(); ++a)
        if (j_[a] == j)
            return a;
    return std::nullopt;
}

GroupElement GroupElement::identity(std::size_t lambda)
{
    return {std::vector<std::int64_t>(lambda + 1, 0), Rational(0)};
}

GroupElement GroupElement::shear(std::size_t lambda, std::int64_t power)
{
    GroupElement g = identity(lambda);
    g.z[0] = power;
    return g;
}

GroupElement GroupElement::cut(std::size_t lambda, std::size_t a, std::int64_t power)
{
    if (a >= lambda)
        throw ConfigurationError("cut index " + std::to_string(a) + " out of range");
    GroupElement g = identity(lambda);
    g.z[a + 1] = power;
    return g;
}

GroupElement GroupElement::shift(std::size_t lambda, const Rational& b)
{
    GroupElement g = identity(lambda);
    g.b = b;
    return g;
}

std::string GroupElement::str() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < z.size(); ++i)
        os << (i ? ", " : "") << z[i];
    os << "; " << to_string(b) << ")";
    return os.str();
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2)
{
    if (g1.z.size() != g2.z.size())
        throw ConfigurationError("cannot compose group elements over different line configurations");
    GroupElement out = g1;
    for (std::size_t i = 0; i < out.z.size(); ++i)
        out.z[i] += g2.z[i];
    out.b += g2.b;
    return out;
}

GroupElement inverse(const GroupElement& g)
{
    GroupElement out = g;
    for (auto& v : out.z)
        v = -v;
    out.b = -out.b;
    return out;
}

Point2 apply_point(const GroupElement& g, const LineConfig& cfg, const Point2& p)
{
    require_binding(g, cfg);
    Rational y = p.y + Rational(g.z[0]) * p.x;
    for (std::size_t a = 0; a < cfg.size(); ++a)
        if (g.z[a + 1] != 0 && p.x >= cfg[a])
            y += Rational(g.z[a + 1]) * (p.x - cfg[a]);
    return {p.x, y + g.b};
}

Rational apply_slope(const GroupElement& g, const LineConfig& cfg, const Rational& slope, const XRegion& region)
{
    require_binding(g, cfg);
    if (!(region.lo < region.hi))
        throw RegionError("empty region");
    Rational out = slope + Rational(g.z[0]);
    for (std::size_t a = 0; a < cfg.size(); ++a) {
        if (region.lo < cfg[a] && cfg[a] < region.hi)
            throw RegionError("region (" + to_string(region.lo) + ", " + to_string(region.hi) +
                              ") straddles the line x = " + to_string(cfg[a]));
        if (cfg[a] <= region.lo)
            out += Rational(g.z[a + 1]);
    }
    return out;
}

Polygon apply_polygon(const GroupElement& g, const LineConfig& cfg, const Polygon& polygon)
{
    require_binding(g, cfg);
    const auto& vs = polygon.vertices();
    std::vector<Point2> refined;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point2& p = vs[i];
        const Point2& q = vs[(i + 1) % vs.size()];
        refined.push_back(p);
        std::vector<Rational> crossings;
        for (const auto& j : cfg.abscissae())
            if ((p.x < j && j < q.x) || (q.x < j && j < p.x))
                crossings.push_back(j);
        if (q.x < p.x)
            std::reverse(crossings.begin(), crossings.end());
        for (const auto& j : crossings)
            refined.push_back({j, p.y + (q.y - p.y) * (j - p.x) / (q.x - p.x)});
    }
    for (auto& p : refined)
        p = apply_point(g, cfg, p);
    return Polygon(std::move(refined));
}

TaylorSeries apply_action_series(const GroupElement& g, const LineConfig& cfg, std::size_t a,
                                 const TaylorSeries& series)
{
    require_binding(g, cfg);
    if (a >= cfg.size())
        throw ConfigurationError("line index " + std::to_string(a) + " out of range");
    TaylorSeries out = series;
    const Rational& ja = cfg[a];
    Rational dx = Rational(g.z[0]);
    Rational dc = Rational(g.z[0]) * ja;
    for (std::size_t k = 0; k <= a; ++k) {
        dx += Rational(g.z[k + 1]);
        dc += Rational(g.z[k + 1]) * (ja - cfg[k]);
    }
    out.add(1, 0, dx);
    out.add(0, 0, dc + g.b);
    return out;
}

} // namespace semitoric
