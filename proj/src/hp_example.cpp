#include "semitoric/hp_example.hpp"

#include <cmath>
#include <numbers>

#include "semitoric/errors.hpp"

namespace semitoric {

namespace {

double halton(std::size_t index, unsigned base)
{
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

struct Sphere
{
    double x, y, z;
};

Sphere sphere_point(double u, double v)
{
    const double z = 2.0 * u - 1.0;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = 2.0 * std::numbers::pi * v;
    return {rho * std::cos(phi), rho * std::sin(phi), z};
}

std::pair<double, double> momentum(double s, const Sphere& p1, const Sphere& p2)
{
    const double J = p1.z + p2.z;
    const double H = (1 - s) * (1 - s) * p1.z + s * s * p2.z + 2 * s * (1 - s) * (p1.x * p2.x + p1.y * p2.y);
    return {J, H};
}

MarkDocument mark(const Point2& position, int multiplicity, int cap)
{
    TaylorSeries action0 = TaylorSeries::identity_y(cap);
    action0.set(0, 0, position.y);
    std::vector<TaylorSeries> generators(static_cast<std::size_t>(multiplicity - 1),
                                         TaylorSeries::identity_y(cap).with_flavor(SeriesFlavor::transition));
    return {position, multiplicity, complete_from_generators(action0, generators)};
}

} // namespace

IngredientDocument hp_example(const HPParameters& params, HPVariant variant)
{
    const Rational& s1 = params.s1;
    if (s1 < 0 || s1 > 1)
        throw PreconditionError("s1 must lie in [0, 1]");
    const Rational half(1, 2);
    const int cap = kDefaultDegreeCap;
    std::vector<MarkDocument> marks;
    if (variant == HPVariant::b) {
        if (s1 != half)
            throw PreconditionError("variant b needs s1 = 1/2");
        marks.push_back(mark({0, 0}, 2, cap));
    } else {
        if (s1 == half || s1 == 0 || s1 == 1)
            throw PreconditionError("variant a needs 0 < s1 < 1 and s1 != 1/2");
        const Rational d = abs(1 - 2 * s1);
        marks.push_back(mark({0, -d}, 1, cap));
        marks.push_back(mark({0, d}, 1, cap));
    }
    Polygon polygon({{-2, -1}, {0, -1}, {2, 1}, {0, 1}});
    return {cap, true, std::move(polygon), LineConfig({Rational(0)}), {-1}, std::move(marks)};
}

HPSamples sample_hp(const HPParameters& params, std::size_t n)
{
    const double s = to_double(params.s1);
    HPSamples out;
    out.samples.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const Sphere p1 = sphere_point(halton(i, 2), halton(i, 3));
        const Sphere p2 = sphere_point(halton(i, 5), halton(i, 7));
        out.samples.push_back(momentum(s, p1, p2));
    }
    out.critical[0] = momentum(s, {0, 0, 1}, {0, 0, -1});
    out.critical[1] = momentum(s, {0, 0, -1}, {0, 0, 1});
    return out;
}

} // namespace semitoric
