#include "semitoric/rational.hpp"

#include <limits>
#include <regex>

#include "semitoric/errors.hpp"

namespace semitoric {

Integer floor(const Rational& r)
{
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    Integer q = num / den;
    if (num % den != 0 && num < 0)
        q -= 1;
    return q;
}

std::int64_t to_int64(const Integer& n)
{
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        throw PreconditionError("integer " + n.str() + " does not fit in 64 bits");
    return n.convert_to<std::int64_t>();
}

std::int64_t floor_to_int64(const Rational& r)
{
    return to_int64(floor(r));
}

std::string to_string(const Rational& r)
{
    return r.str();
}

std::optional<Rational> parse_rational(std::string_view text)
{
    static const std::regex pattern("^(-?)(0|[1-9][0-9]*)(?:/([1-9][0-9]*))?$");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(text.begin(), text.end(), m, pattern))
        return std::nullopt;
    const bool negative = m[1].length() > 0;
    Integer num(m[2].str());
    if (negative && num == 0)
        return std::nullopt;
    Integer den(1);
    if (m[3].matched) {
        den = Integer(m[3].str());
        if (den == 1 || boost::multiprecision::gcd(num, den) != 1)
            return std::nullopt;
    }
    if (negative)
        num = -num;
    return Rational(num, den);
}

Rational rational_from_string(std::string_view text)
{
    auto r = parse_rational(text);
    if (!r)
        throw PreconditionError("not a reduced rational: \"" + std::string(text) + "\"");
    return *r;
}

double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

bool lex_less(const Point2& a, const Point2& b)
{
    if (a.x != b.x)
        return a.x < b.x;
    return a.y < b.y;
}

Rational turn(const Point2& a, const Point2& b, const Point2& c)
{
    return (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
}

LatticeVector primitive_direction(const Rational& dx, const Rational& dy)
{
    if (dx == 0 && dy == 0)
        throw GeometryError("zero direction vector has no primitive representative");
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const Integer l = boost::multiprecision::lcm(denominator(dx), denominator(dy));
    Integer ix = numerator(dx) * (l / denominator(dx));
    Integer iy = numerator(dy) * (l / denominator(dy));
    const Integer g = boost::multiprecision::gcd(ix, iy);
    ix /= g;
    iy /= g;
    return {ix, iy};
}

Integer determinant(const LatticeVector& u, const LatticeVector& v)
{
    return u.x * v.y - u.y * v.x;
}

std::string to_string(const Point2& p)
{
    return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

} // namespace semitoric
