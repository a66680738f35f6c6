#ifndef SEMITORIC_RATIONAL_HPP
#define SEMITORIC_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace semitoric {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Largest integer not exceeding r.
Integer floor(const Rational& r);

/// floor(r) as a machine integer; throws PreconditionError if it does not fit.
std::int64_t floor_to_int64(const Rational& r);

std::int64_t to_int64(const Integer& n);

/// Reduced "p/q" form with positive denominator; integers are written "p".
std::string to_string(const Rational& r);

/// Accepts only the reduced form produced by to_string (plus an optional
/// "/1"-free integer); returns nullopt otherwise. Used by the document parser.
std::optional<Rational> parse_rational(std::string_view text);

/// Same as parse_rational but throws PreconditionError with a message.
Rational rational_from_string(std::string_view text);

double to_double(const Rational& r);

struct Point2
{
    Rational x;
    Rational y;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Lexicographic order: x first, then y.
bool lex_less(const Point2& a, const Point2& b);

/// Cross product (b - a) x (c - b).
Rational turn(const Point2& a, const Point2& b, const Point2& c);

/// An integer vector in the plane.
struct LatticeVector
{
    Integer x;
    Integer y;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

/// Primitive integer vector with the same direction as (dx, dy); (dx, dy) must be nonzero.
LatticeVector primitive_direction(const Rational& dx, const Rational& dy);

Integer determinant(const LatticeVector& u, const LatticeVector& v);

std::string to_string(const Point2& p);

} // namespace semitoric

#endif
