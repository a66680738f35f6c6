#ifndef SEMITORIC_TAYLOR_HPP
#define SEMITORIC_TAYLOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semitoric/rational.hpp"

namespace semitoric {

/// Action series store coefficients in units of 2*pi; transition series are raw.
enum class SeriesFlavor { action, transition };

/**
 * A formal power series in X and Y truncated at total degree D, with exact
 * rational coefficients.
 *
 * Coefficients are kept densely in graded-lexicographic order: by total
 * degree, then by the X exponent. That order is also the comparison order
 * used for canonical forms.
 */
class TaylorSeries
{
public:
    explicit TaylorSeries(int degree_cap, SeriesFlavor flavor = SeriesFlavor::action);

    static TaylorSeries constant(int degree_cap, const Rational& c, SeriesFlavor flavor = SeriesFlavor::action);
    static TaylorSeries monomial(int degree_cap, int p, int q, const Rational& c,
                                 SeriesFlavor flavor = SeriesFlavor::action);
    /// The transition identity g = Y.
    static TaylorSeries identity_y(int degree_cap);

    int degree_cap() const noexcept { return degree_cap_; }
    SeriesFlavor flavor() const noexcept { return flavor_; }

    /// Coefficient of X^p Y^q; zero when p + q exceeds the cap.
    const Rational& coeff(int p, int q) const;
    void set(int p, int q, const Rational& c);
    void add(int p, int q, const Rational& c);

    /// Nonzero coefficients as ((p, q), c), graded-lex ordered.
    std::vector<std::pair<std::pair<int, int>, Rational>> terms() const;
    bool is_zero() const;

    TaylorSeries truncated(int degree_cap) const;
    TaylorSeries with_flavor(SeriesFlavor flavor) const;

    /// Exponent pair at a dense position, and the inverse map.
    static std::pair<int, int> exponent_at(std::size_t index);
    static std::size_t index_of(int p, int q);
    std::size_t dense_size() const noexcept { return coeffs_.size(); }
    const Rational& dense(std::size_t index) const { return coeffs_[index]; }

    TaylorSeries& operator+=(const TaylorSeries& other);
    TaylorSeries& operator-=(const TaylorSeries& other);
    TaylorSeries& operator*=(const Rational& scalar);

    friend TaylorSeries operator+(TaylorSeries a, const TaylorSeries& b) { return a += b; }
    friend TaylorSeries operator-(TaylorSeries a, const TaylorSeries& b) { return a -= b; }
    friend TaylorSeries operator*(TaylorSeries a, const Rational& s) { return a *= s; }
    /// Truncated product.
    friend TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b);

    /// Same cap and coefficients; the flavor tag is not compared.
    friend bool operator==(const TaylorSeries& a, const TaylorSeries& b);

    std::string str() const;

private:
    int degree_cap_;
    SeriesFlavor flavor_;
    std::vector<Rational> coeffs_;
};

/// Graded-lex comparison of coefficient sequences (caps must agree): -1, 0 or 1.
int compare(const TaylorSeries& a, const TaylorSeries& b);

/// First graded-lex exponent where the two series differ.
std::optional<std::pair<int, int>> first_difference(const TaylorSeries& a, const TaylorSeries& b);

/// f(X, g(X, Y)) truncated at the common degree cap; g must have zero constant term.
TaylorSeries compose_y(const TaylorSeries& f, const TaylorSeries& g);

/// The series h with g(X, h(X, Y)) = Y = h(X, g(X, Y)) up to the degree cap.
TaylorSeries invert_y(const TaylorSeries& g);

/// Action and transition series attached to one focus-focus fibre with m pinches.
struct TaylorTuple
{
    std::vector<TaylorSeries> action;                   ///< indexed by Z_m
    std::vector<std::vector<TaylorSeries>> transition;  ///< transition[mu][nu]

    int m() const noexcept { return static_cast<int>(action.size()); }
    int degree_cap() const;
    TaylorTuple truncated(int degree_cap) const;

    friend bool operator==(const TaylorTuple&, const TaylorTuple&) = default;
};

struct RelationViolation
{
    int relation = 0; ///< 1..4 in the order: positivity, action compatibility, identity, cocycle
    int mu = 0;
    int nu = 0;
    int sigma = 0;
    std::optional<std::pair<int, int>> exponent;
    std::string detail;

    std::string describe() const;
};

struct RelationReport
{
    int degree = 0;
    std::vector<RelationViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks, up to the tuple's degree cap: g_{mu,nu} has positive Y coefficient;
/// s_mu(X, Y) = s_nu(X, g_{mu,nu}(X, Y)); g_{mu,mu} = Y; and
/// g_{mu,sigma}(X, Y) = g_{nu,sigma}(X, g_{mu,nu}(X, Y)), the composition order
/// that the second relation forces when the transitions do not commute.
RelationReport check_relations(const TaylorTuple& tuple);

/// Builds the unique relation-satisfying tuple from the series at index 0 and
/// the m - 1 consecutive transitions g_{0,1}, ..., g_{m-2,m-1}.
TaylorTuple complete_from_generators(const TaylorSeries& action0, const std::vector<TaylorSeries>& generators);

/// (s_{mu+z}, g_{mu+z, nu+z}).
TaylorTuple rotate(const TaylorTuple& tuple, int z);

/// A tuple in the canonical rotation of its Z_m orbit.
class TaylorOrbit
{
public:
    explicit TaylorOrbit(const TaylorTuple& tuple);

    const TaylorTuple& tuple() const noexcept { return tuple_; }
    int m() const noexcept { return tuple_.m(); }

    friend bool operator==(const TaylorOrbit&, const TaylorOrbit&) = default;

private:
    TaylorTuple tuple_;
};

/// The rotation minimal in the order: action[0], then g_{0,1}, g_{1,2}, ...
TaylorOrbit cyclic_canonical(const TaylorTuple& tuple);

/// Window for the X coefficient of representatives: [0, 1) or [1/4, 5/4) turns.
enum class TwistConvention { standard, quarter_shifted };

Rational window_start(TwistConvention convention);

/**
 * An action series modulo its constant term and integer multiples of X
 * (2*pi X in physical units). Stored as the representative with zero
 * constant term and X coefficient in [0, 1).
 */
class ActionClass
{
public:
    explicit ActionClass(const TaylorSeries& series);

    const TaylorSeries& normalized() const noexcept { return rep_; }

    friend bool operator==(const ActionClass&, const ActionClass&) = default;

private:
    TaylorSeries rep_;
};

/// Right inverse of the quotient map: the representative with zero constant
/// term and X coefficient in the convention's window.
TaylorSeries psi(const ActionClass& s, TwistConvention convention = TwistConvention::standard);

struct Decomposition
{
    ActionClass s;
    std::int64_t k;
    Rational c;
};

/// s = class of the series, k = floor of the X coefficient (shifted by the
/// convention's window start), c = constant term.
Decomposition decompose(const TaylorSeries& action, TwistConvention convention = TwistConvention::standard);

/// psi(s) + k X + c.
TaylorSeries reconstruct(const Decomposition& d, TwistConvention convention = TwistConvention::standard);

} // namespace semitoric

#endif
