#ifndef SEMITORIC_INVARIANT_HPP
#define SEMITORIC_INVARIANT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "semitoric/affine_group.hpp"
#include "semitoric/polygon.hpp"
#include "semitoric/taylor.hpp"

namespace semitoric {

struct MarkedPoint
{
    Point2 position;
    int multiplicity = 1;
    TaylorOrbit label;

    friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

/**
 * One representative of a complete semitoric invariant: the polygon, the
 * cut lines with their lower wall-crossing indices, and the marked points
 * with multiplicities and Taylor labels.
 *
 * The constructor only checks shapes (one index per line, label size equal
 * to the multiplicity); everything else is reported by validate().
 */
class SemitoricIngredient
{
public:
    SemitoricIngredient(Polygon polygon, LineConfig lines, std::vector<std::int64_t> wall_indices,
                        std::vector<MarkedPoint> marks);

    const Polygon& polygon() const noexcept { return polygon_; }
    const LineConfig& lines() const noexcept { return lines_; }
    const std::vector<std::int64_t>& wall_indices() const noexcept { return wall_indices_; }
    const std::vector<MarkedPoint>& marks() const noexcept { return marks_; }

    std::size_t lambda() const noexcept { return lines_.size(); }
    std::size_t v() const noexcept { return marks_.size(); }

    /// Line index carrying the mark; throws PreconditionError if it is on no line.
    std::size_t line_of(std::size_t mark) const;
    /// Multiplicities of the marks on line a, bottom to top.
    std::vector<int> multiplicities_on(std::size_t a) const;
    /// Sum of the multiplicities on line a.
    int total_multiplicity(std::size_t a) const;
    /// Total number of focus-focus points.
    int focus_focus_count() const;

    friend bool operator==(const SemitoricIngredient&, const SemitoricIngredient&) = default;

private:
    Polygon polygon_;
    LineConfig lines_;
    std::vector<std::int64_t> wall_indices_;
    std::vector<MarkedPoint> marks_;
};

struct ItemResult
{
    int item = 0;
    std::string title;
    bool passed = true;
    std::vector<std::string> notes; ///< failures, or witnesses when passing

    void fail(std::string why)
    {
        passed = false;
        notes.push_back(std::move(why));
    }
};

struct ValidationReport
{
    std::vector<ItemResult> items; ///< items 1..7 in order

    bool ok() const;
    std::string str() const;
};

/// Checks the seven conditions a representative must meet to be a complete semitoric ingredient.
ValidationReport validate(const SemitoricIngredient& ingredient);

/// The action of (z; b): polygon and marks move, lines stay, w_a becomes w_a - z_a,
/// action series transform, transition series are untouched.
SemitoricIngredient act(const GroupElement& g, const SemitoricIngredient& ingredient);

/// The element that canonicalize() applies.
GroupElement canonicalizing_element(const SemitoricIngredient& ingredient);

/**
 * Distinguished orbit representative: every lower wall index 0, the leftmost
 * non-vertical lower edge has slope in [0, 1), and the polygon's minimum
 * height is 0. Throws PreconditionError if the ingredient does not validate.
 */
SemitoricIngredient canonicalize(const SemitoricIngredient& ingredient);

/// Same orbit under Z^{lambda+1} x Q. Labels are compared at the smaller degree cap.
bool orbits_equal(const SemitoricIngredient& a, const SemitoricIngredient& b);

/// Label constant term minus the polygon's minimum height on the mark's line.
std::vector<Rational> heights(const SemitoricIngredient& ingredient);

/// floor of the X coefficient of each action series, per mark and per series.
std::vector<std::vector<std::int64_t>> twisting_indices(const SemitoricIngredient& ingredient,
                                                        TwistConvention convention = TwistConvention::standard);

/// Twisting indices of a whole fibre from one index, the class of s_0 and the generators.
std::vector<std::int64_t> twist_propagate(std::int64_t k0, const ActionClass& s0,
                                          const std::vector<TaylorSeries>& generators);

struct SemilocalLabel
{
    std::vector<ActionClass> action;
    std::vector<std::vector<TaylorSeries>> transition;

    friend bool operator==(const SemilocalLabel&, const SemilocalLabel&) = default;
};

/// Labels with constant terms and integer X multiples forgotten.
std::vector<SemilocalLabel> semilocal_labels(const SemitoricIngredient& ingredient);

struct ClassicalValue
{
    Point2 value;
    /// Representative of the Taylor series invariant with X and Y swapped.
    /// The classical convention additionally subtracts a quarter turn times
    /// the second variable; that irrational shift is not applied to the
    /// coefficients and is flagged instead.
    TaylorSeries taylor_series;
    bool quarter_turn_shift = true;
    Rational height;
    std::int64_t twisting_index = 0;
    int cut_sign = 1;
};

struct ClassicalInvariants
{
    std::size_t focus_focus_count = 0;
    Polygon polygon;
    std::vector<ClassicalValue> values;
};

/// The five classical invariants of a simple ingredient (one mark of
/// multiplicity one per line). Throws PreconditionError otherwise.
ClassicalInvariants classical_invariants(const SemitoricIngredient& ingredient);

} // namespace semitoric

#endif
