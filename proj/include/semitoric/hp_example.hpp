#ifndef SEMITORIC_HP_EXAMPLE_HPP
#define SEMITORIC_HP_EXAMPLE_HPP

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "semitoric/document.hpp"

namespace semitoric {

/// Coupled spin-spin family on S^2 x S^2 with unit radii and s2 = s1.
struct HPParameters
{
    Rational s1{1, 2};
};

enum class HPVariant {
    a, ///< two focus-focus points in different fibres (s1 != 1/2)
    b  ///< one fibre pinched twice (s1 = 1/2)
};

/**
 * Ingredient document for the family: polygon (-2,-1),(0,-1),(2,1),(0,1),
 * one cut at x = 0 with lower wall index -1. Mark heights and labels are
 * placeholders (placeholder_labels is set): variant b has one mark of
 * multiplicity 2 at (0,0), variant a has marks at (0, -|1-2s1|) and
 * (0, |1-2s1|). Throws PreconditionError for out-of-range s1.
 */
IngredientDocument hp_example(const HPParameters& params, HPVariant variant);

struct HPSamples
{
    std::vector<std::pair<double, double>> samples;        ///< (J, H) at the grid points
    std::array<std::pair<double, double>, 2> critical{};   ///< focus-focus values
};

/// Momentum map values on an n-point Halton grid of S^2 x S^2, plus the
/// images of (0,0,1,0,0,-1) and (0,0,-1,0,0,1). Floating point.
HPSamples sample_hp(const HPParameters& params, std::size_t n);

} // namespace semitoric

#endif
