#ifndef SEMITORIC_RENDER_HPP
#define SEMITORIC_RENDER_HPP

#include <string>

#include "semitoric/document.hpp"

namespace semitoric {

struct RenderOptions
{
    bool lattice = false; ///< draw integer lattice points
    int scale = 40;       ///< pixels per unit
};

/// SVG 1.1 drawing of a validating ingredient: outline, one dashed line per
/// cut, an × per mark with its multiplicity, and the wall-crossing index of
/// each line segment written to its left. Throws ValidationError otherwise.
std::string render_svg(const SemitoricIngredient& ingredient, const RenderOptions& options = {});
std::string render_svg(const IngredientDocument& doc, const RenderOptions& options = {});

} // namespace semitoric

#endif
