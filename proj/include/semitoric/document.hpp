#ifndef SEMITORIC_DOCUMENT_HPP
#define SEMITORIC_DOCUMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semitoric/invariant.hpp"

namespace semitoric {

inline constexpr const char* kFormatVersion = "semitoric/1";
inline constexpr int kDefaultDegreeCap = 8;

/// A label given only by its generating data: the action series at index 0
/// and the consecutive transitions g_{0,1}, ..., g_{m-2,m-1}.
struct GeneratorLabel
{
    TaylorSeries action0;
    std::vector<TaylorSeries> generators;

    friend bool operator==(const GeneratorLabel&, const GeneratorLabel&) = default;
};

struct MarkDocument
{
    Point2 position;
    int multiplicity = 1;
    std::variant<TaylorTuple, GeneratorLabel> label;

    friend bool operator==(const MarkDocument&, const MarkDocument&) = default;
};

/**
 * On-disk form of an ingredient. The text format is JSON in a strict
 * canonical profile:
 *
 *   {"format_version":"semitoric/1","degree_cap":8,"placeholder_labels":false,
 *    "polygon":[["x","y"],...],"lines":["j",...],"wall_indices":[w,...],
 *    "marks":[{"position":["x","y"],"multiplicity":m,
 *              "label":{"action":[S,...],"transition":[[S,...],...]}}]}
 *
 * where a series S is a list of [p, q, "c"] triples in graded-lex order with
 * zero coefficients omitted, and rationals are reduced "p/q" strings. A
 * label may instead be {"action0":S,"generators":[S,...]}, which the
 * `complete` step expands. Keys are written in the order above with no
 * whitespace.
 */
struct IngredientDocument
{
    int degree_cap = kDefaultDegreeCap;
    bool placeholder_labels = false;
    Polygon polygon;
    LineConfig lines;
    std::vector<std::int64_t> wall_indices;
    std::vector<MarkDocument> marks;

    friend bool operator==(const IngredientDocument&, const IngredientDocument&) = default;
};

/// Throws ParseError (syntax), SchemaError (content) or VersionError.
IngredientDocument parse_document(std::string_view text);

std::string serialize(const IngredientDocument& doc);

/// Throws SchemaError if a label is still in generator form.
SemitoricIngredient to_ingredient(const IngredientDocument& doc);

/// Labels are truncated to degree_cap when given; otherwise the labels'
/// common cap is used (kDefaultDegreeCap when there are no marks).
IngredientDocument to_document(const SemitoricIngredient& ingredient, bool placeholder_labels = false,
                               std::optional<int> degree_cap = std::nullopt);

/// Expands every generator-form label into a full tuple.
IngredientDocument complete_document(const IngredientDocument& doc);

std::string read_file(const std::string& path);

/// Writes to a temporary sibling file and renames it over the target.
void write_file_atomic(const std::string& path, std::string_view content);

} // namespace semitoric

#endif
