#ifndef SEMITORIC_TESTS_SUPPORT_HPP
#define SEMITORIC_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "semitoric/document.hpp"

namespace testing {

using namespace semitoric;

inline std::string fixture_path(const std::string& name)
{
    return std::string(SEMITORIC_FIXTURE_DIR) + "/" + name;
}

inline IngredientDocument load_document(const std::string& name)
{
    return parse_document(read_file(fixture_path(name)));
}

inline SemitoricIngredient load_fixture(const std::string& name)
{
    return to_ingredient(load_document(name));
}

/// Fixtures holding complete labels.
inline const std::vector<std::string>& complete_fixtures()
{
    static const std::vector<std::string> names{"three_lines.json",  "three_lines_w0.json", "hp_a.json",
                                                "hp_b.json",  "simple2.json", "toric_square.json"};
    return names;
}

inline const std::vector<std::string>& all_fixtures()
{
    static const std::vector<std::string> names{"three_lines.json",    "three_lines_partial.json", "three_lines_w0.json",     "hp_a.json",
                                                "hp_b.json",    "simple2.json",      "toric_square.json"};
    return names;
}

/// Series from (p, q, coefficient) triples.
inline TaylorSeries series(int cap, std::initializer_list<std::tuple<int, int, Rational>> terms,
                           SeriesFlavor flavor = SeriesFlavor::action)
{
    TaylorSeries s(cap, flavor);
    for (const auto& [p, q, c] : terms)
        s.set(p, q, c);
    return s;
}

inline Rational Q(const char* text)
{
    return rational_from_string(text);
}

class Random
{
public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
    }

    /// p/q with |p| <= num_bound and 1 <= q <= den_bound.
    Rational rational(std::int64_t num_bound = 20, std::int64_t den_bound = 7)
    {
        return Rational(integer(-num_bound, num_bound), integer(1, den_bound));
    }

    Rational nonzero_rational(std::int64_t num_bound = 20, std::int64_t den_bound = 7)
    {
        Rational r;
        do
            r = rational(num_bound, den_bound);
        while (r == 0);
        return r;
    }

    bool coin() { return integer(0, 1) == 1; }

    GroupElement group_element(std::size_t lambda, std::int64_t bound = 3)
    {
        GroupElement g = GroupElement::identity(lambda);
        for (auto& z : g.z)
            z = integer(-bound, bound);
        g.b = rational();
        return g;
    }

    Point2 point() { return {rational(), rational()}; }

    /// Random series with roughly the given fraction of nonzero terms.
    TaylorSeries series(int cap, SeriesFlavor flavor, int density_percent = 50)
    {
        TaylorSeries s(cap, flavor);
        for (std::size_t i = 0; i < s.dense_size(); ++i) {
            const auto [p, q] = TaylorSeries::exponent_at(i);
            if (integer(1, 100) <= density_percent)
                s.set(p, q, rational(9, 5));
        }
        return s;
    }

    /// Zero constant term and positive Y coefficient.
    TaylorSeries transition(int cap)
    {
        TaylorSeries s = series(cap, SeriesFlavor::transition, 40);
        s.set(0, 0, 0);
        s.set(0, 1, Rational(integer(1, 9), integer(1, 4)));
        return s;
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

/// A fixture moved by a random group element.
inline SemitoricIngredient random_representative(Random& rng, bool with_marks = false)
{
    static const std::vector<SemitoricIngredient> bases = [] {
        std::vector<SemitoricIngredient> out;
        for (const auto& name : complete_fixtures())
            out.push_back(load_fixture(name));
        return out;
    }();
    const SemitoricIngredient* base = nullptr;
    do
        base = &bases[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(bases.size()) - 1))];
    while (with_marks && base->marks().empty());
    return act(rng.group_element(base->lambda()), *base);
}

/// Same data with one non-constant coefficient of one label changed; the
/// label is rebuilt from its generators so that it still satisfies the relations.
inline SemitoricIngredient perturb_label(Random& rng, const SemitoricIngredient& I)
{
    auto marks = I.marks();
    auto& mark = marks[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(marks.size()) - 1))];
    const TaylorTuple& t = mark.label.tuple();
    TaylorSeries s0 = t.action[0];
    const int cap = s0.degree_cap();
    std::pair<int, int> e;
    do
        e = TaylorSeries::exponent_at(static_cast<std::size_t>(rng.integer(1, (cap + 1) * (cap + 2) / 2 - 1)));
    while (e.first + e.second > cap);
    // the Y coefficient must stay nonzero for the label to remain a valid chart
    Rational c;
    do
        c = s0.coeff(e.first, e.second) + rng.nonzero_rational();
    while (e == std::pair<int, int>{0, 1} && c == 0);
    s0.set(e.first, e.second, c);
    std::vector<TaylorSeries> gens;
    for (int mu = 0; mu + 1 < t.m(); ++mu)
        gens.push_back(t.transition[static_cast<std::size_t>(mu)][static_cast<std::size_t>(mu + 1)]);
    mark.label = TaylorOrbit(complete_from_generators(s0, gens));
    return SemitoricIngredient(I.polygon(), I.lines(), I.wall_indices(), marks);
}

} // namespace testing

#endif
