#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/hp_example.hpp"
#include "semitoric/render.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Collects the first failure of a criterion.
class Check
{
public:
    void operator()(bool ok, const std::string& what)
    {
        if (!ok && failure_.empty())
            failure_ = what;
    }
    const std::string& failure() const { return failure_; }

private:
    std::string failure_;
};

LineConfig random_config(Random& rng, std::size_t lambda)
{
    std::vector<Rational> j;
    Rational x = rng.rational(6, 3);
    for (std::size_t i = 0; i < lambda; ++i) {
        j.push_back(x);
        x += Rational(rng.integer(1, 6), rng.integer(1, 3));
    }
    return LineConfig(j);
}

void group_action(Check& check)
{
    Random rng(101);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t lambda = static_cast<std::size_t>(rng.integer(0, 4));
        const LineConfig cfg = random_config(rng, lambda);
        const auto g1 = rng.group_element(lambda), g2 = rng.group_element(lambda), g3 = rng.group_element(lambda);
        const Point2 p = rng.point();
        check(compose(compose(g1, g2), g3) == compose(g1, compose(g2, g3)), "associativity");
        check(compose(g1, g2) == compose(g2, g1), "commutativity");
        check(compose(g1, GroupElement::identity(lambda)) == g1, "identity");
        check(compose(g1, inverse(g1)) == GroupElement::identity(lambda), "inverse");
        check(apply_point(compose(g1, g2), cfg, p) == apply_point(g1, cfg, apply_point(g2, cfg, p)),
              "action homomorphism");
    }
}

void ladder_fixture(Check& check)
{
    check(wall_ladder(-4, {5}) == std::vector<std::int64_t>{-4, 1}, "wall_ladder(-4, [5])");
    const auto three = load_fixture("three_lines.json");
    check(three.wall_indices() == std::vector<std::int64_t>{-2, 1, -4}, "wall indices (-2, 1, -4)");
    check(three.lambda() == 3 && three.v() == 4, "three lines and four marks");
    check(three.multiplicities_on(1) == std::vector<int>{1, 2}, "multiplicities on the middle line");
    check(slope_jump(three.polygon(), 3, Side::lower) == 5, "lower slope jump 5 at the last line");
    check(classify_wall_point(three.polygon(), 3, -4, Side::lower) == CornerClass::hidden, "hidden corner");
    check(validate(three).ok(), "fixture validates");
}

void corner_anchor(Check& check)
{
    const Polygon jump5({{-1, 0}, {0, 0}, {1, 5}, {-1, 5}});
    check(classify_wall_point(jump5, 0, -4, Side::lower) == CornerClass::hidden, "jump 5, index -4 is hidden");
    check(classify_wall_point(jump5, 0, -5, Side::lower) == CornerClass::no_vertex, "residual 0 is no_vertex");
    check(classify_wall_point(jump5, 0, -3, Side::lower) == CornerClass::violation, "residual 2 is a violation");
    const Polygon hp({{-2, -1}, {0, -1}, {2, 1}, {0, 1}});
    check(classify_wall_point(hp, 0, -1, Side::lower) == CornerClass::no_vertex, "HP lower residual 0");
    const Polygon jump2({{-1, 0}, {0, 0}, {1, 2}, {-1, 2}});
    check(classify_wall_point(jump2, 0, 0, Side::lower) == CornerClass::violation, "jump 2, index 0");
}

void hp_fixtures(Check& check)
{
    for (const char* name : {"hp_a.json", "hp_b.json"}) {
        const auto I = load_fixture(name);
        std::vector<std::int64_t> valid;
        for (std::int64_t w = -5; w <= 5; ++w)
            if (validate(SemitoricIngredient(I.polygon(), I.lines(), {w}, I.marks())).ok())
                valid.push_back(w);
        check(valid == std::vector<std::int64_t>{-1}, std::string("unique w = -1 for ") + name);
        const auto c = canonicalize(I);
        check(c.wall_indices() == std::vector<std::int64_t>{0}, "canonical w = 0");
        check(is_convex(c.polygon()), std::string("canonical polygon convex for ") + name);
    }
    check(!orbits_equal(load_fixture("hp_a.json"), load_fixture("hp_b.json")), "variant a differs from b");
}

void taylor_suite(Check& check)
{
    Random rng(105);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = std::vector<int>{1, 2, 3, 5}[static_cast<std::size_t>(trial % 4)];
        std::vector<TaylorSeries> gens;
        for (int i = 0; i + 1 < m; ++i)
            gens.push_back(rng.transition(8));
        check(check_relations(complete_from_generators(rng.series(8, SeriesFlavor::action), gens)).ok(),
              "completion satisfies the relations");
        const auto g = rng.transition(8);
        const auto h = invert_y(g);
        const auto Y = TaylorSeries::identity_y(8).with_flavor(SeriesFlavor::transition);
        check(compose_y(g, h) == Y && compose_y(h, g) == Y, "two-sided inverse");
    }
    const auto T = SeriesFlavor::transition;
    check(invert_y(series(3, {{0, 1, 1}, {0, 2, 1}}, T)) == series(3, {{0, 1, 1}, {0, 2, -1}, {0, 3, 2}}, T),
          "Y + Y^2 inverts to Y - Y^2 + 2Y^3");
}

void decomposition(Check& check)
{
    Random rng(106);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = rng.series(8, SeriesFlavor::action);
        check(reconstruct(decompose(s)) == s, "decompose/reconstruct");
        check(reconstruct(decompose(s, TwistConvention::quarter_shifted), TwistConvention::quarter_shifted) == s,
              "decompose/reconstruct in the shifted window");
    }
}

void orbit_suite(Check& check)
{
    Random rng(107);
    for (int trial = 0; trial < 500; ++trial) {
        const auto I = random_representative(rng);
        const auto g = rng.group_element(I.lambda());
        const auto c = canonicalize(I);
        check(canonicalize(c) == c, "idempotence");
        check(canonicalize(act(g, I)) == c, "canonical form is constant on orbits");
        check(orbits_equal(I, act(g, I)), "orbit soundness");
        if (!I.marks().empty())
            check(!orbits_equal(I, perturb_label(rng, I)), "perturbed label detected");
    }
}

void invariance_laws(Check& check)
{
    Random rng(108);
    for (int trial = 0; trial < 200; ++trial) {
        const auto I = random_representative(rng);
        const auto g = rng.group_element(I.lambda());
        const auto J = act(g, I);
        check(heights(J) == heights(I), "heights");
        check(semilocal_labels(J) == semilocal_labels(I), "semilocal labels");
        const auto before = twisting_indices(I), after = twisting_indices(J);
        for (std::size_t i = 0; i < I.v(); ++i) {
            std::int64_t shift = g.z[0];
            for (std::size_t a = 0; a <= I.line_of(i); ++a)
                shift += g.z[a + 1];
            for (std::size_t mu = 0; mu < before[i].size(); ++mu)
                check(after[i][mu] - before[i][mu] == shift, "twisting index shift");
        }
    }
}

void classical_extraction(Check& check)
{
    const auto s = load_fixture("simple2.json");
    const auto up = classical_invariants(s);
    for (std::size_t a = 0; a < s.lambda(); ++a) {
        const auto down = classical_invariants(act(GroupElement::cut(s.lambda(), a, 1), s));
        check(down.values[a].cut_sign == -1 && up.values[a].cut_sign == 1, "cut signs");
        check(down.values[a].twisting_index == up.values[a].twisting_index, "k_classical under the cut flip");
    }
    std::ostringstream out, err;
    check(semitoric::cli::run({"extract", fixture_path("hp_b.json")}, out, err) == 2, "non-simple input exits 2");
}

void hp_sampler(Check& check)
{
    Random rng(110);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational s1(rng.integer(0, 10000), 10000);
        const double s = to_double(s1);
        const auto r = sample_hp({s1}, 1);
        check(std::abs(r.critical[0].first) < 1e-12 && std::abs(r.critical[1].first) < 1e-12, "J = 0");
        check(std::abs(r.critical[0].second - (1 - 2 * s)) < 1e-12, "H = 1 - 2 s1");
        check(std::abs(r.critical[1].second - (2 * s - 1)) < 1e-12, "H = 2 s1 - 1");
    }
    const auto half = sample_hp({Rational(1, 2)}, 1);
    check(half.critical[0] == std::pair<double, double>{0, 0} && half.critical[1] == std::pair<double, double>{0, 0},
          "both values (0,0) at s1 = 1/2");
}

void io(Check& check)
{
    for (const auto& name : all_fixtures()) {
        const std::string text = read_file(fixture_path(name));
        check(serialize(parse_document(text)) == text, "byte-exact round trip of " + name);
    }
    for (const auto& name : complete_fixtures()) {
        const auto doc = load_document(name);
        check(render_svg(doc) == render_svg(doc), "identical SVG for " + name);
        check(render_svg(doc, {true, 40}) == render_svg(doc, {true, 40}), "identical SVG with lattice for " + name);
    }
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
        {"group action: 1000 random triples obey the group and action laws", group_action},
        {"ladder fixture: wall_ladder(-4,[5]) and the three-line fixture", ladder_fixture},
        {"corner anchor: jump 5 with index -4 is hidden", corner_anchor},
        {"HP fixtures: unique wall index, distinct variants, convex canonical polygon", hp_fixtures},
        {"Taylor suite: completion, two-sided inversion, Y+Y^2", taylor_suite},
        {"decomposition round trip on 100 random series", decomposition},
        {"orbit suite: 500 random canonicalization and equality trials", orbit_suite},
        {"invariance laws: heights, semilocal labels, twisting shifts", invariance_laws},
        {"classical extraction: cut-flip invariance and non-simple guard", classical_extraction},
        {"HP sampler: focus-focus values for 50 random s1", hp_sampler},
        {"I/O: canonical round trips and deterministic rendering", io},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(check);
        } catch (const std::exception& e) {
            check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = check.failure().empty();
        failed += ok ? 0 : 1;
        std::printf("criterion %2zu: %s  %s (%.2fs)%s%s\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].first, secs,
                    ok ? "" : " -- ", check.failure().c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
