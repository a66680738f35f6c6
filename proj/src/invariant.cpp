#include "semitoric/invariant.hpp"

#include <algorithm>
#include <sstream>

#include "semitoric/errors.hpp"

namespace semitoric {

SemitoricIngredient::SemitoricIngredient(Polygon polygon, LineConfig lines, std::vector<std::int64_t> wall_indices,
                                         std::vector<MarkedPoint> marks)
    : polygon_(std::move(polygon)), lines_(std::move(lines)), wall_indices_(std::move(wall_indices)),
      marks_(std::move(marks))
{
    if (wall_indices_.size() != lines_.size())
        throw ConfigurationError("expected " + std::to_string(lines_.size()) + " lower wall indices, got " +
                                 std::to_string(wall_indices_.size()));
    for (std::size_t i = 0; i < marks_.size(); ++i) {
        const MarkedPoint& mk = marks_[i];
        if (mk.multiplicity <= 0)
            throw PreconditionError("mark " + std::to_string(i) + " has non-positive multiplicity");
        if (mk.label.m() != mk.multiplicity)
            throw PreconditionError("mark " + std::to_string(i) + " has multiplicity " +
                                    std::to_string(mk.multiplicity) + " but a label with " +
                                    std::to_string(mk.label.m()) + " action series");
    }
}

std::size_t SemitoricIngredient::line_of(std::size_t mark) const
{
    auto a = lines_.find(marks_.at(mark).position.x);
    if (!a)
        throw PreconditionError("mark " + std::to_string(mark) + " at " + to_string(marks_[mark].position) +
                                " lies on no cut line");
    return *a;
}

std::vector<int> SemitoricIngredient::multiplicities_on(std::size_t a) const
{
    std::vector<std::pair<Rational, int>> on;
    for (const auto& mk : marks_)
        if (mk.position.x == lines_[a])
            on.emplace_back(mk.position.y, mk.multiplicity);
    std::sort(on.begin(), on.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<int> out;
    for (const auto& [y, m] : on)
        out.push_back(m);
    return out;
}

int SemitoricIngredient::total_multiplicity(std::size_t a) const
{
    int sum = 0;
    for (int m : multiplicities_on(a))
        sum += m;
    return sum;
}

int SemitoricIngredient::focus_focus_count() const
{
    int sum = 0;
    for (const auto& mk : marks_)
        sum += mk.multiplicity;
    return sum;
}

bool ValidationReport::ok() const
{
    return std::all_of(items.begin(), items.end(), [](const ItemResult& r) { return r.passed; });
}

std::string ValidationReport::str() const
{
    std::ostringstream os;
    for (const auto& r : items) {
        os << "item " << r.item << " [" << (r.passed ? "pass" : "FAIL") << "] " << r.title << "\n";
        for (const auto& n : r.notes)
            os << "    " << n << "\n";
    }
    os << (ok() ? "valid" : "invalid") << "\n";
    return os.str();
}

namespace {

ItemResult check_counts(const SemitoricIngredient& I)
{
    ItemResult r{1, "mark and line counts", true, {}};
    const std::size_t v = I.v();
    const std::size_t lambda = I.lambda();
    if (!((v == 0 && lambda == 0) || (v >= lambda && lambda >= 1)))
        r.fail("v = " + std::to_string(v) + ", lambda = " + std::to_string(lambda) +
               " violates v = lambda = 0 or v >= lambda >= 1");
    return r;
}

ItemResult check_compact(const SemitoricIngredient& I)
{
    ItemResult r{2, "compact vertical slices", true, {}};
    // Only compact polygons are representable, so every slice is a closed segment.
    r.notes.push_back("polygon is compact, x in [" + to_string(I.polygon().min_x()) + ", " +
                      to_string(I.polygon().max_x()) + "]");
    return r;
}

ItemResult check_marks(const SemitoricIngredient& I)
{
    ItemResult r{3, "marks distinct, ordered, interior and on the lines", true, {}};
    const auto& marks = I.marks();
    for (std::size_t i = 0; i < marks.size(); ++i) {
        const Point2& p = marks[i].position;
        if (i > 0 && !lex_less(marks[i - 1].position, p))
            r.fail("mark " + std::to_string(i) + " at " + to_string(p) + " is not strictly after mark " +
                   std::to_string(i - 1) + " in lexicographic order");
        if (!I.polygon().contains_interior(p))
            r.fail("mark " + std::to_string(i) + " at " + to_string(p) + " is not in the interior of the polygon");
        if (!I.lines().find(p.x))
            r.fail("mark " + std::to_string(i) + " at " + to_string(p) + " lies on no cut line");
    }
    for (std::size_t a = 0; a < I.lambda(); ++a)
        if (I.multiplicities_on(a).empty())
            r.fail("line x = " + to_string(I.lines()[a]) + " carries no mark");
    return r;
}

ItemResult check_smooth_vertices(const SemitoricIngredient& I)
{
    ItemResult r{4, "vertices off the lines are smooth", true, {}};
    for (const auto& v : I.polygon().vertices()) {
        if (I.lines().find(v.x))
            continue;
        if (!is_vertex_smooth(I.polygon(), v))
            r.fail("vertex " + to_string(v) + " is not smooth");
    }
    return r;
}

ItemResult check_wall_points(const SemitoricIngredient& I)
{
    ItemResult r{5, "boundary points on the lines are fake or hidden corners", true, {}};
    const Polygon& poly = I.polygon();
    for (std::size_t a = 0; a < I.lambda(); ++a) {
        const Rational& j = I.lines()[a];
        if (j <= poly.min_x() || j >= poly.max_x()) {
            r.fail("line x = " + to_string(j) + " does not cross the interior of the polygon");
            continue;
        }
        const std::int64_t w = I.wall_indices()[a];
        const std::int64_t top = w + I.total_multiplicity(a);
        for (Side side : {Side::lower, Side::upper}) {
            const std::int64_t adjacent = side == Side::lower ? w : top;
            const Point2 p = chain_point(poly, j, side);
            const CornerClass c = classify_wall_point(poly, j, adjacent, side);
            std::string where = std::string(side == Side::lower ? "lower" : "upper") + " point " + to_string(p) +
                                " (adjacent index " + std::to_string(adjacent) + ")";
            if (c == CornerClass::violation)
                r.fail(where + ": corner remains and is not smooth after re-anchoring");
            else if (c == CornerClass::hidden)
                r.notes.push_back(where + ": hidden corner");
            else if (poly.has_vertex(p))
                r.notes.push_back(where + ": fake corner");
        }
    }
    return r;
}

ItemResult check_constant_terms(const SemitoricIngredient& I)
{
    ItemResult r{6, "label constant terms equal mark heights", true, {}};
    const auto& marks = I.marks();
    for (std::size_t i = 0; i < marks.size(); ++i) {
        const auto& action = marks[i].label.tuple().action;
        for (std::size_t mu = 0; mu < action.size(); ++mu)
            if (action[mu].coeff(0, 0) != marks[i].position.y)
                r.fail("mark " + std::to_string(i) + ", series " + std::to_string(mu) + ": constant term " +
                       to_string(action[mu].coeff(0, 0)) + " differs from height " +
                       to_string(marks[i].position.y));
    }
    return r;
}

ItemResult check_labels(const SemitoricIngredient& I)
{
    ItemResult r{7, "Taylor labels satisfy the compatibility relations", true, {}};
    const auto& marks = I.marks();
    for (std::size_t i = 0; i < marks.size(); ++i) {
        const RelationReport rel = check_relations(marks[i].label.tuple());
        for (const auto& v : rel.violations)
            r.fail("mark " + std::to_string(i) + ": " + v.describe() + " (degree " + std::to_string(rel.degree) + ")");
    }
    return r;
}

void require_valid(const SemitoricIngredient& I, const char* op)
{
    const ValidationReport report = validate(I);
    if (!report.ok())
        throw PreconditionError(std::string(op) + " requires a valid ingredient:\n" + report.str());
}

} // namespace

ValidationReport validate(const SemitoricIngredient& ingredient)
{
    ValidationReport report;
    report.items.push_back(check_counts(ingredient));
    report.items.push_back(check_compact(ingredient));
    report.items.push_back(check_marks(ingredient));
    report.items.push_back(check_smooth_vertices(ingredient));
    report.items.push_back(check_wall_points(ingredient));
    report.items.push_back(check_constant_terms(ingredient));
    report.items.push_back(check_labels(ingredient));
    return report;
}

SemitoricIngredient act(const GroupElement& g, const SemitoricIngredient& I)
{
    if (g.z.size() != I.lambda() + 1)
        throw ConfigurationError("group element is bound to " + std::to_string(g.lambda()) +
                                 " lines, ingredient has " + std::to_string(I.lambda()));
    std::vector<std::int64_t> w = I.wall_indices();
    for (std::size_t a = 0; a < w.size(); ++a)
        w[a] -= g.z[a + 1];
    std::vector<MarkedPoint> marks;
    for (std::size_t i = 0; i < I.marks().size(); ++i) {
        const MarkedPoint& mk = I.marks()[i];
        const std::size_t a = I.line_of(i);
        TaylorTuple t = mk.label.tuple();
        for (auto& s : t.action)
            s = apply_action_series(g, I.lines(), a, s);
        marks.push_back({apply_point(g, I.lines(), mk.position), mk.multiplicity, TaylorOrbit(t)});
    }
    return SemitoricIngredient(apply_polygon(g, I.lines(), I.polygon()), I.lines(), std::move(w), std::move(marks));
}

GroupElement canonicalizing_element(const SemitoricIngredient& I)
{
    const std::size_t lambda = I.lambda();
    GroupElement g = GroupElement::identity(lambda);
    for (std::size_t a = 0; a < lambda; ++a)
        g.z[a + 1] = I.wall_indices()[a];
    const Polygon anchored = apply_polygon(g, I.lines(), I.polygon());
    g.z[0] = -floor_to_int64(anchored.lower().slopes.front());
    const Polygon sheared = apply_polygon(GroupElement::shear(lambda, g.z[0]), I.lines(), anchored);
    Rational min_y = sheared.vertices().front().y;
    for (const auto& v : sheared.vertices())
        min_y = std::min(min_y, v.y);
    g.b = -min_y;
    return g;
}

SemitoricIngredient canonicalize(const SemitoricIngredient& ingredient)
{
    require_valid(ingredient, "canonicalize");
    return act(canonicalizing_element(ingredient), ingredient);
}

bool orbits_equal(const SemitoricIngredient& a, const SemitoricIngredient& b)
{
    if (a.lines() != b.lines() || a.v() != b.v())
        return false;
    for (std::size_t i = 0; i < a.v(); ++i)
        if (a.marks()[i].multiplicity != b.marks()[i].multiplicity)
            return false;
    const SemitoricIngredient ca = canonicalize(a);
    const SemitoricIngredient cb = canonicalize(b);
    if (!(ca.polygon() == cb.polygon()) || ca.wall_indices() != cb.wall_indices())
        return false;
    for (std::size_t i = 0; i < ca.v(); ++i) {
        const MarkedPoint& ma = ca.marks()[i];
        const MarkedPoint& mb = cb.marks()[i];
        if (!(ma.position == mb.position))
            return false;
        const int cap = std::min(ma.label.tuple().degree_cap(), mb.label.tuple().degree_cap());
        if (!(TaylorOrbit(ma.label.tuple().truncated(cap)) == TaylorOrbit(mb.label.tuple().truncated(cap))))
            return false;
    }
    return true;
}

std::vector<Rational> heights(const SemitoricIngredient& I)
{
    std::vector<Rational> out;
    for (const auto& mk : I.marks())
        out.push_back(mk.label.tuple().action[0].coeff(0, 0) - min_y_on_line(I.polygon(), mk.position.x));
    return out;
}

std::vector<std::vector<std::int64_t>> twisting_indices(const SemitoricIngredient& I, TwistConvention convention)
{
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& mk : I.marks()) {
        out.emplace_back();
        for (const auto& s : mk.label.tuple().action)
            out.back().push_back(floor_to_int64(s.coeff(1, 0) - window_start(convention)));
    }
    return out;
}

std::vector<std::int64_t> twist_propagate(std::int64_t k0, const ActionClass& s0,
                                          const std::vector<TaylorSeries>& generators)
{
    TaylorSeries action0 = psi(s0);
    action0.add(1, 0, Rational(k0));
    const TaylorTuple t = complete_from_generators(action0, generators);
    std::vector<std::int64_t> out;
    for (const auto& s : t.action)
        out.push_back(floor_to_int64(s.coeff(1, 0)));
    return out;
}

std::vector<SemilocalLabel> semilocal_labels(const SemitoricIngredient& I)
{
    std::vector<SemilocalLabel> out;
    for (const auto& mk : I.marks()) {
        SemilocalLabel l;
        for (const auto& s : mk.label.tuple().action)
            l.action.emplace_back(s);
        l.transition = mk.label.tuple().transition;
        out.push_back(std::move(l));
    }
    return out;
}

ClassicalInvariants classical_invariants(const SemitoricIngredient& I)
{
    ClassicalInvariants out{0, I.polygon(), {}};
    for (std::size_t a = 0; a < I.lambda(); ++a) {
        const auto ms = I.multiplicities_on(a);
        if (ms.size() != 1)
            throw PreconditionError("not simple: line x = " + to_string(I.lines()[a]) + " carries " +
                                    std::to_string(ms.size()) + " marks");
    }
    for (std::size_t i = 0; i < I.v(); ++i)
        if (I.marks()[i].multiplicity != 1)
            throw PreconditionError("not simple: mark " + std::to_string(i) + " at " +
                                    to_string(I.marks()[i].position) + " has multiplicity " +
                                    std::to_string(I.marks()[i].multiplicity));
    if (I.v() != I.lambda())
        throw PreconditionError("not simple: marks off the cut lines");

    out.focus_focus_count = I.v();
    const std::vector<Rational> h = heights(I);
    for (std::size_t i = 0; i < I.v(); ++i) {
        const std::size_t a = I.line_of(i);
        const std::int64_t w = I.wall_indices()[a];
        // Upward cuts are w = 0, downward cuts w = -1; anything else is
        // re-anchored to an upward cut first.
        const SemitoricIngredient rep =
            (w == 0 || w == -1) ? I : act(GroupElement::cut(I.lambda(), a, w), I);
        const int eps = rep.wall_indices()[a] == 0 ? 1 : -1;
        const TaylorSeries& s0 = rep.marks()[i].label.tuple().action[0];

        ClassicalValue cv{I.marks()[i].position, TaylorSeries(s0.degree_cap()), true, h[i], 0, eps};
        const TaylorSeries cls = ActionClass(s0).normalized();
        for (const auto& [e, c] : cls.terms())
            cv.taylor_series.set(e.second, e.first, c);
        cv.twisting_index = floor_to_int64(s0.coeff(1, 0) - Rational(1, 4)) + (eps - 1) / 2;
        out.values.push_back(std::move(cv));
    }
    return out;
}

} // namespace semitoric
