#include "semitoric/taylor.hpp"

#include <algorithm>
#include <sstream>

#include "semitoric/errors.hpp"

namespace semitoric {

namespace {

std::size_t dense_count(int degree_cap)
{
    const auto d = static_cast<std::size_t>(degree_cap);
    return (d + 1) * (d + 2) / 2;
}

const Rational& zero()
{
    static const Rational z = 0;
    return z;
}

void require_same_cap(const TaylorSeries& a, const TaylorSeries& b, const char* what)
{
    if (a.degree_cap() != b.degree_cap())
        throw PreconditionError(std::string(what) + ": degree caps differ (" + std::to_string(a.degree_cap()) +
                                " vs " + std::to_string(b.degree_cap()) + ")");
}

// Coefficient of Y^q in f as a series in X alone.
TaylorSeries y_slice(const TaylorSeries& f, int q, int cap)
{
    TaylorSeries out(cap, f.flavor());
    for (int p = 0; p + q <= cap; ++p)
        out.set(p, 0, f.coeff(p, q));
    return out;
}

} // namespace

TaylorSeries::TaylorSeries(int degree_cap, SeriesFlavor flavor)
    : degree_cap_(degree_cap), flavor_(flavor)
{
    if (degree_cap < 1)
        throw PreconditionError("degree cap must be positive, got " + std::to_string(degree_cap));
    coeffs_.assign(dense_count(degree_cap), Rational(0));
}

TaylorSeries TaylorSeries::constant(int degree_cap, const Rational& c, SeriesFlavor flavor)
{
    return monomial(degree_cap, 0, 0, c, flavor);
}

TaylorSeries TaylorSeries::monomial(int degree_cap, int p, int q, const Rational& c, SeriesFlavor flavor)
{
    TaylorSeries s(degree_cap, flavor);
    if (p + q <= degree_cap)
        s.set(p, q, c);
    return s;
}

TaylorSeries TaylorSeries::identity_y(int degree_cap)
{
    return monomial(degree_cap, 0, 1, 1, SeriesFlavor::transition);
}

std::size_t TaylorSeries::index_of(int p, int q)
{
    const auto d = static_cast<std::size_t>(p + q);
    return d * (d + 1) / 2 + static_cast<std::size_t>(p);
}

std::pair<int, int> TaylorSeries::exponent_at(std::size_t index)
{
    int d = 0;
    while (static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 2) / 2 <= index)
        ++d;
    const int p = static_cast<int>(index - static_cast<std::size_t>(d) * static_cast<std::size_t>(d + 1) / 2);
    return {p, d - p};
}

const Rational& TaylorSeries::coeff(int p, int q) const
{
    if (p < 0 || q < 0)
        throw PreconditionError("negative exponent");
    if (p + q > degree_cap_)
        return zero();
    return coeffs_[index_of(p, q)];
}

void TaylorSeries::set(int p, int q, const Rational& c)
{
    if (p < 0 || q < 0 || p + q > degree_cap_)
        throw PreconditionError("exponent (" + std::to_string(p) + ", " + std::to_string(q) +
                                ") outside degree cap " + std::to_string(degree_cap_));
    coeffs_[index_of(p, q)] = c;
}

void TaylorSeries::add(int p, int q, const Rational& c)
{
    set(p, q, coeff(p, q) + c);
}

std::vector<std::pair<std::pair<int, int>, Rational>> TaylorSeries::terms() const
{
    std::vector<std::pair<std::pair<int, int>, Rational>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            out.emplace_back(exponent_at(i), coeffs_[i]);
    return out;
}

bool TaylorSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

TaylorSeries TaylorSeries::truncated(int degree_cap) const
{
    TaylorSeries out(degree_cap, flavor_);
    const std::size_t n = std::min(out.coeffs_.size(), coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n), out.coeffs_.begin());
    return out;
}

TaylorSeries TaylorSeries::with_flavor(SeriesFlavor flavor) const
{
    TaylorSeries out = *this;
    out.flavor_ = flavor;
    return out;
}

TaylorSeries& TaylorSeries::operator+=(const TaylorSeries& other)
{
    require_same_cap(*this, other, "series sum");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

TaylorSeries& TaylorSeries::operator-=(const TaylorSeries& other)
{
    require_same_cap(*this, other, "series difference");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    return *this;
}

TaylorSeries& TaylorSeries::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    return *this;
}

TaylorSeries operator*(const TaylorSeries& a, const TaylorSeries& b)
{
    require_same_cap(a, b, "series product");
    const int cap = a.degree_cap();
    TaylorSeries out(cap, a.flavor());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        const auto [p1, q1] = TaylorSeries::exponent_at(i);
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
            if (b.coeffs_[k] == 0)
                continue;
            const auto [p2, q2] = TaylorSeries::exponent_at(k);
            if (p1 + q1 + p2 + q2 > cap)
                break; // dense order is graded, so later entries only get larger
            out.coeffs_[TaylorSeries::index_of(p1 + p2, q1 + q2)] += a.coeffs_[i] * b.coeffs_[k];
        }
    }
    return out;
}

bool operator==(const TaylorSeries& a, const TaylorSeries& b)
{
    return a.degree_cap_ == b.degree_cap_ && a.coeffs_ == b.coeffs_;
}

std::string TaylorSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << to_string(c) << ")";
        if (e.first > 0)
            os << "*X^" << e.first;
        if (e.second > 0)
            os << "*Y^" << e.second;
    }
    if (first)
        os << "0";
    os << " + O(" << degree_cap_ + 1 << ")";
    return os.str();
}

int compare(const TaylorSeries& a, const TaylorSeries& b)
{
    const std::size_t n = std::min(a.dense_size(), b.dense_size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.dense(i) < b.dense(i))
            return -1;
        if (b.dense(i) < a.dense(i))
            return 1;
    }
    if (a.dense_size() != b.dense_size())
        return a.dense_size() < b.dense_size() ? -1 : 1;
    return 0;
}

std::optional<std::pair<int, int>> first_difference(const TaylorSeries& a, const TaylorSeries& b)
{
    const std::size_t n = std::max(a.dense_size(), b.dense_size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto e = TaylorSeries::exponent_at(i);
        if (a.coeff(e.first, e.second) != b.coeff(e.first, e.second))
            return e;
    }
    return std::nullopt;
}

TaylorSeries compose_y(const TaylorSeries& f, const TaylorSeries& g)
{
    if (g.coeff(0, 0) != 0)
        throw InvertibilityError("substituted series has nonzero constant term " + to_string(g.coeff(0, 0)));
    const int cap = std::min(f.degree_cap(), g.degree_cap());
    const TaylorSeries inner = g.truncated(cap).with_flavor(f.flavor());
    // Horner in Y: g has no constant term, so each multiplication raises the
    // order by at least one and truncation is exact.
    TaylorSeries out = y_slice(f, cap, cap);
    for (int q = cap - 1; q >= 0; --q)
        out = out * inner + y_slice(f, q, cap);
    return out;
}

TaylorSeries invert_y(const TaylorSeries& g)
{
    if (g.coeff(0, 0) != 0)
        throw InvertibilityError("series with nonzero constant term is not invertible in Y");
    const Rational a = g.coeff(0, 1);
    if (a <= 0)
        throw InvertibilityError("Y coefficient " + to_string(a) + " is not positive");
    const int cap = g.degree_cap();
    const TaylorSeries y = TaylorSeries::identity_y(cap);
    // h = (Y - (g(X, h) - a h)) / a; every pass fixes one more degree.
    TaylorSeries h = y * (1 / a);
    for (int pass = 0; pass <= cap; ++pass) {
        TaylorSeries nonlinear = compose_y(g, h) - h * a;
        h = (y - nonlinear) * (1 / a);
    }
    return h.with_flavor(SeriesFlavor::transition);
}

int TaylorTuple::degree_cap() const
{
    if (action.empty())
        throw PreconditionError("empty Taylor tuple");
    return action.front().degree_cap();
}

TaylorTuple TaylorTuple::truncated(int cap) const
{
    TaylorTuple out;
    for (const auto& s : action)
        out.action.push_back(s.truncated(cap));
    for (const auto& row : transition) {
        out.transition.emplace_back();
        for (const auto& g : row)
            out.transition.back().push_back(g.truncated(cap));
    }
    return out;
}

std::string RelationViolation::describe() const
{
    std::ostringstream os;
    os << "relation " << relation << " fails at (mu=" << mu << ", nu=" << nu;
    if (relation == 4)
        os << ", sigma=" << sigma;
    os << ")";
    if (exponent)
        os << ", first differing coefficient (" << exponent->first << ", " << exponent->second << ")";
    if (!detail.empty())
        os << ": " << detail;
    return os.str();
}

RelationReport check_relations(const TaylorTuple& tuple)
{
    RelationReport report;
    const int m = tuple.m();
    if (m == 0 || static_cast<int>(tuple.transition.size()) != m) {
        report.violations.push_back({0, 0, 0, 0, std::nullopt, "tuple shape is not m x m"});
        return report;
    }
    for (const auto& row : tuple.transition)
        if (static_cast<int>(row.size()) != m) {
            report.violations.push_back({0, 0, 0, 0, std::nullopt, "tuple shape is not m x m"});
            return report;
        }
    report.degree = tuple.degree_cap();
    const auto& s = tuple.action;
    const auto& g = tuple.transition;

    std::vector<std::vector<bool>> usable(m, std::vector<bool>(m, true));
    for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu) {
            const TaylorSeries& t = g[mu][nu];
            if (t.coeff(0, 0) != 0) {
                usable[mu][nu] = false;
                report.violations.push_back({1, mu, nu, 0, std::pair{0, 0},
                                             "constant term " + to_string(t.coeff(0, 0)) + " is not zero"});
            }
            if (t.coeff(0, 1) <= 0)
                report.violations.push_back({1, mu, nu, 0, std::pair{0, 1},
                                             "Y coefficient " + to_string(t.coeff(0, 1)) + " is not positive"});
        }

    for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu) {
            if (!usable[mu][nu])
                continue;
            const TaylorSeries rhs = compose_y(s[nu], g[mu][nu]);
            if (auto e = first_difference(s[mu].truncated(rhs.degree_cap()), rhs))
                report.violations.push_back({2, mu, nu, 0, e, ""});
        }

    const TaylorSeries y = TaylorSeries::identity_y(report.degree);
    for (int mu = 0; mu < m; ++mu)
        if (auto e = first_difference(g[mu][mu], y))
            report.violations.push_back({3, mu, mu, 0, e, ""});

    for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu)
            for (int sigma = 0; sigma < m; ++sigma) {
                if (!usable[mu][nu])
                    continue;
                // chart mu -> nu -> sigma, in the order forced by the action relation
                const TaylorSeries rhs = compose_y(g[nu][sigma], g[mu][nu]);
                if (auto e = first_difference(g[mu][sigma].truncated(rhs.degree_cap()), rhs))
                    report.violations.push_back({4, mu, nu, sigma, e, ""});
            }
    return report;
}

TaylorTuple complete_from_generators(const TaylorSeries& action0, const std::vector<TaylorSeries>& generators)
{
    const int cap = action0.degree_cap();
    const int m = static_cast<int>(generators.size()) + 1;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const TaylorSeries& g = generators[i];
        if (g.degree_cap() != cap)
            throw PreconditionError("generator " + std::to_string(i) + " has degree cap " +
                                    std::to_string(g.degree_cap()) + ", expected " + std::to_string(cap));
        if (g.coeff(0, 0) != 0 || g.coeff(0, 1) <= 0)
            throw InvertibilityError("generator g_{" + std::to_string(i) + "," + std::to_string(i + 1) +
                                     "} needs zero constant term and positive Y coefficient");
    }

    TaylorTuple t;
    t.transition.assign(m, std::vector<TaylorSeries>(m, TaylorSeries(cap, SeriesFlavor::transition)));
    for (int mu = 0; mu < m; ++mu)
        t.transition[mu][mu] = TaylorSeries::identity_y(cap);
    for (int mu = 0; mu + 1 < m; ++mu)
        t.transition[mu][mu + 1] = generators[mu].with_flavor(SeriesFlavor::transition);
    for (int mu = 0; mu < m; ++mu)
        for (int nu = mu + 2; nu < m; ++nu)
            t.transition[mu][nu] = compose_y(t.transition[nu - 1][nu], t.transition[mu][nu - 1]);
    for (int mu = 0; mu < m; ++mu)
        for (int nu = mu + 1; nu < m; ++nu)
            t.transition[nu][mu] = invert_y(t.transition[mu][nu]);

    const TaylorSeries base = action0.with_flavor(SeriesFlavor::action);
    t.action.push_back(base);
    for (int nu = 1; nu < m; ++nu)
        t.action.push_back(compose_y(base, t.transition[nu][0]));
    return t;
}

TaylorTuple rotate(const TaylorTuple& tuple, int z)
{
    const int m = tuple.m();
    if (m == 0)
        return tuple;
    auto idx = [m, z](int i) { return ((i + z) % m + m) % m; };
    TaylorTuple out;
    for (int mu = 0; mu < m; ++mu)
        out.action.push_back(tuple.action[idx(mu)]);
    out.transition.resize(m);
    for (int mu = 0; mu < m; ++mu)
        for (int nu = 0; nu < m; ++nu)
            out.transition[mu].push_back(tuple.transition[idx(mu)][idx(nu)]);
    return out;
}

namespace {

int compare_rotation_keys(const TaylorTuple& a, const TaylorTuple& b)
{
    if (int c = compare(a.action[0], b.action[0]))
        return c;
    for (int mu = 0; mu + 1 < a.m(); ++mu)
        if (int c = compare(a.transition[mu][mu + 1], b.transition[mu][mu + 1]))
            return c;
    return 0;
}

TaylorTuple canonical_rotation(const TaylorTuple& tuple)
{
    TaylorTuple best = tuple;
    for (int z = 1; z < tuple.m(); ++z) {
        TaylorTuple candidate = rotate(tuple, z);
        if (compare_rotation_keys(candidate, best) < 0)
            best = std::move(candidate);
    }
    return best;
}

} // namespace

TaylorOrbit::TaylorOrbit(const TaylorTuple& tuple)
    : tuple_(canonical_rotation(tuple))
{
    if (tuple.m() == 0)
        throw PreconditionError("Taylor label needs at least one action series");
}

TaylorOrbit cyclic_canonical(const TaylorTuple& tuple)
{
    return TaylorOrbit(tuple);
}

Rational window_start(TwistConvention convention)
{
    return convention == TwistConvention::standard ? Rational(0) : Rational(1, 4);
}

ActionClass::ActionClass(const TaylorSeries& series)
    : rep_(series.with_flavor(SeriesFlavor::action))
{
    rep_.set(0, 0, 0);
    const Rational x = rep_.coeff(1, 0);
    rep_.set(1, 0, x - Rational(floor(x)));
}

TaylorSeries psi(const ActionClass& s, TwistConvention convention)
{
    TaylorSeries out = s.normalized();
    if (out.coeff(1, 0) < window_start(convention))
        out.add(1, 0, 1);
    return out;
}

Decomposition decompose(const TaylorSeries& action, TwistConvention convention)
{
    return {ActionClass(action), floor_to_int64(action.coeff(1, 0) - window_start(convention)), action.coeff(0, 0)};
}

TaylorSeries reconstruct(const Decomposition& d, TwistConvention convention)
{
    TaylorSeries out = psi(d.s, convention);
    out.add(1, 0, Rational(d.k));
    out.add(0, 0, d.c);
    return out;
}

} // namespace semitoric
