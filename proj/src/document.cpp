#include "semitoric/document.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "semitoric/errors.hpp"

namespace semitoric {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

constexpr int kMaxDegreeCap = 64;

const json& member(const json& obj, const std::string& key, const std::string& path)
{
    auto it = obj.find(key);
    if (it == obj.end())
        throw SchemaError(path.empty() ? key : path + "." + key, "missing field");
    return *it;
}

void require_keys(const json& obj, const std::set<std::string>& allowed, const std::string& path)
{
    if (!obj.is_object())
        throw SchemaError(path.empty() ? "<root>" : path, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw SchemaError(path.empty() ? it.key() : path + "." + it.key(), "unknown field");
}

const json& array_at(const json& obj, const std::string& key, const std::string& path)
{
    const json& v = member(obj, key, path);
    if (!v.is_array())
        throw SchemaError(path.empty() ? key : path + "." + key, "expected an array");
    return v;
}

std::int64_t integer(const json& v, const std::string& path)
{
    if (!v.is_number_integer())
        throw SchemaError(path, "expected an integer");
    return v.get<std::int64_t>();
}

Rational rational(const json& v, const std::string& path)
{
    if (!v.is_string())
        throw SchemaError(path, "expected a rational string");
    auto r = parse_rational(v.get<std::string>());
    if (!r)
        throw SchemaError(path, "\"" + v.get<std::string>() + "\" is not a reduced rational p/q with q > 0");
    return *r;
}

Point2 point(const json& v, const std::string& path)
{
    if (!v.is_array() || v.size() != 2)
        throw SchemaError(path, "expected a pair [\"x\", \"y\"]");
    return {rational(v[0], path + "[0]"), rational(v[1], path + "[1]")};
}

TaylorSeries series(const json& v, int cap, SeriesFlavor flavor, const std::string& path)
{
    if (!v.is_array())
        throw SchemaError(path, "expected a list of [p, q, \"c\"] terms");
    TaylorSeries s(cap, flavor);
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string tp = path + "[" + std::to_string(i) + "]";
        const json& term = v[i];
        if (!term.is_array() || term.size() != 3)
            throw SchemaError(tp, "expected [p, q, \"c\"]");
        const std::int64_t p = integer(term[0], tp + "[0]");
        const std::int64_t q = integer(term[1], tp + "[1]");
        if (p < 0 || q < 0 || p + q > cap)
            throw SchemaError(tp, "exponent outside 0 <= p + q <= " + std::to_string(cap));
        if (!seen.insert({p, q}).second)
            throw SchemaError(tp, "duplicate exponent");
        s.set(static_cast<int>(p), static_cast<int>(q), rational(term[2], tp + "[2]"));
    }
    return s;
}

std::vector<TaylorSeries> series_list(const json& v, std::size_t expected, int cap, SeriesFlavor flavor,
                                      const std::string& path)
{
    if (!v.is_array() || v.size() != expected)
        throw SchemaError(path, "expected a list of " + std::to_string(expected) + " series");
    std::vector<TaylorSeries> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(series(v[i], cap, flavor, path + "[" + std::to_string(i) + "]"));
    return out;
}

std::variant<TaylorTuple, GeneratorLabel> label(const json& v, int m, int cap, const std::string& path)
{
    if (!v.is_object())
        throw SchemaError(path, "expected an object");
    const auto um = static_cast<std::size_t>(m);
    if (v.contains("action0") || v.contains("generators")) {
        require_keys(v, {"action0", "generators"}, path);
        GeneratorLabel g{series(member(v, "action0", path), cap, SeriesFlavor::action, path + ".action0"),
                         series_list(member(v, "generators", path), um - 1, cap, SeriesFlavor::transition,
                                     path + ".generators")};
        return g;
    }
    require_keys(v, {"action", "transition"}, path);
    TaylorTuple t;
    t.action = series_list(member(v, "action", path), um, cap, SeriesFlavor::action, path + ".action");
    const json& tr = member(v, "transition", path);
    if (!tr.is_array() || tr.size() != um)
        throw SchemaError(path + ".transition", "expected " + std::to_string(m) + " rows");
    for (std::size_t mu = 0; mu < um; ++mu)
        t.transition.push_back(series_list(tr[mu], um, cap, SeriesFlavor::transition,
                                           path + ".transition[" + std::to_string(mu) + "]"));
    return t;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

ordered write_rational(const Rational& r)
{
    return to_string(r);
}

ordered write_point(const Point2& p)
{
    return ordered::array({write_rational(p.x), write_rational(p.y)});
}

ordered write_series(const TaylorSeries& s)
{
    ordered out = ordered::array();
    for (const auto& [e, c] : s.terms())
        out.push_back(ordered::array({e.first, e.second, write_rational(c)}));
    return out;
}

} // namespace

IngredientDocument parse_document(std::string_view text)
{
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte);
        std::string msg = e.what();
        if (auto pos = msg.find("syntax error"); pos != std::string::npos)
            msg = msg.substr(pos);
        throw ParseError(line, column, msg);
    }

    require_keys(root, {"format_version", "degree_cap", "placeholder_labels", "polygon", "lines", "wall_indices",
                        "marks"},
                 "");
    const json& version = member(root, "format_version", "");
    if (!version.is_string())
        throw SchemaError("format_version", "expected a string");
    if (version.get<std::string>() != kFormatVersion)
        throw VersionError("unsupported format version \"" + version.get<std::string>() + "\", expected \"" +
                           kFormatVersion + "\"");

    const std::int64_t cap = integer(member(root, "degree_cap", ""), "degree_cap");
    if (cap < 1 || cap > kMaxDegreeCap)
        throw SchemaError("degree_cap", "must lie in [1, " + std::to_string(kMaxDegreeCap) + "]");
    const int d = static_cast<int>(cap);

    bool placeholder = false;
    if (root.contains("placeholder_labels")) {
        const json& p = root["placeholder_labels"];
        if (!p.is_boolean())
            throw SchemaError("placeholder_labels", "expected a boolean");
        placeholder = p.get<bool>();
    }

    const json& jpoly = array_at(root, "polygon", "");
    std::vector<Point2> vertices;
    for (std::size_t i = 0; i < jpoly.size(); ++i)
        vertices.push_back(point(jpoly[i], "polygon[" + std::to_string(i) + "]"));
    std::optional<Polygon> polygon;
    try {
        polygon.emplace(std::move(vertices));
    } catch (const GeometryError& e) {
        throw SchemaError("polygon", e.what());
    }

    const json& jlines = array_at(root, "lines", "");
    std::vector<Rational> abscissae;
    for (std::size_t i = 0; i < jlines.size(); ++i)
        abscissae.push_back(rational(jlines[i], "lines[" + std::to_string(i) + "]"));
    LineConfig lines;
    try {
        lines = LineConfig(std::move(abscissae));
    } catch (const ConfigurationError& e) {
        throw SchemaError("lines", e.what());
    }

    const json& jw = array_at(root, "wall_indices", "");
    if (jw.size() != lines.size())
        throw SchemaError("wall_indices", "expected one index per line (" + std::to_string(lines.size()) + ")");
    std::vector<std::int64_t> w;
    for (std::size_t i = 0; i < jw.size(); ++i)
        w.push_back(integer(jw[i], "wall_indices[" + std::to_string(i) + "]"));

    const json& jmarks = array_at(root, "marks", "");
    std::vector<MarkDocument> marks;
    for (std::size_t i = 0; i < jmarks.size(); ++i) {
        const std::string path = "marks[" + std::to_string(i) + "]";
        const json& jm = jmarks[i];
        require_keys(jm, {"position", "multiplicity", "label"}, path);
        const std::int64_t m = integer(member(jm, "multiplicity", path), path + ".multiplicity");
        if (m < 1 || m > 1024)
            throw SchemaError(path + ".multiplicity", "must be a positive integer");
        marks.push_back({point(member(jm, "position", path), path + ".position"), static_cast<int>(m),
                         label(member(jm, "label", path), static_cast<int>(m), d, path + ".label")});
    }

    return {d, placeholder, std::move(*polygon), std::move(lines), std::move(w), std::move(marks)};
}

std::string serialize(const IngredientDocument& doc)
{
    ordered root;
    root["format_version"] = kFormatVersion;
    root["degree_cap"] = doc.degree_cap;
    root["placeholder_labels"] = doc.placeholder_labels;
    ordered poly = ordered::array();
    for (const auto& v : doc.polygon.vertices())
        poly.push_back(write_point(v));
    root["polygon"] = std::move(poly);
    ordered lines = ordered::array();
    for (const auto& j : doc.lines.abscissae())
        lines.push_back(write_rational(j));
    root["lines"] = std::move(lines);
    root["wall_indices"] = doc.wall_indices;
    ordered marks = ordered::array();
    for (const auto& mk : doc.marks) {
        ordered jm;
        jm["position"] = write_point(mk.position);
        jm["multiplicity"] = mk.multiplicity;
        ordered jl;
        if (const auto* t = std::get_if<TaylorTuple>(&mk.label)) {
            ordered action = ordered::array();
            for (const auto& s : t->action)
                action.push_back(write_series(s));
            ordered transition = ordered::array();
            for (const auto& row : t->transition) {
                ordered r = ordered::array();
                for (const auto& g : row)
                    r.push_back(write_series(g));
                transition.push_back(std::move(r));
            }
            jl["action"] = std::move(action);
            jl["transition"] = std::move(transition);
        } else {
            const auto& g = std::get<GeneratorLabel>(mk.label);
            jl["action0"] = write_series(g.action0);
            ordered gens = ordered::array();
            for (const auto& s : g.generators)
                gens.push_back(write_series(s));
            jl["generators"] = std::move(gens);
        }
        jm["label"] = std::move(jl);
        marks.push_back(std::move(jm));
    }
    root["marks"] = std::move(marks);
    return root.dump() + "\n";
}

SemitoricIngredient to_ingredient(const IngredientDocument& doc)
{
    std::vector<MarkedPoint> marks;
    for (std::size_t i = 0; i < doc.marks.size(); ++i) {
        const MarkDocument& mk = doc.marks[i];
        const auto* t = std::get_if<TaylorTuple>(&mk.label);
        if (!t)
            throw SchemaError("marks[" + std::to_string(i) + "].label",
                              "label is in generator form; run `complete` first");
        marks.push_back({mk.position, mk.multiplicity, TaylorOrbit(*t)});
    }
    return SemitoricIngredient(doc.polygon, doc.lines, doc.wall_indices, std::move(marks));
}

IngredientDocument to_document(const SemitoricIngredient& ingredient, bool placeholder_labels,
                               std::optional<int> degree_cap)
{
    int cap = kDefaultDegreeCap;
    if (degree_cap) {
        cap = *degree_cap;
    } else if (!ingredient.marks().empty()) {
        cap = ingredient.marks().front().label.tuple().degree_cap();
        for (const auto& mk : ingredient.marks())
            if (mk.label.tuple().degree_cap() != cap)
                throw PreconditionError("labels have different degree caps; pass one explicitly");
    }
    std::vector<MarkDocument> marks;
    for (const auto& mk : ingredient.marks()) {
        if (mk.label.tuple().degree_cap() < cap)
            throw PreconditionError("label degree cap " + std::to_string(mk.label.tuple().degree_cap()) +
                                    " is below the document cap " + std::to_string(cap));
        marks.push_back({mk.position, mk.multiplicity, mk.label.tuple().truncated(cap)});
    }
    return {cap, placeholder_labels, ingredient.polygon(), ingredient.lines(), ingredient.wall_indices(),
            std::move(marks)};
}

IngredientDocument complete_document(const IngredientDocument& doc)
{
    IngredientDocument out = doc;
    for (auto& mk : out.marks)
        if (const auto* g = std::get_if<GeneratorLabel>(&mk.label))
            mk.label = complete_from_generators(g->action0, g->generators);
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw PreconditionError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file_atomic(const std::string& path, std::string_view content)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw PreconditionError("cannot write " + tmp);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out)
            throw PreconditionError("write to " + tmp + " failed");
    }
    std::filesystem::rename(tmp, path);
}

} // namespace semitoric
