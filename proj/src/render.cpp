#include "semitoric/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "semitoric/errors.hpp"

namespace semitoric {

namespace {

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00")
        s = "0.00";
    return s;
}

struct Frame
{
    double min_x, max_y, scale, margin;

    double px(const Rational& x) const { return margin + (to_double(x) - min_x) * scale; }
    double py(const Rational& y) const { return margin + (max_y - to_double(y)) * scale; }
};

} // namespace

std::string render_svg(const SemitoricIngredient& I, const RenderOptions& options)
{
    const ValidationReport report = validate(I);
    if (!report.ok())
        throw ValidationError(report.str());

    const Polygon& P = I.polygon();
    Rational min_y = P.vertices().front().y, max_y = min_y;
    for (const auto& v : P.vertices()) {
        min_y = std::min(min_y, v.y);
        max_y = std::max(max_y, v.y);
    }
    const double scale = options.scale > 0 ? options.scale : 40;
    const Frame f{to_double(P.min_x()), to_double(max_y), scale, 2.0 * scale};
    const double width = (to_double(P.max_x()) - to_double(P.min_x())) * scale + 4.0 * scale;
    const double height = (to_double(max_y) - to_double(min_y)) * scale + 4.0 * scale;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
       << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";

    if (options.lattice) {
        os << "<g class=\"lattice\" fill=\"#999\">\n";
        for (auto x = floor(P.min_x()); x <= floor(P.max_x()); ++x)
            for (auto y = floor(min_y); y <= floor(max_y); ++y) {
                const Rational rx(x), ry(y);
                if (rx < P.min_x() || ry < min_y)
                    continue;
                os << "<circle cx=\"" << num(f.px(rx)) << "\" cy=\"" << num(f.py(ry)) << "\" r=\"1.5\"/>\n";
            }
        os << "</g>\n";
    }

    os << "<polygon class=\"outline\" fill=\"#eef\" stroke=\"#000\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < P.vertices().size(); ++i) {
        const auto& v = P.vertices()[i];
        os << (i ? " " : "") << num(f.px(v.x)) << "," << num(f.py(v.y));
    }
    os << "\"/>\n";

    const double font = scale * 0.35;
    for (std::size_t a = 0; a < I.lambda(); ++a) {
        const Rational& j = I.lines()[a];
        const Rational bottom = P.lower().y_at(j);
        const Rational top = P.upper().y_at(j);
        os << "<line class=\"cut\" x1=\"" << num(f.px(j)) << "\" y1=\"" << num(f.py(bottom)) << "\" x2=\""
           << num(f.px(j)) << "\" y2=\"" << num(f.py(top)) << "\" stroke=\"#000\" stroke-dasharray=\"6 4\"/>\n";

        std::vector<Rational> cuts{bottom};
        for (const auto& mk : I.marks())
            if (mk.position.x == j)
                cuts.push_back(mk.position.y);
        cuts.push_back(top);
        const auto ladder = wall_ladder(I.wall_indices()[a], I.multiplicities_on(a));
        for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
            const double mid = (f.py(cuts[s]) + f.py(cuts[s + 1])) / 2.0;
            os << "<text class=\"wall-index\" x=\"" << num(f.px(j) - font * 0.4) << "\" y=\"" << num(mid + font / 3)
               << "\" font-size=\"" << num(font) << "\" text-anchor=\"end\">" << ladder[s] << "</text>\n";
        }
    }

    const double arm = scale * 0.15;
    for (const auto& mk : I.marks()) {
        const double cx = f.px(mk.position.x), cy = f.py(mk.position.y);
        os << "<g class=\"mark\" stroke=\"#c00\" stroke-width=\"2\">"
           << "<line x1=\"" << num(cx - arm) << "\" y1=\"" << num(cy - arm) << "\" x2=\"" << num(cx + arm)
           << "\" y2=\"" << num(cy + arm) << "\"/>"
           << "<line x1=\"" << num(cx - arm) << "\" y1=\"" << num(cy + arm) << "\" x2=\"" << num(cx + arm)
           << "\" y2=\"" << num(cy - arm) << "\"/></g>\n";
        os << "<text class=\"multiplicity\" x=\"" << num(cx + arm * 1.5) << "\" y=\"" << num(cy - arm)
           << "\" font-size=\"" << num(font) << "\" fill=\"#c00\">" << mk.multiplicity << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_svg(const IngredientDocument& doc, const RenderOptions& options)
{
    return render_svg(to_ingredient(doc), options);
}

} // namespace semitoric
