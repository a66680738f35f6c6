#include "cli.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "semitoric/document.hpp"
#include "semitoric/errors.hpp"
#include "semitoric/hp_example.hpp"
#include "semitoric/render.hpp"

namespace semitoric::cli {

namespace {

Rational rational_arg(const std::string& text, const std::string& name)
{
    auto r = parse_rational(text);
    if (!r)
        throw PreconditionError(name + ": \"" + text + "\" is not a reduced rational p/q");
    return *r;
}

IngredientDocument load(const std::string& path)
{
    return parse_document(read_file(path));
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty())
        out << text;
    else
        write_file_atomic(path, text);
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int do_validate(const std::string& file, std::ostream& out)
{
    const auto report = validate(to_ingredient(load(file)));
    out << report.str();
    return report.ok() ? ok : negative;
}

int do_canon(const std::string& file, const std::string& output, std::ostream& out, std::ostream& err)
{
    const auto doc = load(file);
    const auto I = to_ingredient(doc);
    const auto report = validate(I);
    if (!report.ok()) {
        err << report.str();
        return negative;
    }
    emit(serialize(to_document(canonicalize(I), doc.placeholder_labels, doc.degree_cap)), output, out);
    return ok;
}

int do_eq(const std::string& a, const std::string& b, std::ostream& out)
{
    const bool same = orbits_equal(to_ingredient(load(a)), to_ingredient(load(b)));
    out << (same ? "equal" : "different") << "\n";
    return same ? ok : negative;
}

int do_act(const std::string& file, std::int64_t T, const std::vector<std::string>& cuts, const std::string& shift,
           const std::string& output, std::ostream& out)
{
    const auto doc = load(file);
    const auto I = to_ingredient(doc);
    GroupElement g = GroupElement::identity(I.lambda());
    g.z[0] = T;
    for (const auto& arg : cuts) {
        const auto colon = arg.find(':');
        if (colon == std::string::npos)
            throw PreconditionError("--t expects a:z, got \"" + arg + "\"");
        std::size_t a = 0;
        std::int64_t z = 0;
        try {
            a = std::stoul(arg.substr(0, colon));
            z = std::stoll(arg.substr(colon + 1));
        } catch (const std::exception&) {
            throw PreconditionError("--t expects integers a:z, got \"" + arg + "\"");
        }
        if (a < 1 || a > I.lambda())
            throw PreconditionError("--t line index " + std::to_string(a) + " is outside 1.." +
                                    std::to_string(I.lambda()));
        g.z[a] += z;
    }
    if (!shift.empty())
        g.b = rational_arg(shift, "--shift");
    emit(serialize(to_document(act(g, I), doc.placeholder_labels, doc.degree_cap)), output, out);
    return ok;
}

int do_extract(const std::string& file, std::ostream& out)
{
    const auto inv = classical_invariants(to_ingredient(load(file)));
    out << "focus_focus_count " << inv.focus_focus_count << "\n";
    out << "polygon";
    for (const auto& v : inv.polygon.vertices())
        out << " " << to_string(v);
    out << "\n";
    for (std::size_t i = 0; i < inv.values.size(); ++i) {
        const auto& c = inv.values[i];
        out << "value " << i + 1 << " " << to_string(c.value) << "\n"
            << "  height " << to_string(c.height) << "\n"
            << "  twisting_index " << c.twisting_index << "\n"
            << "  cut_sign " << (c.cut_sign > 0 ? "+1" : "-1") << "\n"
            << "  taylor_series " << c.taylor_series.str() << (c.quarter_turn_shift ? " - (pi/2) Y" : "") << "\n";
    }
    return ok;
}

int do_complete(const std::string& file, const std::string& output, std::ostream& out)
{
    emit(serialize(complete_document(load(file))), output, out);
    return ok;
}

int do_ladder(std::int64_t w, const std::string& list, std::ostream& out)
{
    std::vector<int> m;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            m.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw PreconditionError("multiplicities must be a comma separated list of integers");
        }
    }
    const auto ladder = wall_ladder(w, m);
    for (std::size_t i = 0; i < ladder.size(); ++i)
        out << (i ? "," : "") << ladder[i];
    out << "\n";
    return ok;
}

int do_render(const std::string& file, const std::string& output, bool lattice, std::ostream& out,
              std::ostream& err)
{
    try {
        emit(render_svg(load(file), RenderOptions{lattice}), output, out);
    } catch (const ValidationError& e) {
        err << e.what();
        return negative;
    }
    return ok;
}

int do_example(const std::string& s1, const std::string& variant, const std::string& output, std::ostream& out)
{
    HPParameters p{rational_arg(s1, "--s1")};
    emit(serialize(hp_example(p, variant == "a" ? HPVariant::a : HPVariant::b)), output, out);
    return ok;
}

int do_sample(const std::string& s1, std::size_t n, bool critical, std::ostream& out)
{
    HPParameters p{rational_arg(s1, "--s1")};
    if (p.s1 < 0 || p.s1 > 1)
        throw PreconditionError("--s1 must lie in [0, 1]");
    const auto result = sample_hp(p, critical ? 0 : n);
    out << "x,y\n";
    if (critical) {
        for (const auto& [x, y] : result.critical)
            out << fmt(x) << "," << fmt(y) << "\n";
    } else {
        for (const auto& [x, y] : result.samples)
            out << fmt(x) << "," << fmt(y) << "\n";
    }
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Complete semitoric invariants: validation, normal forms, comparison and drawing"};
    app.name("semitoric");
    app.require_subcommand(1);

    std::string file, file2, output, shift, s1, variant = "b", format = "csv", list;
    std::int64_t T = 0, w = 0;
    std::vector<std::string> cuts;
    std::size_t n = 1000;
    bool lattice = false, critical = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check the ingredient conditions item by item");
    validate_cmd->add_option("FILE", file)->required();

    auto* canon_cmd = app.add_subcommand("canon", "Write the canonical orbit representative");
    canon_cmd->add_option("FILE", file)->required();
    canon_cmd->add_option("-o,--output", output);

    auto* eq_cmd = app.add_subcommand("eq", "Exit 0 iff the two documents lie in one orbit");
    eq_cmd->add_option("FILE1", file)->required();
    eq_cmd->add_option("FILE2", file2)->required();

    auto* act_cmd = app.add_subcommand("act", "Apply T^z0, cuts t_a^z and a vertical shift");
    act_cmd->add_option("FILE", file)->required();
    act_cmd->add_option("--T", T, "power of the shear");
    act_cmd->add_option("--t", cuts, "a:z, power z of the cut on line a (1-based)")->allow_extra_args(false);
    act_cmd->add_option("--shift", shift, "vertical translation p/q");
    act_cmd->add_option("-o,--output", output);

    auto* extract_cmd = app.add_subcommand("extract", "Classical invariants of a simple ingredient");
    extract_cmd->add_option("FILE", file)->required();

    auto* complete_cmd = app.add_subcommand("complete", "Expand labels given by generators");
    complete_cmd->add_option("FILE", file)->required();
    complete_cmd->add_option("-o,--output", output);

    auto* ladder_cmd = app.add_subcommand("ladder", "Wall-crossing indices along one line");
    ladder_cmd->add_option("w", w)->required();
    ladder_cmd->add_option("multiplicities", list, "m1,m2,...")->required();

    auto* render_cmd = app.add_subcommand("render", "Draw the ingredient as SVG");
    render_cmd->add_option("FILE", file)->required();
    render_cmd->add_option("-o,--output", output)->required();
    render_cmd->add_flag("--lattice", lattice, "draw integer lattice points");

    auto* example_cmd = app.add_subcommand("example", "Built-in examples");
    example_cmd->require_subcommand(1);
    auto* example_hp = example_cmd->add_subcommand("hp", "Coupled spin-spin system");
    example_hp->add_option("--s1", s1)->required();
    example_hp->add_option("--variant", variant)->check(CLI::IsMember({"a", "b"}));
    example_hp->add_option("-o,--output", output);

    auto* sample_cmd = app.add_subcommand("sample", "Sample a momentum map");
    sample_cmd->require_subcommand(1);
    auto* sample_hp_cmd = sample_cmd->add_subcommand("hp", "Coupled spin-spin system");
    sample_hp_cmd->add_option("--s1", s1)->required();
    sample_hp_cmd->add_option("-n", n)->check(CLI::PositiveNumber);
    sample_hp_cmd->add_option("--format", format)->check(CLI::IsMember({"csv"}));
    sample_hp_cmd->add_flag("--critical", critical, "print only the focus-focus values");

    std::vector<std::string> argv_store{"semitoric"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    try {
        if (*validate_cmd)
            return do_validate(file, out);
        if (*canon_cmd)
            return do_canon(file, output, out, err);
        if (*eq_cmd)
            return do_eq(file, file2, out);
        if (*act_cmd)
            return do_act(file, T, cuts, shift, output, out);
        if (*extract_cmd)
            return do_extract(file, out);
        if (*complete_cmd)
            return do_complete(file, output, out);
        if (*ladder_cmd)
            return do_ladder(w, list, out);
        if (*render_cmd)
            return do_render(file, output, lattice, out, err);
        if (*example_hp)
            return do_example(s1, variant, output, out);
        if (*sample_hp_cmd)
            return do_sample(s1, n, critical, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return bad_document;
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << "\n";
        return bad_document;
    } catch (const VersionError& e) {
        err << "version error: " << e.what() << "\n";
        return bad_document;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

} // namespace semitoric::cli
