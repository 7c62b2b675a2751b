#include "latmin/cli.hpp"

#include "latmin/error.hpp"
#include "latmin/gon.hpp"
#include "latmin/json_io.hpp"
#include "latmin/postulation.hpp"
#include "latmin/suite.hpp"
#include "latmin/toric.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace latmin {

namespace {

const std::vector<std::string> kCommands = {"width",    "minima",        "polar",       "volume", "points",
                                            "toric-eps", "toric-bracket", "postulation", "verify"};

struct Options {
    std::string command;
    std::string in_file;
    std::string inline_json;
    std::string mode;
    std::string vertex;
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t count = 100;
    int dim = 2;
    long bound = 4;
    std::string out_file;
};

Json load_input(const Options& o)
{
    if (!o.in_file.empty() && !o.inline_json.empty())
        throw Error(ErrorKind::Usage, "use either --in or --inline, not both");
    if (!o.inline_json.empty())
        return parse_json(o.inline_json);
    if (o.in_file.empty())
        throw Error(ErrorKind::Usage, "command '" + o.command + "' needs --in FILE or --inline JSON");
    std::ifstream f(o.in_file);
    if (!f)
        throw Error(ErrorKind::Io, "cannot read '" + o.in_file + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_json(ss.str());
}

IntVec parse_vertex(const std::string& text)
{
    IntVec v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const Rat r = parse_rat(item);
        if (r.get_den() != 1)
            throw Error(ErrorKind::ParseError, "vertex coordinates must be integers");
        v.push_back(r.get_num());
    }
    if (v.empty())
        throw Error(ErrorKind::Usage, "--vertex needs comma-separated integers");
    return v;
}

SymmetricBody body_for_mode(const Polytope& p, const std::string& mode)
{
    if (mode.empty() || mode == "body")
        return SymmetricBody(p);
    if (mode == "difference")
        return difference_body(p);
    if (mode == "polar-difference")
        return polar(difference_body(p));
    throw Error(ErrorKind::Usage, "unknown mode '" + mode + "' (body, difference, polar-difference)");
}

struct Outcome {
    Json json;
    bool violated = false;
};

Outcome single_report(const Options& o, const Json& input)
{
    const Polytope p = polytope_from_json(input);
    TheoremReport r;
    switch (parse_suite(o.suite)) {
    case SuiteKind::Minkowski: r = verify_minkowski_second(p); break;
    case SuiteKind::Transference: r = verify_transference(SymmetricBody(p)); break;
    case SuiteKind::Sharp2d: r = verify_sharp_2d(SymmetricBody(p)); break;
    case SuiteKind::Flatness: r = flatness_report(p); break;
    case SuiteKind::M2m: r = verify_m2m(MomentPolytope(p), eps_bracket_general(MomentPolytope(p))); break;
    case SuiteKind::Postulation: throw Error(ErrorKind::Usage, "the postulation suite has no single-polytope form");
    }
    return Outcome{report_to_json(r), !r.holds()};
}

Outcome dispatch(const Options& o)
{
    const std::string& c = o.command;
    if (c == "verify") {
        if (o.suite.empty())
            throw Error(ErrorKind::Usage, "verify needs --suite");
        if (!o.in_file.empty() || !o.inline_json.empty())
            return single_report(o, load_input(o));
        SuiteConfig cfg;
        cfg.suite = parse_suite(o.suite);
        cfg.seed = o.seed;
        cfg.count = o.count;
        cfg.dim = o.dim;
        cfg.coord_bound = o.bound;
        const SuiteResult r = run_suite(cfg);
        return Outcome{suite_to_json(r), r.violated > 0};
    }

    const Json input = load_input(o);
    if (c == "postulation") {
        if (input.contains("t")) {
            const BoxSpec box = box_from_json(input);
            const auto closed = box_volume_closed_form(box);
            const TheoremReport bound = check_vol_bound(box);
            Json out{{"count", int_to_json(box_count(box))},
                     {"volume", rat_to_json(box_volume_triangulated(box))},
                     {"closed_form", closed ? rat_to_json(*closed) : Json(nullptr)},
                     {"volume_bound", report_to_json(bound)}};
            return Outcome{out, !bound.holds()};
        }
        return Outcome{Json{{"h0", int_to_json(flag_h0(flag_from_json(input)))}}};
    }

    const Polytope p = polytope_from_json(input);
    if (c == "width")
        return Outcome{width_to_json(lattice_width(p))};
    if (c == "minima")
        return Outcome{minima_to_json(successive_minima(body_for_mode(p, o.mode)))};
    if (c == "polar") {
        const std::string mode = o.mode == "polar-difference" ? "difference" : o.mode;
        return Outcome{polytope_to_json(polar(body_for_mode(p, mode)).body())};
    }
    if (c == "volume")
        return Outcome{Json{{"volume", rat_to_json(volume(p))}}};
    if (c == "points") {
        LatticeMode mode = LatticeMode::All;
        if (o.mode == "interior")
            mode = LatticeMode::InteriorOnly;
        else if (!o.mode.empty() && o.mode != "all")
            throw Error(ErrorKind::Usage, "unknown mode '" + o.mode + "' (all, interior)");
        Json pts = Json::array();
        const auto points = lattice_points(p, mode);
        for (const auto& v : points)
            pts.push_back(intvec_to_json(v));
        return Outcome{Json{{"count", points.size()}, {"points", pts}}};
    }
    if (c == "toric-eps") {
        if (o.vertex.empty())
            throw Error(ErrorKind::Usage, "toric-eps needs --vertex");
        return Outcome{eps_to_json(eps_at_invariant_point(MomentPolytope(p), parse_vertex(o.vertex)))};
    }
    if (c == "toric-bracket")
        return Outcome{eps_to_json(eps_bracket_general(MomentPolytope(p)))};
    throw Error(ErrorKind::Usage, "unknown command '" + c + "'");
}

Json error_json(std::string_view kind, const std::string& message)
{
    return Json{{"error", Json{{"kind", std::string(kind)}, {"message", message}}}};
}

} // namespace

CliResult run(const std::vector<std::string>& argv)
{
    Options o;
    CLI::App app{"Exact successive minima, lattice widths and toric Seshadri minima", "latmin"};
    app.add_option("command", o.command, "Command to run")->required()->check(CLI::IsMember(kCommands));
    app.add_option("--in", o.in_file, "Input JSON file");
    app.add_option("--inline", o.inline_json, "Input JSON given inline");
    app.add_option("--mode", o.mode, "Command mode");
    app.add_option("--vertex", o.vertex, "Vertex as comma-separated integers");
    app.add_option("--suite", o.suite, "Verification suite");
    app.add_option("--seed", o.seed, "Suite seed");
    app.add_option("--count", o.count, "Suite instance count");
    app.add_option("--dim", o.dim, "Suite dimension");
    app.add_option("--bound", o.bound, "Suite coordinate bound");
    app.add_option("--out", o.out_file, "Write the report to FILE instead of stdout");

    std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        return CliResult{0, app.help()};
    } catch (const CLI::ParseError& e) {
        return CliResult{2, error_json("Usage", e.what()).dump() + "\n"};
    }

    CliResult result;
    try {
        const Outcome outcome = dispatch(o);
        result.exit_code = outcome.violated ? 1 : 0;
        result.out = outcome.json.dump() + "\n";
    } catch (const Error& e) {
        return CliResult{2, error_json(to_string(e.kind()), e.what()).dump() + "\n"};
    } catch (const std::exception& e) {
        return CliResult{2, error_json("ParseError", e.what()).dump() + "\n"};
    }

    if (!o.out_file.empty()) {
        std::ofstream f(o.out_file, std::ios::binary);
        if (!f || !(f << result.out))
            return CliResult{2, error_json("Io", "cannot write '" + o.out_file + "'").dump() + "\n"};
        result.out.clear();
    }
    return result;
}

} // namespace latmin
