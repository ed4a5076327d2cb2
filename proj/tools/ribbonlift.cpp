// Command line front end.  Analysis commands print a deterministic report
// (sorted key/value lines); construction commands print the resulting object
// in its text format.  Exit codes: 0 success, 1 domain error, 2 usage or IO.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ribbonlift/bounds.hpp"
#include "ribbonlift/constructions.hpp"
#include "ribbonlift/defect.hpp"
#include "ribbonlift/diagram.hpp"
#include "ribbonlift/io.hpp"
#include "ribbonlift/lift.hpp"
#include "ribbonlift/planarity.hpp"
#include "ribbonlift/ribbon_graph.hpp"
#include "ribbonlift/seifert.hpp"

using namespace ribbonlift;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read '" << path << "'\n";
        std::exit(2);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string first_token(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (ls >> tok) return tok;
    }
    return "";
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

const char* tristate_name(Tristate t) {
    switch (t) {
        case Tristate::yes: return "yes";
        case Tristate::no: return "no";
        case Tristate::unknown: return "unknown";
    }
    return "unknown";
}

std::string joined(const std::vector<Dart>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

Report make_report(const std::string& command, const std::string& canonical) {
    Report r;
    r.command = command;
    r.input_digest = digest_hex(canonical);
    return r;
}

void print(const Report& r) { std::cout << render_report(r); }

struct Options {
    std::string file;
    std::string embedding_file;
    bool allow_low_valence = false;
    bool parallel = false;
    long long budget = 1000000;
    int genus = 0;
    bool genus_given = false;
    int at = -1;
    bool all = false;
    std::string coorientation = "positive";
};

void cmd_validate(const Options& opt) {
    std::string text = read_file(opt.file);
    std::string kind = first_token(text);
    if (kind == "ribbon") {
        RibbonGraph g = parse_ribbon(text, opt.allow_low_valence);
        Report r = make_report("validate", emit_ribbon(g));
        r.add("kind", "ribbon");
        r.add("darts", g.dart_count());
        r.add("vertices", (long long)permutation_cycles(g.sigma).size());
        r.add("edges", g.dart_count() / 2);
        r.add("connected", yesno(is_connected(g)));
        print(r);
    } else if (kind == "diagram") {
        SphericalDiagram d = parse_diagram(text);
        Report r = make_report("validate", emit_diagram(d));
        r.add("kind", "diagram");
        r.add("darts", d.map.dart_count());
        r.add("crossings", crossing_count(d));
        r.add("vertices",
              (long long)permutation_cycles(d.map.sigma).size() - crossing_count(d));
        print(r);
    } else if (kind == "word") {
        ImmersedCircleWord w = parse_word(text);
        Report r = make_report("validate", emit_word(w));
        r.add("kind", "word");
        r.add("letters", (long long)w.letters.size());
        r.add("crossings", (long long)w.letters.size() / 2);
        print(r);
    } else {
        fail(ErrorCode::SyntaxError, "unrecognised header '" + kind + "'");
    }
}

void cmd_genus(const Options& opt) {
    RibbonGraph g = parse_ribbon(read_file(opt.file), opt.allow_low_valence);
    auto inv = surface_invariants(g);
    Report r = make_report("genus", emit_ribbon(g));
    r.add("vertices", inv.num_vertices);
    r.add("edges", inv.num_edges);
    r.add("faces", inv.num_faces);
    r.add("euler", inv.euler_characteristic);
    r.add("genus", inv.genus);
    print(r);
}

void cmd_faces(const Options& opt) {
    RibbonGraph g = parse_ribbon(read_file(opt.file), opt.allow_low_valence);
    auto faces = orbits(g, OrbitKind::face);
    Report r = make_report("faces", emit_ribbon(g));
    r.add("faces", (long long)faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i)
        r.add(indexed_key("face", (int)i), joined(faces[i]));
    print(r);
}

void cmd_components(const Options& opt) {
    RibbonGraph g = parse_ribbon(read_file(opt.file), opt.allow_low_valence);
    auto comps = connected_components(g);
    Report r = make_report("components", emit_ribbon(g));
    r.add("components", (long long)comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        r.add(indexed_key("component", (int)i, "darts"), c.graph.dart_count());
        r.add(indexed_key("component", (int)i, "genus"),
              surface_invariants(c.graph).genus);
        r.add(indexed_key("component", (int)i, "members"), joined(c.original_darts));
    }
    print(r);
}

void cmd_bouquet(const Options& opt) {
    std::cout << emit_ribbon(canonical_bouquet(opt.genus));
}

void cmd_trivalent(const Options& opt) {
    RibbonGraph g = parse_ribbon(read_file(opt.file), opt.allow_low_valence);
    std::cout << emit_ribbon(make_trivalent(g));
}

void cmd_colourrotate(const Options& opt) {
    RibbonGraph g = parse_ribbon(read_file(opt.file), opt.allow_low_valence);
    std::cout << emit_ribbon(rotation_from_colours(g));
}

void cmd_mingenus(const Options& opt) {
    RibbonGraph g = parse_ribbon(read_file(opt.file), opt.allow_low_valence);
    auto ug = underlying_abstract_graph(g);
    auto res = min_genus_over_rotations(ug.graph, opt.budget, opt.parallel);
    Report r = make_report("mingenus", emit_ribbon(g));
    r.add("genus", res.genus);
    r.add("exact", yesno(res.exact));
    r.add("examined", res.examined);
    if (!res.exact)
        r.warnings.push_back("search budget exhausted; genus is an upper bound only");
    print(r);
}

void cmd_resolve(const Options& opt) {
    SphericalDiagram d = parse_diagram(read_file(opt.file));
    std::cout << emit_ribbon(resolve_all_crossings(d));
}

void cmd_restore(const Options& opt) {
    SphericalDiagram d = parse_diagram(read_file(opt.file));
    if (opt.all) {
        std::cout << emit_ribbon(restore_all(d));
        return;
    }
    if (opt.at < 0 || opt.at >= d.map.dart_count())
        fail(ErrorCode::BadArgument, "--at names no dart of the diagram");
    auto splice = restore_crossing(d.map, vertex_rep(d.map, opt.at), d.crossings);
    if (splice.crossings.empty()) {
        std::cout << emit_ribbon(splice.graph);
    } else {
        SphericalDiagram out{splice.graph, splice.crossings};
        std::cout << emit_diagram(out);
    }
}

void cmd_unkink(const Options& opt) {
    SphericalDiagram d = parse_diagram(read_file(opt.file));
    SphericalDiagram out = remove_edge_self_crossings(d);
    if (out.crossings.empty()) std::cout << emit_ribbon(out.map);
    else std::cout << emit_diagram(out);
}

void cmd_seifert(const Options& opt) {
    ImmersedCircleWord w = parse_word(read_file(opt.file));
    Coorientation side = opt.coorientation == "negative" ? Coorientation::negative
                                                         : Coorientation::positive;
    SeifertData data = fill_surface(w, side);
    Report r = make_report("seifert", emit_word(w));
    r.add("crossings", data.num_crossings);
    r.add("circles", data.num_seifert_circles);
    r.add("euler", data.euler_characteristic_sigma);
    r.add("genus", data.genus_sigma);
    r.add("branch_points", data.branch_points);
    r.add("coorientation", opt.coorientation);
    print(r);
}

void cmd_lift(const Options& opt) {
    SphericalDiagram d = parse_diagram(read_file(opt.file));
    CoveringResult res = build_covering(d);
    Report r = make_report("lift", emit_diagram(d));
    r.add("crossings", crossing_count(d));
    r.add("chi_base", res.chi_n);
    r.add("chi_total", res.chi_y);
    r.add("genus_total", res.genus_y);
    r.add("degree", res.degree);
    r.add("branch_points", res.branch_count);
    r.add("points_between_circles", res.points_between_circles);
    r.add("riemann_hurwitz", yesno(check_riemann_hurwitz(res)));
    r.add("circles", (long long)res.circles.size());
    for (std::size_t i = 0; i < res.circles.size(); ++i) {
        const auto& c = res.circles[i];
        std::string word;
        for (std::size_t j = 0; j < c.word.letters.size(); ++j) {
            if (j) word += ' ';
            word += c.word.letters[j];
        }
        if (word.empty()) word = "-";
        r.add(indexed_key("circle", (int)i, "word"), word);
        r.add(indexed_key("circle", (int)i, "circles"), c.filling.num_seifert_circles);
        r.add(indexed_key("circle", (int)i, "genus"), c.filling.genus_sigma);
        r.add(indexed_key("circle", (int)i, "branch_points"), c.filling.branch_points);
    }
    print(r);
}

void cmd_bounds(const Options& opt) {
    RibbonGraph g = parse_ribbon(read_file(opt.file), opt.allow_low_valence);
    auto ug = underlying_abstract_graph(g);
    int genus = opt.genus_given ? opt.genus : surface_invariants(g).genus;
    BoundsReport b = self_intersection_lower_bound(genus, ug.graph);
    Report r = make_report("bounds", emit_ribbon(g));
    r.add("genus_bound", b.genus_bound);
    r.add("crossing_bound", b.crossing_bound);
    r.add("crossing_provenance", b.crossing_provenance);
    r.add("crossing_exact", yesno(b.crossing_exact));
    r.add("combined", b.combined);
    r.add("equality_possible", tristate_name(b.equality_possible));
    r.warnings = b.warnings;
    print(r);
}

void cmd_defect(const Options& opt) {
    RibbonGraph g = parse_ribbon(read_file(opt.file), opt.allow_low_valence);
    DefectReport d;
    if (opt.embedding_file.empty()) {
        d = min_defect(g);
    } else {
        RibbonGraph emb = parse_ribbon(read_file(opt.embedding_file), opt.allow_low_valence);
        d.delta_plus = defect_against(g, emb);
        d.delta_minus = defect_against(g, mirror_rotation(emb));
        d.minimum = std::min(d.delta_plus, d.delta_minus);
        d.exact = is_three_connected(underlying_abstract_graph(g).graph);
        if (surface_invariants(emb).genus != 0)
            d.warnings.push_back("supplied embedding is not planar");
        if (!d.exact)
            d.warnings.push_back(
                "underlying graph is not 3-connected; minimum is an upper bound only");
    }
    Report r = make_report("defect", emit_ribbon(g));
    r.add("delta_plus", d.delta_plus);
    r.add("delta_minus", d.delta_minus);
    r.add("minimum", d.minimum);
    r.add("exact", yesno(d.exact));
    r.warnings = d.warnings;
    print(r);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ribbon graph and immersed diagram toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("file", opt.file, "input file")->required();
    };
    auto add_low = [&](CLI::App* sub) {
        sub->add_flag("--allow-low-valence", opt.allow_low_valence,
                      "accept vertices of valence 1 or 2");
    };

    auto* validate = app.add_subcommand("validate", "parse and check an input file");
    add_input(validate);
    add_low(validate);

    auto* genus = app.add_subcommand("genus", "surface invariants of a ribbon graph");
    add_input(genus);
    add_low(genus);

    auto* faces = app.add_subcommand("faces", "face cycles of a ribbon graph");
    add_input(faces);
    add_low(faces);

    auto* components = app.add_subcommand("components", "connected components");
    add_input(components);
    add_low(components);

    auto* bouquet = app.add_subcommand("bouquet", "one-vertex graph of a given genus");
    bouquet->add_option("--genus", opt.genus, "target genus")->required();

    auto* trivalent = app.add_subcommand("trivalent", "expand vertices into polygons");
    add_input(trivalent);
    add_low(trivalent);

    auto* mingenus =
        app.add_subcommand("mingenus", "minimum genus over all rotation systems");
    add_input(mingenus);
    add_low(mingenus);
    mingenus->add_option("--budget", opt.budget, "rotation systems to examine");
    mingenus->add_flag("--parallel", opt.parallel, "search on all cores");

    auto* colourrotate =
        app.add_subcommand("colourrotate", "apply the two-colour rotation rule");
    add_input(colourrotate);
    add_low(colourrotate);

    auto* resolve =
        app.add_subcommand("resolve", "turn every crossing into a real vertex");
    add_input(resolve);

    auto* restore = app.add_subcommand("restore", "splice strands through crossings");
    add_input(restore);
    restore->add_option("--at", opt.at, "crossing to restore (any of its darts)");
    restore->add_flag("--all", opt.all, "restore every crossing");

    auto* unkink = app.add_subcommand("unkink", "remove same-edge crossings");
    add_input(unkink);

    auto* seifert = app.add_subcommand("seifert", "fill an immersed circle word");
    add_input(seifert);
    seifert->add_option("--coorientation", opt.coorientation, "positive or negative")
        ->check(CLI::IsMember({"positive", "negative"}));

    auto* lift = app.add_subcommand("lift", "branched covering built from a diagram");
    add_input(lift);

    auto* bounds =
        app.add_subcommand("bounds", "self-intersection lower bound for a spanning graph");
    add_input(bounds);
    add_low(bounds);
    bounds->add_option("--genus", opt.genus, "genus of the target surface (default: the input's own)")
        ->each([&](const std::string&) { opt.genus_given = true; });

    auto* defect = app.add_subcommand("defect", "distance to a planar rotation system");
    add_input(defect);
    defect->add_option("embedding", opt.embedding_file,
                       "compare against this rotation instead of a computed embedding");
    add_low(defect);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) cmd_validate(opt);
        else if (genus->parsed()) cmd_genus(opt);
        else if (faces->parsed()) cmd_faces(opt);
        else if (components->parsed()) cmd_components(opt);
        else if (bouquet->parsed()) cmd_bouquet(opt);
        else if (trivalent->parsed()) cmd_trivalent(opt);
        else if (mingenus->parsed()) cmd_mingenus(opt);
        else if (colourrotate->parsed()) cmd_colourrotate(opt);
        else if (resolve->parsed()) cmd_resolve(opt);
        else if (restore->parsed()) {
            if (opt.all == (opt.at >= 0))
                fail(ErrorCode::BadArgument, "restore needs exactly one of --at, --all");
            cmd_restore(opt);
        } else if (unkink->parsed()) cmd_unkink(opt);
        else if (seifert->parsed()) cmd_seifert(opt);
        else if (lift->parsed()) cmd_lift(opt);
        else if (bounds->parsed()) cmd_bounds(opt);
        else if (defect->parsed()) cmd_defect(opt);
    } catch (const RibbonError& e) {
        std::cerr << "error " << code_name(e.code()) << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
