// Acceptance checks, one per shipped guarantee.  Prints PASS or FAIL per
// criterion and exits nonzero if any failed.  Unlike the unit tests this
// runner also drives the installed CLI binary.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ribbonlift/bounds.hpp"
#include "ribbonlift/constructions.hpp"
#include "ribbonlift/defect.hpp"
#include "ribbonlift/diagram.hpp"
#include "ribbonlift/io.hpp"
#include "ribbonlift/lift.hpp"
#include "ribbonlift/planarity.hpp"
#include "ribbonlift/ribbon_graph.hpp"
#include "ribbonlift/seifert.hpp"
#include "support.hpp"

using namespace ribbonlift;
using namespace testsupport;

namespace {

int failures = 0;

void criterion(const char* name, const std::function<bool()>& body) {
    bool pass = false;
    std::string note;
    try {
        pass = body();
    } catch (const std::exception& e) {
        note = e.what();
    }
    std::printf("%s - %s\n", pass ? "PASS" : "FAIL", name);
    if (!pass) {
        ++failures;
        if (!note.empty()) std::fprintf(stderr, "  threw: %s\n", note.c_str());
    }
}

bool theta_genus_identities() {
    bool ok = surface_invariants(make_theta_planar()).genus == 0;
    const auto same = surface_invariants(make_theta_same_rotation());
    ok = ok && same.genus == 1 && same.num_faces == 1;

    std::mt19937 rng(511);
    for (int trial = 0; trial < 200 && ok; ++trial) {
        const auto inv = surface_invariants(random_trivalent(rng));
        ok = 4 * inv.genus == 4 + inv.num_vertices - 2 * inv.num_faces;
    }
    return ok;
}

bool spanning_constructions() {
    bool ok = true;
    for (int g = 1; g <= 6 && ok; ++g) {
        const auto inv = surface_invariants(canonical_bouquet(g));
        ok = inv.num_faces == 1 && inv.genus == g;
    }
    for (const char* name :
         {"theta_planar.ribbon", "theta_same_rotation.ribbon",
          "k4_planar.ribbon", "k5.ribbon", "k7_torus.ribbon"}) {
        if (!ok) break;
        const auto g = ribbon_fixture(name);
        ok = surface_invariants(make_trivalent(g)).genus ==
             surface_invariants(g).genus;
    }
    std::mt19937 rng(522);
    for (int trial = 0; trial < 200 && ok; ++trial) {
        const auto g = random_ribbon(rng);
        ok = surface_invariants(make_trivalent(g)).genus ==
             surface_invariants(g).genus;
    }
    return ok;
}

bool minimum_genus_oracles() {
    const auto k4 = min_genus_over_rotations(complete_graph(4));
    const auto k5 = min_genus_over_rotations(complete_graph(5));
    const auto k33 = min_genus_over_rotations(complete_bipartite(3, 3));
    bool ok = k4.genus == 0 && k4.exact;
    ok = ok && k5.genus == 1 && k5.exact;
    ok = ok && k33.genus == 1 && k33.exact;

    const auto inv = surface_invariants(ribbon_fixture("k7_torus.ribbon"));
    return ok && inv.genus == 1 && inv.num_faces == 14;
}

bool seifert_counts() {
    const auto is = [](const ImmersedCircleWord& w, int m, int d, int chi,
                       int genus) {
        const auto f = fill_surface(w);
        return f.num_seifert_circles == m && f.num_crossings == d &&
               f.euler_characteristic_sigma == chi && f.genus_sigma == genus;
    };
    ImmersedCircleWord empty, kink, trefoil;
    kink.letters = {"A", "A"};
    trefoil.letters = {"A", "B", "C", "A", "B", "C"};
    bool ok = is(empty, 1, 0, 1, 0) && is(kink, 2, 1, 1, 0) &&
              is(trefoil, 2, 3, -1, 1);

    for (int d = 0; d <= 5 && ok; ++d)
        for (const auto& w : all_double_occurrence_words(d)) {
            const auto f = fill_surface(w);
            ok = ok && (f.num_seifert_circles + f.num_crossings) % 2 == 1;
        }
    return ok;
}

bool covering_identities() {
    bool ok = true;
    for (const auto& g :
         {make_theta_planar(), ribbon_fixture("k4_planar.ribbon"),
          planarity_and_rotation(cube_graph())}) {
        const auto r = build_covering(zero_cross(g));
        ok = ok && r.degree == 1 && r.genus_y == 0 && r.branch_count == 0;
    }

    const auto corpus = diagram_corpus();
    ok = ok && corpus.size() >= 20;
    for (const auto& d : corpus) {
        if (!ok) break;
        const auto r = build_covering(d);
        const auto inv = surface_invariants(extract_theta(d).theta);
        int sum_m = 0;
        int sum_genus = 0;
        for (const auto& circle : r.circles) {
            sum_m += circle.filling.num_seifert_circles;
            sum_genus += circle.filling.genus_sigma;
        }
        ok = check_riemann_hurwitz(r);
        ok = ok && r.chi_y % 2 == 0;
        ok = ok && 2 * r.degree == r.chi_y + r.branch_count;
        ok = ok && r.chi_n == inv.num_vertices - inv.num_edges;
        ok = ok && 2 * r.degree == r.chi_n + sum_m;
        ok = ok && r.genus_y == inv.genus + sum_genus;
    }
    return ok;
}

bool every_restoration_order(const RibbonGraph& h,
                             const std::vector<Dart>& flags, int genus_now,
                             int target) {
    if (flags.empty()) return genus_now == target;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        auto rest = flags;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        const auto spliced = restore_crossing(h, flags[i], rest);
        const int genus_next = surface_invariants(spliced.graph).genus;
        if (genus_next > genus_now + 1) return false;
        if (!every_restoration_order(spliced.graph, spliced.crossings,
                                     genus_next, target))
            return false;
    }
    return true;
}

bool crossing_moves() {
    bool ok = true;
    for (const auto& d : diagram_corpus()) {
        if (!ok) break;
        ok = surface_invariants(resolve_all_crossings(d)).genus == 0;
        const int target = surface_invariants(extract_theta(d).theta).genus;
        ok = ok && target <= static_cast<int>(d.crossings.size());
        ok = ok && every_restoration_order(d.map, d.crossings, 0, target);
    }
    return ok;
}

bool intersection_bounds() {
    const auto k7 = complete_graph(7);
    const auto report = self_intersection_lower_bound(1, k7);
    bool ok = report.combined == 9 && report.combined > report.genus_bound;

    const auto k4 = crossing_number_small(complete_graph(4));
    const auto k5 = crossing_number_small(complete_graph(5));
    const auto k33 = crossing_number_small(complete_bipartite(3, 3));
    const auto k6 = crossing_number_small(complete_graph(6), 3);
    ok = ok && k4.value == 0 && k4.exact;
    ok = ok && k5.value == 1 && k5.exact;
    ok = ok && k33.value == 1 && k33.exact;
    ok = ok && k6.value == 3 && k6.exact;

    ok = ok && euler_crossing_lower_bound(k7) == 6;
    ok = ok && 6 <= known_crossing_table("K7");

    ok = ok && equality_necessary_condition(1, k7) == Tristate::no;
    ok = ok && equality_necessary_condition(1, complete_graph(5)) ==
                   Tristate::yes;
    return ok;
}

bool embedding_defects() {
    const auto k4 = ribbon_fixture("k4_planar.ribbon");
    const auto base = min_defect(k4);
    bool ok = base.minimum == 0;
    ok = ok && min_defect(reverse_vertex_rotation(k4, 0)).minimum == 1;
    ok = ok && min_defect(mirror_rotation(k4)).minimum == 0;
    ok = ok && base.delta_plus + base.delta_minus == 4;

    const auto cube = min_defect(planarity_and_rotation(cube_graph()));
    return ok && cube.delta_plus + cube.delta_minus == 8;
}

bool kink_removal() {
    const auto nested = diagram_fixture("nested_kinks.diagram");
    bool ok = nested.crossings.size() == 2;
    const auto cleaned = remove_edge_self_crossings(nested);
    ok = ok && cleaned.crossings.empty();
    ok = ok && surface_invariants(cleaned.map).genus == 0;
    const auto before = underlying_abstract_graph(extract_theta(nested).theta);
    const auto after = underlying_abstract_graph(cleaned.map);
    return ok && before.graph == after.graph;
}

std::string run_cli(const std::string& args, bool& ok) {
    const std::string capture = "acceptance_cli_output.txt";
    const std::string command = std::string("\"") + RIBBONLIFT_CLI_PATH +
                                "\" " + args + " > " + capture + " 2>&1";
    if (std::system(command.c_str()) != 0) ok = false;
    std::ifstream in(capture, std::ios::binary);
    if (!in) ok = false;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool cli_determinism() {
    const auto quoted = [](const char* name) {
        return "\"" + fixture_path(name) + "\"";
    };
    const std::vector<std::string> commands = {
        "validate " + quoted("theta_planar.ribbon"),
        "genus " + quoted("k7_torus.ribbon"),
        "faces " + quoted("theta_same_rotation.ribbon"),
        "components " + quoted("k4_planar.ribbon"),
        "seifert " + quoted("trefoil.word"),
        "lift " + quoted("one_crossing_theta.diagram"),
        "bounds --genus 1 " + quoted("k5.ribbon"),
        "defect " + quoted("k4_planar.ribbon"),
        "unkink " + quoted("nested_kinks.diagram"),
        "restore --all " + quoted("one_crossing_theta.diagram"),
        "mingenus " + quoted("k5.ribbon"),
        "mingenus --parallel " + quoted("k5.ribbon"),
    };

    bool ok = true;
    std::vector<std::string> first;
    for (const auto& args : commands) {
        const auto once = run_cli(args, ok);
        first.push_back(once);
        for (int repeat = 0; repeat < 2 && ok; ++repeat) {
            const auto again = run_cli(args, ok);
            ok = ok && again == once;
        }
        if (!ok) {
            std::fprintf(stderr, "  unstable: %s\n", args.c_str());
            break;
        }
    }
    if (first.size() < commands.size()) return false;
    // The parallel search must report exactly what the sequential one does.
    ok = ok && first[commands.size() - 1] == first[commands.size() - 2];
    return ok;
}

} // namespace

int main() {
    criterion("01 theta genera and the trivalent genus identity",
              theta_genus_identities);
    criterion("02 one-face bouquets and genus-preserving trivalent expansion",
              spanning_constructions);
    criterion("03 exhaustive minimum genus and the toroidal K7 fixture",
              minimum_genus_oracles);
    criterion("04 Seifert circle counts and circle-crossing parity",
              seifert_counts);
    criterion("05 branched covering degree and Riemann-Hurwitz identities",
              covering_identities);
    criterion("06 crossing resolution and stepwise restoration",
              crossing_moves);
    criterion("07 self-intersection lower bounds on complete graphs",
              intersection_bounds);
    criterion("08 minimal embedding defects of prescribed rotations",
              embedding_defects);
    criterion("09 nested kink removal preserves the underlying graph",
              kink_removal);
    criterion("10 deterministic CLI reports across runs and parallelism",
              cli_determinism);
    return failures == 0 ? 0 : 1;
}
