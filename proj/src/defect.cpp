#include "ribbonlift/defect.hpp"

#include <algorithm>
#include <string>

#include "ribbonlift/planarity.hpp"

namespace ribbonlift {

namespace {

std::vector<int> node_of_dart(const RibbonGraph& g) {
    std::vector<int> node(g.dart_count(), -1);
    int id = 0;
    for (const auto& cycle : permutation_cycles(g.sigma)) {
        for (Dart d : cycle) node[d] = id;
        ++id;
    }
    return node;
}

} // namespace

int defect_against(const RibbonGraph& prescribed, const RibbonGraph& embedding) {
    if (prescribed.dart_count() != embedding.dart_count())
        fail(ErrorCode::DartSetMismatch, "the two systems have different dart sets");
    if (prescribed.alpha != embedding.alpha)
        fail(ErrorCode::AlphaMismatch, "the two systems pair edges differently");

    int differing = 0;
    for (const auto& cycle : permutation_cycles(prescribed.sigma)) {
        auto other = vertex_cycle_of(embedding, cycle.front());
        std::vector<Dart> a = cycle, b = other;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            fail(ErrorCode::DartSetMismatch,
                 "vertex at dart " + std::to_string(cycle.front()) +
                     " groups different darts in the two systems");
        // Both cycles start at the orbit's least dart, so cyclic equality is
        // plain equality.
        if (cycle != other) ++differing;
    }
    return differing;
}

RibbonGraph planar_embedding_on(const RibbonGraph& prescribed) {
    validate_ribbon_graph(prescribed);
    auto ug = underlying_abstract_graph(prescribed);
    RibbonGraph emb = planarity_and_rotation(ug.graph);

    // Pull the embedding back onto the prescribed dart set: link i of the
    // underlying graph owns embedding darts 2i (first endpoint) and 2i+1,
    // and corresponds to the alpha-orbit whose lesser dart is link_rep[i].
    auto node = node_of_dart(prescribed);
    std::vector<Dart> to_prescribed(emb.dart_count(), -1);
    for (int i = 0; i < static_cast<int>(ug.graph.links.size()); ++i) {
        const Dart a = ug.link_rep[i];
        const Dart b = prescribed.alpha[a];
        if (node[a] == node[b]) { // loop: orientation is immaterial
            to_prescribed[2 * i] = a;
            to_prescribed[2 * i + 1] = b;
        } else if (node[a] == ug.graph.links[i].first) {
            to_prescribed[2 * i] = a;
            to_prescribed[2 * i + 1] = b;
        } else {
            to_prescribed[2 * i] = b;
            to_prescribed[2 * i + 1] = a;
        }
    }

    RibbonGraph out;
    out.sigma.assign(prescribed.dart_count(), -1);
    out.alpha = prescribed.alpha;
    for (Dart x = 0; x < emb.dart_count(); ++x)
        out.sigma[to_prescribed[x]] = to_prescribed[emb.sigma[x]];
    return out;
}

DefectReport min_defect(const RibbonGraph& prescribed) {
    DefectReport report;
    RibbonGraph embedding = planar_embedding_on(prescribed);
    report.delta_plus = defect_against(prescribed, embedding);
    report.delta_minus = defect_against(prescribed, mirror_rotation(embedding));
    report.minimum = std::min(report.delta_plus, report.delta_minus);

    auto ug = underlying_abstract_graph(prescribed);
    report.warnings = simple_support(ug.graph).warnings;
    report.exact = is_three_connected(ug.graph);
    if (!report.exact)
        report.warnings.push_back(
            "underlying graph is not 3-connected; minimum is an upper bound only");
    return report;
}

} // namespace ribbonlift
