#include "ribbonlift/diagram.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ribbonlift {

namespace {

// Per-dart crossing lookup: whether the dart sits at a flagged vertex, the
// flag (least dart of the orbit), and the dart's position in the canonical
// 4-cycle.
struct CrossingIndex {
    std::vector<char> flagged;
    std::vector<Dart> rep;
    std::vector<int> position;
};

CrossingIndex index_crossings(const SphericalDiagram& d) {
    const int n = d.map.dart_count();
    CrossingIndex idx;
    idx.flagged.assign(n, 0);
    idx.rep.assign(n, -1);
    idx.position.assign(n, -1);
    for (Dart c : d.crossings) {
        if (c < 0 || c >= n)
            fail(ErrorCode::UnknownCrossing, "no dart " + std::to_string(c));
        auto cycle = vertex_cycle_of(d.map, c);
        if (cycle.front() != c)
            fail(ErrorCode::UnknownCrossing,
                 "crossing flag " + std::to_string(c) +
                     " is not the least dart of its vertex");
        if (cycle.size() != 4)
            fail(ErrorCode::CrossingValence,
                 "crossing at dart " + std::to_string(c) + " has valence " +
                     std::to_string(cycle.size()));
        for (int i = 0; i < 4; ++i) {
            if (idx.flagged[cycle[i]])
                fail(ErrorCode::UnknownCrossing,
                     "duplicate crossing flag at dart " + std::to_string(c));
            idx.flagged[cycle[i]] = 1;
            idx.rep[cycle[i]] = c;
            idx.position[cycle[i]] = i;
        }
    }
    return idx;
}

// Follows a strand from the far side of a true-vertex dart through any
// crossings until the next true vertex.
struct StrandEnd {
    Dart end = -1;
    std::vector<Passage> passages;
};

StrandEnd walk_strand(const SphericalDiagram& d, const CrossingIndex& idx,
                      Dart from_true_dart) {
    StrandEnd out;
    Dart z = d.map.alpha[from_true_dart];
    int guard = 0;
    while (idx.flagged[z]) {
        out.passages.push_back({idx.rep[z], z});
        z = d.map.alpha[through_dart(d.map, z)];
        if (++guard > d.map.dart_count())
            fail(ErrorCode::ClosedStrand,
                 "strand from dart " + std::to_string(from_true_dart) +
                     " never reaches a true vertex");
    }
    out.end = z;
    return out;
}

} // namespace

Dart through_dart(const RibbonGraph& g, Dart d) {
    auto cycle = vertex_cycle_of(g, d);
    if (cycle.size() != 4)
        fail(ErrorCode::NotFourValent,
             "through-pairing needs valence 4, dart " + std::to_string(d) +
                 " sits at valence " + std::to_string(cycle.size()));
    return g.sigma[g.sigma[d]];
}

int crossing_count(const SphericalDiagram& d) {
    return static_cast<int>(d.crossings.size());
}

bool is_crossing(const SphericalDiagram& d, Dart dart) {
    if (dart < 0 || dart >= d.map.dart_count()) return false;
    return std::binary_search(d.crossings.begin(), d.crossings.end(),
                              vertex_rep(d.map, dart));
}

void validate_diagram(const SphericalDiagram& d) {
    validate_ribbon_graph(d.map, /*allow_low_valence=*/true);
    if (!std::is_sorted(d.crossings.begin(), d.crossings.end()) ||
        std::adjacent_find(d.crossings.begin(), d.crossings.end()) != d.crossings.end())
        fail(ErrorCode::UnknownCrossing, "crossing flags must be sorted and distinct");
    auto idx = index_crossings(d);

    bool has_true_vertex = false;
    for (const auto& cycle : permutation_cycles(d.map.sigma)) {
        if (idx.flagged[cycle.front()]) continue;
        has_true_vertex = true;
        if (cycle.size() < 3)
            fail(ErrorCode::BadTrueVertex,
                 "true vertex at dart " + std::to_string(cycle.front()) +
                     " has valence " + std::to_string(cycle.size()));
    }
    if (!has_true_vertex && !d.crossings.empty())
        fail(ErrorCode::ClosedStrand, "diagram has crossings but no true vertex");

    // Every crossing dart must be reached by a strand anchored at a true
    // vertex; a shortfall means some circuit runs through crossings only.
    std::set<Dart> touched;
    for (Dart p = 0; p < d.map.dart_count(); ++p) {
        if (idx.flagged[p]) continue;
        for (const auto& passage : walk_strand(d, idx, p).passages) {
            touched.insert(passage.entry);
            touched.insert(through_dart(d.map, passage.entry));
        }
    }
    int crossing_darts = 4 * static_cast<int>(d.crossings.size());
    if (static_cast<int>(touched.size()) != crossing_darts)
        fail(ErrorCode::ClosedStrand,
             "a strand circuit meets no true vertex (reached " +
                 std::to_string(touched.size()) + " of " +
                 std::to_string(crossing_darts) + " crossing darts)");

    if (surface_invariants(d.map).genus != 0)
        fail(ErrorCode::NotGenusZero, "the drawing does not lie in the sphere");

    // The extracted graph must be connected as well: crossings do not join
    // strands, so a connected drawing can still cover two separate graphs.
    if (has_true_vertex) {
        std::vector<Dart> true_darts;
        for (Dart p = 0; p < d.map.dart_count(); ++p)
            if (!idx.flagged[p]) true_darts.push_back(p);
        std::set<Dart> seen;
        std::vector<Dart> stack = {true_darts.front()};
        seen.insert(true_darts.front());
        while (!stack.empty()) {
            Dart p = stack.back();
            stack.pop_back();
            for (Dart next : {d.map.sigma[p], walk_strand(d, idx, p).end}) {
                if (!seen.count(next)) {
                    seen.insert(next);
                    stack.push_back(next);
                }
            }
        }
        if (seen.size() != true_darts.size())
            fail(ErrorCode::Disconnected, "the drawn graph is disconnected");
    }
}

ImmersedGraph extract_theta(const SphericalDiagram& d) {
    validate_diagram(d);
    auto idx = index_crossings(d);

    ImmersedGraph out;
    out.map_to_theta.assign(d.map.dart_count(), -1);
    for (Dart p = 0; p < d.map.dart_count(); ++p) {
        if (idx.flagged[p]) continue;
        out.map_to_theta[p] = static_cast<Dart>(out.theta_to_map.size());
        out.theta_to_map.push_back(p);
    }

    const int tn = static_cast<int>(out.theta_to_map.size());
    out.theta.sigma.assign(tn, -1);
    out.theta.alpha.assign(tn, -1);
    for (Dart t = 0; t < tn; ++t)
        out.theta.sigma[t] = out.map_to_theta[d.map.sigma[out.theta_to_map[t]]];

    for (Dart t = 0; t < tn; ++t) {
        if (out.theta.alpha[t] != -1) continue;
        auto strand = walk_strand(d, idx, out.theta_to_map[t]);
        const Dart u = out.map_to_theta[strand.end];
        out.theta.alpha[t] = u;
        out.theta.alpha[u] = t;
        out.edge_paths[t] = std::move(strand.passages);
    }

    // Each crossing is met by exactly two passages; pair them up into a
    // record keyed by (edge, 1-based position along the edge walk).
    std::map<Dart, std::vector<std::pair<Dart, int>>> hits;
    for (const auto& [edge, passages] : out.edge_paths)
        for (int i = 0; i < static_cast<int>(passages.size()); ++i)
            hits[passages[i].crossing].emplace_back(edge, i + 1);
    for (Dart c : d.crossings) {
        auto& h = hits[c];
        std::sort(h.begin(), h.end());
        CrossingRecord record;
        record.crossing = c;
        record.edge_a = h[0].first;
        record.pos_a = h[0].second;
        record.edge_b = h[1].first;
        record.pos_b = h[1].second;
        out.crossings.push_back(record);
    }
    return out;
}

RibbonGraph resolve_all_crossings(const SphericalDiagram& d) {
    validate_diagram(d);
    RibbonGraph out = d.map;
    return out;
}

SpliceResult restore_crossing(const RibbonGraph& h, Dart vertex_dart,
                              const std::vector<Dart>& remaining_flags) {
    validate_ribbon_graph(h, /*allow_low_valence=*/true);
    auto cycle = vertex_cycle_of(h, vertex_dart);
    if (cycle.size() != 4)
        fail(ErrorCode::NotFourValent,
             "restore needs a 4-valent vertex, got valence " +
                 std::to_string(cycle.size()));

    std::vector<char> in_orbit(h.dart_count(), 0);
    for (Dart d : cycle) in_orbit[d] = 1;
    auto through = [&](Dart d) {
        for (int i = 0; i < 4; ++i)
            if (cycle[i] == d) return cycle[(i + 2) % 4];
        return Dart(-1);
    };

    // New partner of an external dart: follow the strand through the vertex,
    // hopping over loop edges that return to it, until the far side.
    std::vector<Dart> partner(h.dart_count(), -1);
    for (Dart x = 0; x < h.dart_count(); ++x) {
        if (in_orbit[x] || !in_orbit[h.alpha[x]]) continue;
        Dart w = h.alpha[x];
        int guard = 0;
        for (;;) {
            w = through(w);
            Dart t = h.alpha[w];
            if (!in_orbit[t]) {
                partner[x] = t;
                break;
            }
            w = t;
            if (++guard > 4)
                fail(ErrorCode::ClosedStrand,
                     "strand through the vertex never leaves it");
        }
    }

    SpliceResult out;
    out.old_to_new.assign(h.dart_count(), -1);
    int kept = 0;
    for (Dart d = 0; d < h.dart_count(); ++d)
        if (!in_orbit[d]) out.old_to_new[d] = kept++;
    if (kept == 0)
        fail(ErrorCode::EmptyGraph, "restoring the only vertex leaves nothing");

    out.graph.sigma.assign(kept, -1);
    out.graph.alpha.assign(kept, -1);
    for (Dart d = 0; d < h.dart_count(); ++d) {
        if (in_orbit[d]) continue;
        out.graph.sigma[out.old_to_new[d]] = out.old_to_new[h.sigma[d]];
        Dart mate = in_orbit[h.alpha[d]] ? partner[d] : h.alpha[d];
        out.graph.alpha[out.old_to_new[d]] = out.old_to_new[mate];
    }
    for (const auto& [dart, colour] : h.colours)
        if (!in_orbit[dart]) out.graph.colours[out.old_to_new[dart]] = colour;

    for (Dart c : remaining_flags)
        if (!in_orbit[c]) out.crossings.push_back(out.old_to_new[c]);
    std::sort(out.crossings.begin(), out.crossings.end());
    return out;
}

RibbonGraph restore_all(const SphericalDiagram& d) {
    validate_diagram(d);
    RibbonGraph h = d.map;
    std::vector<Dart> flags = d.crossings;
    while (!flags.empty()) {
        Dart c = flags.front();
        auto spliced = restore_crossing(
            h, c, std::vector<Dart>(flags.begin() + 1, flags.end()));
        h = std::move(spliced.graph);
        flags = std::move(spliced.crossings);
    }
    return h;
}

SphericalDiagram remove_edge_self_crossings(const SphericalDiagram& d) {
    validate_diagram(d);
    SphericalDiagram cur = d;

    for (;;) {
        // An empty kink shows up as a length-1 face at the crossing: some
        // dart x there satisfies sigma(alpha(x)) == x, the loop bounding a
        // bare monogon.  Deleting such a crossing is the restore splice and
        // keeps the drawing in the sphere.
        Dart kink = -1;
        for (Dart c : cur.crossings) {
            for (Dart x : vertex_cycle_of(cur.map, c)) {
                if (cur.map.sigma[cur.map.alpha[x]] == x) {
                    kink = c;
                    break;
                }
            }
            if (kink != -1) break;
        }
        if (kink == -1) break;

        std::vector<Dart> rest;
        for (Dart c : cur.crossings)
            if (c != kink) rest.push_back(c);
        auto spliced = restore_crossing(cur.map, kink, rest);
        cur.map = std::move(spliced.graph);
        cur.crossings = std::move(spliced.crossings);
        if (surface_invariants(cur.map).genus != 0)
            throw std::logic_error("kink removal left the sphere");
    }

    for (const auto& record : extract_theta(cur).crossings) {
        if (record.edge_a == record.edge_b)
            fail(ErrorCode::UnremovableSelfCrossing,
                 "crossing at dart " + std::to_string(record.crossing) +
                     " ties edge " + std::to_string(record.edge_a) +
                     " to itself but never becomes an empty kink");
    }
    return cur;
}

SphericalDiagram insert_kink(const SphericalDiagram& d, Dart y, bool mirrored) {
    validate_diagram(d);
    if (y < 0 || y >= d.map.dart_count())
        fail(ErrorCode::UnknownVertex, "no dart " + std::to_string(y));

    const Dart n = d.map.dart_count();
    const Dart z = d.map.alpha[y];
    SphericalDiagram out = d;
    out.map.sigma.resize(n + 4);
    out.map.alpha.resize(n + 4);
    for (int i = 0; i < 4; ++i) out.map.sigma[n + i] = n + (i + 1) % 4;
    // The edge y--z is split into y--(new vertex)--loop--(new vertex)--z;
    // which way the loop winds decides which pair of new darts it uses.
    if (!mirrored) {
        out.map.alpha[y] = n;
        out.map.alpha[n] = y;
        out.map.alpha[n + 1] = n + 2;
        out.map.alpha[n + 2] = n + 1;
        out.map.alpha[n + 3] = z;
        out.map.alpha[z] = n + 3;
    } else {
        out.map.alpha[y] = n + 2;
        out.map.alpha[n + 2] = y;
        out.map.alpha[n] = n + 1;
        out.map.alpha[n + 1] = n;
        out.map.alpha[n + 3] = z;
        out.map.alpha[z] = n + 3;
    }
    out.crossings.push_back(n);
    std::sort(out.crossings.begin(), out.crossings.end());
    if (surface_invariants(out.map).genus != 0)
        throw std::logic_error("kink insertion left the sphere");
    return out;
}

} // namespace ribbonlift
