#include "ribbonlift/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ribbonlift {

namespace {

bool is_permutation_of_range(const std::vector<Dart>& p) {
    const int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    for (Dart d : p) {
        if (d < 0 || d >= n || seen[d]) return false;
        seen[d] = 1;
    }
    return true;
}

} // namespace

void validate_ribbon_graph(const RibbonGraph& g, bool allow_low_valence) {
    const int n = g.dart_count();
    if (n == 0) fail(ErrorCode::EmptyGraph, "graph has no darts");
    if (static_cast<int>(g.alpha.size()) != n)
        fail(ErrorCode::NotPermutation, "sigma and alpha act on different dart sets");
    if (!is_permutation_of_range(g.sigma))
        fail(ErrorCode::NotPermutation, "sigma is not a permutation of 0.." + std::to_string(n - 1));
    if (!is_permutation_of_range(g.alpha))
        fail(ErrorCode::NotPermutation, "alpha is not a permutation of 0.." + std::to_string(n - 1));
    for (Dart d = 0; d < n; ++d) {
        if (g.alpha[d] == d)
            fail(ErrorCode::NotInvolution, "alpha fixes dart " + std::to_string(d));
        if (g.alpha[g.alpha[d]] != d)
            fail(ErrorCode::NotInvolution, "alpha is not self-inverse at dart " + std::to_string(d));
    }
    if (!allow_low_valence) {
        for (const auto& cycle : permutation_cycles(g.sigma)) {
            if (cycle.size() < 3)
                fail(ErrorCode::LowValence,
                     "vertex at dart " + std::to_string(cycle.front()) +
                         " has valence " + std::to_string(cycle.size()));
        }
    }
    for (const auto& [dart, colour] : g.colours) {
        (void)colour;
        if (dart < 0 || dart >= n)
            fail(ErrorCode::UnknownVertex, "colour refers to unknown dart " + std::to_string(dart));
    }
}

std::vector<Dart> face_permutation(const RibbonGraph& g) {
    std::vector<Dart> f(g.sigma.size());
    for (Dart d = 0; d < g.dart_count(); ++d) f[d] = g.sigma[g.alpha[d]];
    return f;
}

std::vector<std::vector<Dart>> permutation_cycles(const std::vector<Dart>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Dart>> cycles;
    // Scanning in increasing order starts every cycle at its least element
    // and lists cycles by least element: the canonical form.
    for (Dart start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<Dart> cycle;
        Dart d = start;
        while (!seen[d]) {
            seen[d] = 1;
            cycle.push_back(d);
            d = perm[d];
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

std::vector<std::vector<Dart>> orbits(const RibbonGraph& g, OrbitKind kind) {
    switch (kind) {
    case OrbitKind::vertex: return permutation_cycles(g.sigma);
    case OrbitKind::edge: return permutation_cycles(g.alpha);
    case OrbitKind::face: return permutation_cycles(face_permutation(g));
    }
    return {};
}

std::vector<Dart> vertex_cycle_of(const RibbonGraph& g, Dart d) {
    if (d < 0 || d >= g.dart_count())
        fail(ErrorCode::UnknownVertex, "no dart " + std::to_string(d));
    std::vector<Dart> cycle;
    Dart least = d;
    Dart cur = d;
    do {
        cycle.push_back(cur);
        least = std::min(least, cur);
        cur = g.sigma[cur];
    } while (cur != d);
    auto at = std::find(cycle.begin(), cycle.end(), least);
    std::rotate(cycle.begin(), at, cycle.end());
    return cycle;
}

Dart vertex_rep(const RibbonGraph& g, Dart d) {
    return vertex_cycle_of(g, d).front();
}

bool is_connected(const RibbonGraph& g) {
    const int n = g.dart_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<Dart> stack = {0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
        Dart d = stack.back();
        stack.pop_back();
        ++count;
        for (Dart next : {g.sigma[d], g.alpha[d]}) {
            if (!seen[next]) {
                seen[next] = 1;
                stack.push_back(next);
            }
        }
    }
    return count == n;
}

SurfaceInvariants surface_invariants(const RibbonGraph& g) {
    if (!is_connected(g))
        fail(ErrorCode::Disconnected,
             "genus is defined per connected surface; split components first");
    SurfaceInvariants inv;
    inv.num_vertices = static_cast<int>(permutation_cycles(g.sigma).size());
    inv.num_edges = g.dart_count() / 2;
    inv.num_faces = static_cast<int>(permutation_cycles(face_permutation(g)).size());
    inv.euler_characteristic = inv.num_vertices - inv.num_edges + inv.num_faces;
    inv.genus = (2 - inv.euler_characteristic) / 2;
    return inv;
}

std::vector<GraphComponent> connected_components(const RibbonGraph& g) {
    const int n = g.dart_count();
    std::vector<int> label(n, -1);
    int num = 0;
    for (Dart start = 0; start < n; ++start) {
        if (label[start] != -1) continue;
        std::vector<Dart> stack = {start};
        label[start] = num;
        while (!stack.empty()) {
            Dart d = stack.back();
            stack.pop_back();
            for (Dart next : {g.sigma[d], g.alpha[d]}) {
                if (label[next] == -1) {
                    label[next] = num;
                    stack.push_back(next);
                }
            }
        }
        ++num;
    }

    std::vector<GraphComponent> out(num);
    std::vector<Dart> new_id(n, -1);
    for (Dart d = 0; d < n; ++d) {
        auto& comp = out[label[d]];
        new_id[d] = static_cast<Dart>(comp.original_darts.size());
        comp.original_darts.push_back(d);
    }
    for (int c = 0; c < num; ++c) {
        auto& comp = out[c];
        comp.graph.sigma.resize(comp.original_darts.size());
        comp.graph.alpha.resize(comp.original_darts.size());
    }
    for (Dart d = 0; d < n; ++d) {
        auto& comp = out[label[d]];
        comp.graph.sigma[new_id[d]] = new_id[g.sigma[d]];
        comp.graph.alpha[new_id[d]] = new_id[g.alpha[d]];
    }
    for (const auto& [dart, colour] : g.colours) {
        if (dart >= 0 && dart < n)
            out[label[dart]].graph.colours[new_id[dart]] = colour;
    }
    return out;
}

UnderlyingGraph underlying_abstract_graph(const RibbonGraph& g) {
    UnderlyingGraph out;
    std::vector<int> node_of(g.dart_count(), -1);
    for (const auto& cycle : permutation_cycles(g.sigma)) {
        for (Dart d : cycle) node_of[d] = out.graph.node_count;
        out.node_rep.push_back(cycle.front());
        ++out.graph.node_count;
    }
    for (const auto& pair : permutation_cycles(g.alpha)) {
        int u = node_of[pair[0]];
        int v = node_of[pair[1]];
        out.graph.links.emplace_back(std::min(u, v), std::max(u, v));
        out.link_rep.push_back(pair.front());
    }
    return out;
}

RibbonGraph reverse_vertex_rotation(const RibbonGraph& g, Dart vertex_dart) {
    auto cycle = vertex_cycle_of(g, vertex_dart);
    RibbonGraph out = g;
    const int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i)
        out.sigma[cycle[(i + 1) % k]] = cycle[i];
    return out;
}

RibbonGraph mirror_rotation(const RibbonGraph& g) {
    RibbonGraph out = g;
    for (Dart d = 0; d < g.dart_count(); ++d) out.sigma[g.sigma[d]] = d;
    return out;
}

} // namespace ribbonlift
