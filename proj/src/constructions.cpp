#include "ribbonlift/constructions.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

namespace ribbonlift {

RibbonGraph canonical_bouquet(int genus_target) {
    if (genus_target < 1)
        fail(ErrorCode::InvalidGenus,
             "the bouquet needs valence >= 3; genus " + std::to_string(genus_target) +
                 " is not constructible");
    const int n = 4 * genus_target;
    RibbonGraph g;
    g.sigma.resize(n);
    g.alpha.resize(n);
    for (Dart d = 0; d < n; ++d) g.sigma[d] = (d + 1) % n;
    // Interleaved handle pairs: loop a occupies slots 4k and 4k+2, loop b
    // slots 4k+1 and 4k+3, so each pair a b a' b' contributes one handle.
    for (int k = 0; k < genus_target; ++k) {
        g.alpha[4 * k] = 4 * k + 2;
        g.alpha[4 * k + 2] = 4 * k;
        g.alpha[4 * k + 1] = 4 * k + 3;
        g.alpha[4 * k + 3] = 4 * k + 1;
    }
    return g;
}

RibbonGraph wedge_at_vertex(const RibbonGraph& g, Dart insertion_position,
                            int num_loops) {
    if (insertion_position < 0 || insertion_position >= g.dart_count())
        fail(ErrorCode::UnknownVertex,
             "no dart " + std::to_string(insertion_position));
    if (num_loops == 0) return g;
    const int n = g.dart_count();
    RibbonGraph out = g;
    out.sigma.resize(n + 2 * num_loops);
    out.alpha.resize(n + 2 * num_loops);
    Dart after = g.sigma[insertion_position];
    out.sigma[insertion_position] = n;
    for (int i = 0; i < 2 * num_loops; ++i)
        out.sigma[n + i] = (i + 1 < 2 * num_loops) ? n + i + 1 : after;
    for (int i = 0; i < num_loops; ++i) {
        out.alpha[n + 2 * i] = n + 2 * i + 1;
        out.alpha[n + 2 * i + 1] = n + 2 * i;
    }
    return out;
}

RibbonGraph make_trivalent(const RibbonGraph& g) {
    validate_ribbon_graph(g);
    if (!is_connected(g))
        fail(ErrorCode::Disconnected, "expansion expects a connected graph");

    RibbonGraph out;
    out.sigma = g.sigma;
    out.alpha = g.alpha;
    for (const auto& cycle : permutation_cycles(g.sigma)) {
        const int k = static_cast<int>(cycle.size());
        if (k <= 3) continue;
        // Replace the vertex by a k-gon: original dart d_i keeps its corner
        // vertex (d_i p_i q_i), and polygon edges pair p_i with q_{i+1}.
        const Dart base = static_cast<Dart>(out.sigma.size());
        out.sigma.resize(base + 2 * k);
        out.alpha.resize(base + 2 * k);
        for (int i = 0; i < k; ++i) {
            const Dart p = base + 2 * i;
            const Dart q = base + 2 * i + 1;
            out.sigma[cycle[i]] = p;
            out.sigma[p] = q;
            out.sigma[q] = cycle[i];
            const Dart q_next = base + 2 * ((i + 1) % k) + 1;
            out.alpha[p] = q_next;
            out.alpha[q_next] = p;
        }
    }
    return out;
}

RibbonGraph rotation_from_colours(const RibbonGraph& planar) {
    validate_ribbon_graph(planar);
    if (surface_invariants(planar).genus != 0)
        fail(ErrorCode::NotPlanar, "colour rotation starts from a genus-0 system");
    RibbonGraph out = planar;
    for (const auto& cycle : permutation_cycles(planar.sigma)) {
        auto it = planar.colours.find(cycle.front());
        if (it == planar.colours.end())
            fail(ErrorCode::MissingColour,
                 "vertex at dart " + std::to_string(cycle.front()) + " has no colour");
        if (it->second == VertexColour::white) {
            const int k = static_cast<int>(cycle.size());
            for (int i = 0; i < k; ++i)
                out.sigma[cycle[(i + 1) % k]] = cycle[i];
        }
    }
    return out;
}

AbstractMultigraph complete_graph(int n) {
    AbstractMultigraph g;
    g.node_count = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.links.emplace_back(i, j);
    return g;
}

AbstractMultigraph complete_bipartite(int a, int b) {
    AbstractMultigraph g;
    g.node_count = a + b;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.links.emplace_back(i, a + j);
    return g;
}

AbstractMultigraph cube_graph() {
    AbstractMultigraph g;
    g.node_count = 8;
    for (int i = 0; i < 8; ++i)
        for (int bit : {1, 2, 4})
            if (i < (i ^ bit)) g.links.emplace_back(i, i ^ bit);
    return g;
}

namespace {

// Darts of an abstract multigraph: link i owns darts 2i and 2i+1, the even
// one at the link's first endpoint.
std::vector<std::vector<Dart>> node_darts(const AbstractMultigraph& g) {
    std::vector<std::vector<Dart>> darts(g.node_count);
    for (int i = 0; i < static_cast<int>(g.links.size()); ++i) {
        darts[g.links[i].first].push_back(2 * i);
        darts[g.links[i].second].push_back(2 * i + 1);
    }
    return darts;
}

bool abstract_connected(const AbstractMultigraph& g) {
    if (g.node_count == 0) return true;
    std::vector<std::vector<int>> adj(g.node_count);
    for (const auto& [u, v] : g.links) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(g.node_count, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++count;
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
    }
    return count == g.node_count;
}

int face_count(const std::vector<Dart>& sigma, const std::vector<Dart>& alpha,
               std::vector<int>& stamp, int& version) {
    ++version;
    int faces = 0;
    const int n = static_cast<int>(sigma.size());
    for (Dart start = 0; start < n; ++start) {
        if (stamp[start] == version) continue;
        ++faces;
        Dart d = start;
        while (stamp[d] != version) {
            stamp[d] = version;
            d = sigma[alpha[d]];
        }
    }
    return faces;
}

// Enumeration state: the rotation at each node is its least dart followed by
// a permutation of the rest, so each cyclic order appears exactly once.
struct RotationOdometer {
    std::vector<std::vector<Dart>> tails;

    explicit RotationOdometer(const std::vector<std::vector<Dart>>& darts) {
        for (const auto& list : darts)
            tails.emplace_back(list.begin() + 1, list.end());
    }

    bool advance() {
        for (auto& tail : tails) {
            if (std::next_permutation(tail.begin(), tail.end())) return true;
        }
        return false;
    }
};

void write_sigma(const std::vector<std::vector<Dart>>& darts,
                 const RotationOdometer& odo, std::vector<Dart>& sigma) {
    for (size_t v = 0; v < darts.size(); ++v) {
        const Dart first = darts[v][0];
        const auto& tail = odo.tails[v];
        Dart prev = first;
        for (Dart d : tail) {
            sigma[prev] = d;
            prev = d;
        }
        sigma[prev] = first;
    }
}

long long factorial_capped(int k, long long cap) {
    long long r = 1;
    for (int i = 2; i <= k; ++i) {
        if (r > cap / i) return cap + 1;
        r *= i;
    }
    return r;
}

} // namespace

MinGenusResult min_genus_over_rotations(const AbstractMultigraph& g,
                                        long long budget, bool parallel) {
    if (!abstract_connected(g))
        fail(ErrorCode::Disconnected, "minimum genus expects a connected graph");
    auto darts = node_darts(g);
    for (size_t v = 0; v < darts.size(); ++v) {
        std::sort(darts[v].begin(), darts[v].end());
        if (darts[v].size() < 3)
            fail(ErrorCode::LowValence,
                 "node " + std::to_string(v) + " has valence " +
                     std::to_string(darts[v].size()));
    }

    const int n = 2 * static_cast<int>(g.links.size());
    const int num_edges = static_cast<int>(g.links.size());
    const int num_vertices = g.node_count;
    std::vector<Dart> alpha(n);
    for (int i = 0; i < num_edges; ++i) {
        alpha[2 * i] = 2 * i + 1;
        alpha[2 * i + 1] = 2 * i;
    }

    long long total = 1;
    for (const auto& list : darts) {
        long long f = factorial_capped(static_cast<int>(list.size()) - 1, budget);
        total = (total > budget / std::max(f, 1LL)) ? budget + 1 : total * f;
        if (total > budget) break;
    }
    const bool exact = total <= budget;

    auto genus_of = [&](const std::vector<Dart>& sigma, std::vector<int>& stamp,
                        int& version) {
        const int faces = face_count(sigma, alpha, stamp, version);
        return (2 - (num_vertices - num_edges + faces)) / 2;
    };

    if (exact && parallel && darts[0].size() > 3) {
        // Deterministic split: each worker owns a fixed set of first-node
        // tail permutations and scans the full remainder; min() commutes.
        std::vector<std::vector<Dart>> prefixes;
        std::vector<Dart> tail0(darts[0].begin() + 1, darts[0].end());
        do prefixes.push_back(tail0);
        while (std::next_permutation(tail0.begin(), tail0.end()));

        const unsigned workers =
            std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                               static_cast<unsigned>(prefixes.size()));
        std::atomic<size_t> next_prefix{0};
        std::vector<int> worker_min(workers, 1 << 20);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                std::vector<Dart> sigma(n);
                std::vector<int> stamp(n, 0);
                int version = 0;
                for (size_t p = next_prefix.fetch_add(1); p < prefixes.size();
                     p = next_prefix.fetch_add(1)) {
                    RotationOdometer odo(darts);
                    odo.tails[0] = prefixes[p];
                    bool more = true;
                    while (more) {
                        write_sigma(darts, odo, sigma);
                        worker_min[w] = std::min(worker_min[w],
                                                 genus_of(sigma, stamp, version));
                        // Hold the first node fixed; advance the others.
                        more = false;
                        for (size_t v = 1; v < odo.tails.size(); ++v) {
                            if (std::next_permutation(odo.tails[v].begin(),
                                                      odo.tails[v].end())) {
                                more = true;
                                break;
                            }
                        }
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        MinGenusResult result;
        result.genus = *std::min_element(worker_min.begin(), worker_min.end());
        result.exact = true;
        result.examined = total;
        return result;
    }

    RotationOdometer odo(darts);
    std::vector<Dart> sigma(n);
    std::vector<int> stamp(n, 0);
    int version = 0;
    int best = 1 << 20;
    long long examined = 0;
    bool more = true;
    while (more && examined < budget) {
        write_sigma(darts, odo, sigma);
        best = std::min(best, genus_of(sigma, stamp, version));
        ++examined;
        more = odo.advance();
    }

    MinGenusResult result;
    result.genus = best;
    result.exact = !more || exact;
    result.examined = examined;
    return result;
}

} // namespace ribbonlift
