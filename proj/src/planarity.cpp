#include "ribbonlift/planarity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

namespace ribbonlift {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const AbstractMultigraph& g) {
    BoostGraph bg(g.node_count);
    for (const auto& [u, v] : g.links) boost::add_edge(u, v, bg);
    int index = 0;
    for (auto [ei, ee] = boost::edges(bg); ei != ee; ++ei)
        boost::put(boost::edge_index, bg, *ei, index++);
    return bg;
}

bool nodes_connected(const AbstractMultigraph& g) {
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

} // namespace

SimpleSupport simple_support(const AbstractMultigraph& g) {
    SimpleSupport out;
    out.graph.node_count = g.node_count;
    std::set<std::pair<int, int>> seen;
    int loops = 0;
    int parallels = 0;
    for (const auto& link : g.links) {
        if (link.first == link.second) {
            ++loops;
            continue;
        }
        if (!seen.insert(link).second) {
            ++parallels;
            continue;
        }
        out.graph.links.push_back(link);
    }
    if (loops > 0)
        out.warnings.push_back("dropped " + std::to_string(loops) +
                               " loop(s) from the simple support");
    if (parallels > 0)
        out.warnings.push_back("dropped " + std::to_string(parallels) +
                               " parallel link(s) from the simple support");
    return out;
}

bool is_planar(const AbstractMultigraph& g) {
    auto support = simple_support(g);
    BoostGraph bg = to_boost(support.graph);
    return boost::boyer_myrvold_planarity_test(bg);
}

RibbonGraph planarity_and_rotation(const AbstractMultigraph& g) {
    if (!nodes_connected(g))
        fail(ErrorCode::Disconnected, "planar embedding expects a connected graph");

    // Group parallel links; the least link of each endpoint pair stands in
    // for the bundle during the planarity test.
    std::map<std::pair<int, int>, std::vector<int>> bundles;
    std::vector<std::vector<int>> loops_at(g.node_count);
    for (int i = 0; i < static_cast<int>(g.links.size()); ++i) {
        const auto& link = g.links[i];
        if (link.first == link.second)
            loops_at[link.first].push_back(i);
        else
            bundles[link].push_back(i);
    }

    AbstractMultigraph support;
    support.node_count = g.node_count;
    std::vector<const std::vector<int>*> bundle_of_support;
    for (const auto& [ends, members] : bundles) {
        support.links.push_back(ends);
        bundle_of_support.push_back(&members);
    }

    BoostGraph bg = to_boost(support);
    std::vector<std::vector<BoostEdge>> embedding(support.node_count);
    std::vector<BoostEdge> kuratowski;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(),
                                              boost::get(boost::vertex_index, bg)),
        boost::boyer_myrvold_params::kuratowski_subgraph =
            std::back_inserter(kuratowski));
    if (!planar) {
        std::ostringstream cert;
        cert << "not planar; obstruction edges:";
        for (const auto& e : kuratowski)
            cert << ' ' << boost::source(e, bg) << '-' << boost::target(e, bg);
        fail(ErrorCode::NotPlanar, cert.str());
    }

    // Darts: link i owns 2i (at first endpoint) and 2i+1.  Reading the
    // embedding order at each node, every support slot expands to its whole
    // bundle: ascending at the first endpoint, first-then-descending at the
    // second, which nests the parallel bigons.  Loops go at the end of their
    // node's cycle as adjacent pairs, each bounding its own monogon.
    RibbonGraph out;
    out.sigma.assign(2 * g.links.size(), -1);
    out.alpha.assign(2 * g.links.size(), -1);
    for (int i = 0; i < static_cast<int>(g.links.size()); ++i) {
        out.alpha[2 * i] = 2 * i + 1;
        out.alpha[2 * i + 1] = 2 * i;
    }

    auto dart_at = [&](int link, int node) {
        return g.links[link].first == node ? 2 * link : 2 * link + 1;
    };

    for (int node = 0; node < g.node_count; ++node) {
        std::vector<Dart> order;
        for (const auto& e : embedding[node]) {
            const int slot = boost::get(boost::edge_index, bg, e);
            const auto& members = *bundle_of_support[slot];
            if (g.links[members.front()].first == node) {
                for (int link : members) order.push_back(dart_at(link, node));
            } else {
                order.push_back(dart_at(members.front(), node));
                for (auto it = members.rbegin(); it != members.rend() - 1; ++it)
                    order.push_back(dart_at(*it, node));
            }
        }
        for (int loop : loops_at[node]) {
            order.push_back(2 * loop);
            order.push_back(2 * loop + 1);
        }
        for (size_t i = 0; i < order.size(); ++i)
            out.sigma[order[i]] = order[(i + 1) % order.size()];
    }

    if (surface_invariants(out).genus != 0)
        throw std::logic_error("planar reinsertion produced positive genus");
    return out;
}

bool is_three_connected(const AbstractMultigraph& g) {
    auto support = simple_support(g).graph;
    if (support.node_count < 4) return false;
    if (!nodes_connected(support)) return false;

    for (int a = 0; a < support.node_count; ++a) {
        for (int b = a + 1; b < support.node_count; ++b) {
            std::vector<std::vector<int>> adj(support.node_count);
            for (const auto& [u, v] : support.links) {
                if (u == a || u == b || v == a || v == b) continue;
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
            int start = -1;
            int expected = 0;
            for (int v = 0; v < support.node_count; ++v) {
                if (v == a || v == b) continue;
                ++expected;
                if (start == -1) start = v;
            }
            std::vector<char> seen(support.node_count, 0);
            std::vector<int> stack = {start};
            seen[start] = 1;
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
            if (count != expected) return false;
        }
    }
    return true;
}

} // namespace ribbonlift
