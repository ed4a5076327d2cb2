#include "ribbonlift/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ribbonlift {

int euler_crossing_lower_bound(const AbstractMultigraph& g) {
    auto support = simple_support(g).graph;
    const int v = support.node_count;
    const int e = static_cast<int>(support.links.size());
    if (v < 3) return 0;
    return std::max(0, e - 3 * v + 6);
}

namespace {

// A planarization of the support with the chosen crossing events inserted
// as 4-valent nodes.  events[i] is a pair of edge ids; order_on_edge gives
// the sequence of event ids along each edge.
AbstractMultigraph planarize(const AbstractMultigraph& support,
                             const std::vector<std::pair<int, int>>& events,
                             const std::vector<std::vector<int>>& order_on_edge) {
    AbstractMultigraph out;
    out.node_count = support.node_count + static_cast<int>(events.size());
    for (int e = 0; e < static_cast<int>(support.links.size()); ++e) {
        int prev = support.links[e].first;
        for (int ev : order_on_edge[e]) {
            const int node = support.node_count + ev;
            out.links.emplace_back(std::min(prev, node), std::max(prev, node));
            prev = node;
        }
        const int last = support.links[e].second;
        out.links.emplace_back(std::min(prev, last), std::max(prev, last));
    }
    return out;
}

bool adjacent_edges(const AbstractMultigraph& g, int e, int f) {
    const auto& [a, b] = g.links[e];
    const auto& [c, d] = g.links[f];
    return a == c || a == d || b == c || b == d;
}

// Tries every assignment of the chosen events to the edges' traversal
// orders.  Events on distinct edge pairs commute; only edges carrying two
// or more events need their orderings permuted.
bool orders_admit_planar(const AbstractMultigraph& support,
                         const std::vector<std::pair<int, int>>& events,
                         long long& tests, long long budget, bool& budget_hit) {
    std::vector<std::vector<int>> on_edge(support.links.size());
    for (int ev = 0; ev < static_cast<int>(events.size()); ++ev) {
        on_edge[events[ev].first].push_back(ev);
        on_edge[events[ev].second].push_back(ev);
    }
    std::vector<int> busy;
    for (int e = 0; e < static_cast<int>(support.links.size()); ++e)
        if (on_edge[e].size() > 1) busy.push_back(e);

    std::vector<std::vector<int>> order = on_edge;
    for (;;) {
        if (tests >= budget) {
            budget_hit = true;
            return false;
        }
        ++tests;
        if (is_planar(planarize(support, events, order))) return true;
        // Advance the per-edge orderings odometer-style.
        size_t i = 0;
        for (; i < busy.size(); ++i) {
            auto& seq = order[busy[i]];
            if (std::next_permutation(seq.begin(), seq.end())) break;
        }
        if (i == busy.size()) return false;
    }
}

bool events_admit_planar(const AbstractMultigraph& support, int k,
                         const std::vector<std::pair<int, int>>& candidates,
                         long long& tests, long long budget, bool& budget_hit) {
    std::vector<int> choice(k);
    std::iota(choice.begin(), choice.end(), 0);
    if (k > static_cast<int>(candidates.size())) return false;
    for (;;) {
        std::vector<std::pair<int, int>> events;
        for (int c : choice) events.push_back(candidates[c]);
        if (orders_admit_planar(support, events, tests, budget, budget_hit))
            return true;
        if (budget_hit) return false;
        // Next k-combination of candidate indices.
        int i = k - 1;
        while (i >= 0 &&
               choice[i] == static_cast<int>(candidates.size()) - k + i)
            --i;
        if (i < 0) return false;
        ++choice[i];
        for (int j = i + 1; j < k; ++j) choice[j] = choice[j - 1] + 1;
    }
}

} // namespace

CrossingNumberResult crossing_number_small(const AbstractMultigraph& g,
                                           int max_k, long long budget) {
    auto support = simple_support(g).graph;
    CrossingNumberResult result;

    // Candidate crossing events: unordered pairs of distinct non-adjacent
    // edges.  In a crossing-minimal drawing no two edges cross twice and
    // adjacent edges do not cross, so drawings built from such event sets
    // cover all optimal drawings.
    std::vector<std::pair<int, int>> candidates;
    for (int e = 0; e < static_cast<int>(support.links.size()); ++e)
        for (int f = e + 1; f < static_cast<int>(support.links.size()); ++f)
            if (!adjacent_edges(support, e, f)) candidates.emplace_back(e, f);

    bool budget_hit = false;
    for (int k = euler_crossing_lower_bound(g); k <= max_k; ++k) {
        if (k == 0) {
            ++result.planarity_tests;
            if (is_planar(support)) {
                result.value = 0;
                result.exact = true;
                return result;
            }
            continue;
        }
        if (events_admit_planar(support, k, candidates, result.planarity_tests,
                                budget, budget_hit)) {
            result.value = k;
            result.exact = true;
            return result;
        }
        if (budget_hit) {
            result.value = k; // every smaller count is ruled out
            result.exact = false;
            return result;
        }
    }
    result.value = std::max(max_k + 1, euler_crossing_lower_bound(g));
    result.exact = false;
    return result;
}

int known_crossing_table(const std::string& name) {
    if (name == "K5") return 1;
    if (name == "K6") return 3;
    if (name == "K7") return 9;
    fail(ErrorCode::UnknownGraph, "no table entry for " + name);
}

std::string recognize_complete(const AbstractMultigraph& g) {
    auto support = simple_support(g).graph;
    const int n = support.node_count;
    if (n < 3) return "";
    if (static_cast<int>(support.links.size()) != n * (n - 1) / 2) return "";
    std::vector<int> degree(n, 0);
    for (const auto& [u, v] : support.links) {
        ++degree[u];
        ++degree[v];
    }
    for (int d : degree)
        if (d != n - 1) return "";
    return "K" + std::to_string(n);
}

BoundsReport self_intersection_lower_bound(int genus,
                                           const AbstractMultigraph& g) {
    BoundsReport report;
    report.genus_bound = genus;
    report.warnings = simple_support(g).warnings;

    const std::string name = recognize_complete(g);
    bool have_exact = false;
    int exact_value = 0;
    if (name == "K5" || name == "K6" || name == "K7") {
        exact_value = known_crossing_table(name);
        have_exact = true;
        report.crossing_provenance = "table";
    } else {
        auto searched = crossing_number_small(g);
        if (searched.exact) {
            exact_value = searched.value;
            have_exact = true;
            report.crossing_provenance = "exact";
        } else {
            report.crossing_bound =
                std::max(searched.value, euler_crossing_lower_bound(g));
            report.crossing_provenance = "euler";
            report.warnings.push_back("crossing number is a lower bound only");
        }
    }
    if (have_exact) {
        report.crossing_bound = exact_value;
        report.crossing_exact = true;
    }
    report.combined = std::max(report.genus_bound, report.crossing_bound);
    if (report.crossing_exact)
        report.equality_possible =
            report.crossing_bound <= genus ? Tristate::yes : Tristate::no;
    else
        report.equality_possible = report.crossing_bound > genus
                                       ? Tristate::no
                                       : Tristate::unknown;
    return report;
}

Tristate equality_necessary_condition(int genus, const AbstractMultigraph& g) {
    return self_intersection_lower_bound(genus, g).equality_possible;
}

} // namespace ribbonlift
