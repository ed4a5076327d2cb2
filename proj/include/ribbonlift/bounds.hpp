#pragma once

#include <string>
#include <vector>

#include "ribbonlift/planarity.hpp"
#include "ribbonlift/ribbon_graph.hpp"

namespace ribbonlift {

// Edge-count bound from Euler's formula on the simple support:
// max(0, E - 3V + 6) for V >= 3, else 0.
int euler_crossing_lower_bound(const AbstractMultigraph& g);

struct CrossingNumberResult {
    int value = 0;
    bool exact = false;        // false: value is only a lower bound
    long long planarity_tests = 0;
};

// Decides crs(G) for small graphs by planarization search: for k from the
// Euler bound upward, choose k crossing events as pairs of non-adjacent
// distinct edges (no pair twice — optimal drawings never cross a pair twice
// nor adjacent edges), order the events along each edge, insert 4-valent
// vertices and test planarity.  Returns the least feasible k <= max_k, or
// the lower bound reached when max_k or the test budget is exhausted.
CrossingNumberResult crossing_number_small(const AbstractMultigraph& g,
                                           int max_k = 4,
                                           long long budget = 2000000);

// Shipped exact values: K5 -> 1, K6 -> 3, K7 -> 9.
int known_crossing_table(const std::string& name);

// "K<n>" when the simple support is a complete graph on n >= 3 nodes.
std::string recognize_complete(const AbstractMultigraph& g);

enum class Tristate { yes, no, unknown };

struct BoundsReport {
    int genus_bound = 0;
    int crossing_bound = 0;
    std::string crossing_provenance; // "table", "exact" or "euler"
    bool crossing_exact = false;
    int combined = 0;                // max of the two bounds
    Tristate equality_possible = Tristate::unknown; // crs(G) <= genus?
    std::vector<std::string> warnings;
};

// Lower bound for the self-intersection count of a graph spanning a
// genus-`genus` surface: the larger of the genus and the crossing number of
// the underlying graph.
BoundsReport self_intersection_lower_bound(int genus, const AbstractMultigraph& g);

// Whether crs(G) <= genus, the necessary condition for the two bounds to
// coincide; unknown when no exact crossing number is available and the
// lower bound does not already exceed the genus.
Tristate equality_necessary_condition(int genus, const AbstractMultigraph& g);

} // namespace ribbonlift
