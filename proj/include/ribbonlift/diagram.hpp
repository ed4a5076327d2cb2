#pragma once

#include <map>
#include <vector>

#include "ribbonlift/ribbon_graph.hpp"

namespace ribbonlift {

// A graph drawn in the sphere with transverse double points: a genus-0
// ribbon graph whose flagged vertices are the crossings.  A crossing has
// valence 4 and its two strands use opposite darts of its sigma-cycle:
// for cycle (d0 d1 d2 d3) the pairs are {d0,d2} and {d1,d3}.
struct SphericalDiagram {
    RibbonGraph map;
    std::vector<Dart> crossings; // least dart of each flagged vertex, sorted

    bool operator==(const SphericalDiagram&) const = default;
};

void validate_diagram(const SphericalDiagram& d);

int crossing_count(const SphericalDiagram& d);

bool is_crossing(const SphericalDiagram& d, Dart dart);

// The opposite dart at a 4-valent vertex: sigma applied twice.
Dart through_dart(const RibbonGraph& g, Dart d);

// One traversal of a crossing by a strand: the dart where the strand enters
// the crossing.  It leaves along through_dart(entry).
struct Passage {
    Dart crossing = 0; // least dart of the flagged vertex
    Dart entry = 0;    // map dart at the crossing, on the arrival side

    bool operator==(const Passage&) const = default;
};

// A crossing as seen from the extracted graph: the two edges involved (by
// lesser dart) and the 1-based positions along each edge's passage list,
// ordered so (edge_a, pos_a) <= (edge_b, pos_b).
struct CrossingRecord {
    Dart crossing = 0;
    Dart edge_a = 0;
    int pos_a = 0;
    Dart edge_b = 0;
    int pos_b = 0;
};

// The abstract immersed graph: darts at true vertices, renumbered
// order-preservingly, with alpha joining darts whose strands connect through
// zero or more crossings.  The rotation is induced by the sphere, so the
// extracted graph is a ribbon graph of possibly positive genus.
struct ImmersedGraph {
    RibbonGraph theta;
    std::vector<Dart> theta_to_map;            // map dart of each theta dart
    std::vector<Dart> map_to_theta;            // -1 for darts at crossings
    std::map<Dart, std::vector<Passage>> edge_paths; // key: lesser theta dart
    std::vector<CrossingRecord> crossings;
};

ImmersedGraph extract_theta(const SphericalDiagram& d);

// Clears every flag: crossings become genuine 4-valent vertices of a
// genus-0 ribbon graph.
RibbonGraph resolve_all_crossings(const SphericalDiagram& d);

struct SpliceResult {
    RibbonGraph graph;
    std::vector<Dart> old_to_new;  // -1 for removed darts
    std::vector<Dart> crossings;   // remaining flags, remapped
};

// Deletes a 4-valent vertex and joins the two strands running through it:
// the edge entering at position 0 is spliced with the one at position 2,
// likewise positions 1 and 3.  Loops at the vertex are followed through it
// until an external dart is found.  Raises genus by at most one.
SpliceResult restore_crossing(const RibbonGraph& h, Dart vertex_dart,
                              const std::vector<Dart>& remaining_flags);

// Restores every crossing (canonical order); the result equals
// extract_theta(d).theta.
RibbonGraph restore_all(const SphericalDiagram& d);

// Removes same-edge crossings by iterated kink deletion: a crossing is an
// empty kink when one of its corners bounds a length-1 face, and deleting it
// is the restore splice (planarity is preserved).  Crossings whose two
// strands share an edge but never become empty kinks cannot be handled by
// this local surgery and are reported as an error.
SphericalDiagram remove_edge_self_crossings(const SphericalDiagram& d);

// Splits the edge containing dart y and ties a small loop into it, adding
// one crossing where the edge re-crosses itself.  The mirrored form winds
// the loop the other way.  Used to build test diagrams; genus stays 0.
SphericalDiagram insert_kink(const SphericalDiagram& d, Dart y, bool mirrored = false);

} // namespace ribbonlift
