#pragma once

#include "ribbonlift/ribbon_graph.hpp"

namespace ribbonlift {

// One vertex of valence 4g carrying g handle pairs: sigma is the single
// cycle (0 1 ... 4g-1) and alpha pairs 4k with 4k+2 and 4k+1 with 4k+3, the
// interleaved pattern a b a' b' per handle.  The complement is one disk, so
// the result has exactly one face and genus g.
RibbonGraph canonical_bouquet(int genus_target);

// Inserts num_loops loops at the vertex containing insertion_position, the
// 2*num_loops new darts placed consecutively right after insertion_position
// in its sigma-cycle, each loop an adjacent pair (x x+1) with alpha(x)=x+1.
RibbonGraph wedge_at_vertex(const RibbonGraph& g, Dart insertion_position,
                            int num_loops);

// Expands every vertex of valence k > 3 into a k-gon of trivalent vertices,
// keeping the original darts attached in sigma-order around the polygon.
// Genus is preserved.
RibbonGraph make_trivalent(const RibbonGraph& g);

// Reads a two-coloured planar rotation system: black vertices keep their
// counterclockwise cycle, white vertices get the reversed one.  Input must
// have genus 0 and a colour for every vertex.
RibbonGraph rotation_from_colours(const RibbonGraph& planar);

AbstractMultigraph complete_graph(int n);
AbstractMultigraph complete_bipartite(int a, int b);
AbstractMultigraph cube_graph();

struct MinGenusResult {
    int genus = 0;
    bool exact = false;     // false when the search budget cut enumeration short
    long long examined = 0; // rotation systems evaluated
};

// Minimum genus over all rotation systems of G, by exhaustive enumeration of
// (valence-1)! cyclic orders per vertex.  When the full product exceeds the
// budget, the partial minimum is returned with exact=false (an upper bound).
MinGenusResult min_genus_over_rotations(const AbstractMultigraph& g,
                                        long long budget = 1000000,
                                        bool parallel = false);

} // namespace ribbonlift
