#pragma once

#include <string>
#include <vector>

#include "ribbonlift/ribbon_graph.hpp"

namespace ribbonlift {

// Loops and parallel links removed; warnings describe what was dropped.
struct SimpleSupport {
    AbstractMultigraph graph;
    std::vector<std::string> warnings;
};

SimpleSupport simple_support(const AbstractMultigraph& g);

bool is_planar(const AbstractMultigraph& g);

// A genus-0 rotation system for G on darts 2i, 2i+1 per link i (2i at the
// first endpoint).  Parallel links are nested alongside their sibling and
// loops sit in a face at their vertex, so planarity survives reinsertion.
// Throws NotPlanar with a Kuratowski edge list as certificate.
RibbonGraph planarity_and_rotation(const AbstractMultigraph& g);

// Brute-force vertex-pair deletion on the simple support; graphs with fewer
// than 4 nodes are not 3-connected.
bool is_three_connected(const AbstractMultigraph& g);

} // namespace ribbonlift
