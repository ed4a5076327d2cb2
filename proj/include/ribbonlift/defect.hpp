#pragma once

#include <string>
#include <vector>

#include "ribbonlift/ribbon_graph.hpp"

namespace ribbonlift {

// Number of vertices at which two rotation systems on the same darts with
// the same edge pairing disagree as cyclic orders.
int defect_against(const RibbonGraph& prescribed, const RibbonGraph& embedding);

// A genus-0 rotation system for the underlying graph of `prescribed`,
// remapped onto prescribed's own darts so the two can be compared
// vertex-by-vertex.  Throws NotPlanar when no embedding exists.
RibbonGraph planar_embedding_on(const RibbonGraph& prescribed);

struct DefectReport {
    int delta_plus = 0;  // against the computed embedding
    int delta_minus = 0; // against its mirror
    int minimum = 0;
    bool exact = false;  // true only for 3-connected underlying graphs
    std::vector<std::string> warnings;
};

// Minimal defect of a planar embedding of the prescribed rotation system.
// A 3-connected planar graph has exactly two embeddings (a rotation and its
// mirror), so the minimum over those two is exact; otherwise the value is
// only an upper bound and the report says so.
DefectReport min_defect(const RibbonGraph& prescribed);

} // namespace ribbonlift
