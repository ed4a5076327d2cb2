#pragma once

#include <vector>

#include "ribbonlift/diagram.hpp"
#include "ribbonlift/seifert.hpp"

namespace ribbonlift {

// One boundary component of the ribbon neighbourhood of the extracted
// graph: a face orbit together with the double-occurrence word of the
// circle's self-intersections in the sphere and its Seifert filling.
struct BoundaryCircle {
    std::vector<Dart> face_cycle; // theta darts, canonical rotation
    ImmersedCircleWord word;
    SeifertData filling;
};

// Invariants of the branched covering assembled by gluing each circle's
// filling surface to the thickened graph.
struct CoveringResult {
    int chi_n = 0;     // V - E of the extracted graph
    std::vector<BoundaryCircle> circles;
    int chi_y = 0;     // chi_n + sum of (m_C - d_C)
    int genus_y = 0;   // 1 - chi_y / 2
    int branch_count = 0;               // sum of d_C, all branch points simple
    int degree = 0;                     // (chi_y + branch_count) / 2
    int points_between_circles = 0;     // crossing points joining two circles
};

// The boundary circles with their self-crossing words.  Each diagram
// crossing contributes four boundary intersection points; a point whose two
// strands lie on the same circle becomes a letter of that circle's word.
std::vector<BoundaryCircle> boundary_circles(const SphericalDiagram& d);

CoveringResult build_covering(const SphericalDiagram& d);

// branch_count == 2*degree + 2*genus_y - 2, as every branch point is simple.
bool check_riemann_hurwitz(const CoveringResult& r);

// Total ramification 2*degree + 2*genus - 2 forced by degree and genus.
int total_ramification(int degree, int genus);

// All partitions of the total into weights >= 1, witnessing that the same
// degree admits different branch-point counts.  Parts descending, partitions
// in lexicographically decreasing order.
std::vector<std::vector<int>> ramification_partitions(int degree, int genus);

// Euler-count identity for the preimage of a closed complementary disk:
// chi_S = degree_S - sum (e - 1) over interior ramification indices e >= 2.
bool check_region_formula(int chi_s, int degree_s,
                          const std::vector<int>& ramification);

// A disk covered with boundary degree 1 admits no interior branching.
bool region_forces_unbranched(int chi_s, int degree_s);

} // namespace ribbonlift
