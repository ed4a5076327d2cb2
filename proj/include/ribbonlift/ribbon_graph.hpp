#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ribbonlift/errors.hpp"

namespace ribbonlift {

using Dart = int;

enum class VertexColour { black, white };

// A ribbon graph (combinatorial map) on darts 0..n-1.
//
// sigma is the rotation: its cycles are the vertices, each cycle read
// counterclockwise in the surface.  alpha is a fixed-point-free involution
// pairing the two darts of every edge.  Faces are the cycles of the
// composite d -> sigma[alpha[d]].  Colours, when present, are keyed by the
// least dart of the vertex they refer to.
struct RibbonGraph {
    std::vector<Dart> sigma;
    std::vector<Dart> alpha;
    std::map<Dart, VertexColour> colours;

    int dart_count() const { return static_cast<int>(sigma.size()); }

    bool operator==(const RibbonGraph&) const = default;
};

// Checks the permutation/involution axioms.  Vertices of valence 1 or 2 are
// rejected unless allow_low_valence is set; intermediate objects (crossing
// pseudo-vertices, subdivision points) need the relaxation.
void validate_ribbon_graph(const RibbonGraph& g, bool allow_low_valence = false);

enum class OrbitKind { vertex, edge, face };

// The face permutation d -> sigma[alpha[d]].
std::vector<Dart> face_permutation(const RibbonGraph& g);

// Cycle decomposition in canonical form: every cycle rotated to start at its
// least element, cycles sorted by that element.
std::vector<std::vector<Dart>> permutation_cycles(const std::vector<Dart>& perm);

std::vector<std::vector<Dart>> orbits(const RibbonGraph& g, OrbitKind kind);

// The sigma-cycle through d, rotated to start at the orbit's least dart.
std::vector<Dart> vertex_cycle_of(const RibbonGraph& g, Dart d);

// Least dart of the sigma-orbit containing d (the canonical vertex name).
Dart vertex_rep(const RibbonGraph& g, Dart d);

struct SurfaceInvariants {
    int num_vertices = 0;
    int num_edges = 0;
    int num_faces = 0;
    int euler_characteristic = 0;
    int genus = 0;
};

// V, E, F and genus of the closed surface; requires a connected graph.
SurfaceInvariants surface_invariants(const RibbonGraph& g);

bool is_connected(const RibbonGraph& g);

struct GraphComponent {
    RibbonGraph graph;                // darts renumbered 0..k-1
    std::vector<Dart> original_darts; // original id of each renumbered dart
};

// Components under the group generated by sigma and alpha, each renumbered
// order-preservingly.  An empty graph yields an empty list.
std::vector<GraphComponent> connected_components(const RibbonGraph& g);

// Multigraph with anonymous nodes and links; loops and parallel links kept.
struct AbstractMultigraph {
    int node_count = 0;
    std::vector<std::pair<int, int>> links; // unordered endpoints, first <= second

    bool operator==(const AbstractMultigraph&) const = default;
};

struct UnderlyingGraph {
    AbstractMultigraph graph;
    std::vector<Dart> node_rep; // least dart of each vertex, index = node id
    std::vector<Dart> link_rep; // lesser dart of each edge, index = link id
};

// Forgets the rotation: one node per sigma-orbit, one link per alpha-orbit.
UnderlyingGraph underlying_abstract_graph(const RibbonGraph& g);

// Replaces the sigma-cycle containing vertex_dart by its inverse.
RibbonGraph reverse_vertex_rotation(const RibbonGraph& g, Dart vertex_dart);

// Every sigma-cycle inverted (the mirror rotation system).
RibbonGraph mirror_rotation(const RibbonGraph& g);

} // namespace ribbonlift
