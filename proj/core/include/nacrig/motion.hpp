#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nacrig/graph.hpp"
#include "nacrig/nac.hpp"

namespace nacrig {

struct Vec2 {
    double x = 0;
    double y = 0;
    bool operator==(const Vec2&) const = default;
};

struct Vec3 {
    double x = 0;
    double y = 0;
    double z = 0;
};

// Red/blue component coordinates of every vertex: v -> (i, j) with
// v in R_i and B_j (0-based; the grid placement uses i+1, j+1). Carries the
// graph and generating coloring so motions can be built from it alone.
struct GridAssignment {
    Graph graph;
    EdgeColoring coloring;
    VertexPartition red_components;
    VertexPartition blue_components;
    std::vector<int> red_index;   // per vertex
    std::vector<int> blue_index;  // per vertex

    int red_count() const { return static_cast<int>(red_components.blocks.size()); }
    int blue_count() const { return static_cast<int>(blue_components.blocks.size()); }
};

// Edge lengths, parallel to Graph::edges(); all strictly positive.
struct Labeling {
    std::vector<double> lengths;
    double at(const Graph& g, Edge e) const;
};

struct MotionFrame {
    double alpha = 0;
    std::vector<Vec3> positions;  // z = 0 in dimension 2
};

enum class Construction { grid, zigzag, threeD, external };

// A labeling together with sampled compatible realizations.
struct Motion {
    int dimension = 2;
    Graph graph;
    Labeling labeling;
    std::vector<MotionFrame> frames;
    Construction construction = Construction::external;
};

// Vector families for the slanted-grid generalization; each family must be
// pairwise distinct. a is indexed by blue component, b by red component.
struct ZigzagData {
    std::vector<Vec2> a;
    std::vector<Vec2> b;
};

GridAssignment component_grid(const Graph& g, const NacColoring& coloring);

std::vector<double> uniform_alphas(int frames);

// Placement (i+1)*(1,0) + (j+1)*(cos a, sin a); red edges get length
// |j_u - j_v|, blue edges |i_u - i_v|.
Motion grid_motion(const GridAssignment& ga, const std::vector<double>& alphas);

// Placement Rot(a)*a_j + b_i with the clockwise rotation matrix; red edges
// get ||a_j - a_l||, blue edges ||b_i - b_k||.
Motion zigzag_motion(const GridAssignment& ga, const ZigzagData& z,
                     const std::vector<double>& alphas);

// Deterministic generic-ish default: a_j = (eps*j^2, j), b_i = (i, eps*i^2)
// with eps = 1/8 and 1-based component indices.
ZigzagData default_zigzag(const GridAssignment& ga);

// True iff no grid cell R_i ∩ B_j holds two vertices; zigzag realizations
// are then injective for generic vector data.
bool injective_flex(const GridAssignment& ga);

// Classifies each edge from its per-frame direction: constant direction =
// blue, rotating in lockstep with alpha = red. Needs >= 8 frames in 2D.
EdgeColoring recover_coloring(const Motion& motion);

// Spatial motion with rho(u) = (1,0,0), rho(v) = (cos a, 1, sin a) and all
// other vertices pinned to distinct points of the y-axis. Requires uv to be
// a non-edge.
Motion flex3d(const Graph& g, int u, int v, const std::vector<double>& alphas);

// Smallest non-adjacent vertex pair, if the graph is not complete.
std::optional<std::pair<int, int>> first_nonadjacent_pair(const Graph& g);

// Normalizes a 2D frame like the fixed-edge convention: the first edge's
// tail goes to the origin and the edge itself to the positive x-axis.
MotionFrame pin_frame(const Graph& g, const MotionFrame& frame);

// Largest over all vertex pairs of (max - min) distance across frames,
// restricted to non-adjacent pairs; 0 if none vary.
double max_nonedge_variation(const Motion& motion);

}  // namespace nacrig
