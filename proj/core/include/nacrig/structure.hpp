#pragma once

#include <optional>
#include <vector>

#include "nacrig/graph.hpp"
#include "nacrig/nac.hpp"

namespace nacrig {

// Partition of the edge set under the reflexive-transitive closure of
// "shares a triangle". A connecting edge is a singleton class lying in no
// triangle.
struct DeltaClassPartition {
    struct Class {
        std::vector<Edge> edges;   // sorted
        std::vector<int> support;  // sorted endpoint set
    };
    std::vector<Class> classes;      // sorted by smallest edge
    std::vector<int> class_of_edge;  // indexed like Graph::edges()

    bool is_connecting(const Graph& g, Edge e) const;
    std::vector<Edge> connecting_edges(const Graph& g) const;
};

DeltaClassPartition delta_classes(const Graph& g);

// Index of a class whose support covers every vertex, if any. Such a class
// is a spanning triangle-connected subgraph, which rules out NAC-colorings.
std::optional<int> spanning_delta_check(const Graph& g);
std::optional<int> spanning_delta_check(const Graph& g, const DeltaClassPartition& delta);

// |E| <= n(n-1)/2 - (n-2); false certifies that no flexible labeling exists.
bool edge_bound_check(const Graph& g);

inline constexpr int kDefaultMaxCutSize = 4;

// Smallest independent separating vertex set of size <= max_size, searched
// by increasing size then lexicographically; nullopt if none in bound.
std::optional<std::vector<int>> find_independent_cut(const Graph& g,
                                                     int max_size = kDefaultMaxCutSize);

// Red = edges touching the component of g - cut that contains the smallest
// remaining vertex, blue = rest. The cut must be independent and separating.
NacColoring coloring_from_independent_cut(const Graph& g, const std::vector<int>& cut);

// First vertex lying in no triangle, if any.
std::optional<int> vertex_without_triangle(const Graph& g);

// Builds the independent cut behind a triangle-free vertex: its
// neighborhood, or the vertex itself when the graph is a star centered
// there. The result feeds coloring_from_independent_cut.
std::vector<int> cut_from_triangle_free_vertex(const Graph& g, int v);

// Inclusion-minimal separating set of connecting edges whose induced
// subgraph has no path with four edges; nullopt when the connecting edges
// do not separate or the minimized set still has such a path.
std::optional<std::vector<Edge>> find_connecting_edge_cut(const Graph& g);

// Red = the cut, blue = rest. The cut must satisfy
// find_connecting_edge_cut's postcondition (validated).
NacColoring coloring_from_edge_cut(const Graph& g, const std::vector<Edge>& cut);

// Aggregated structural evidence for one graph.
struct StructureReport {
    DeltaClassPartition delta_classes;
    std::optional<int> spanned_by;
    bool edge_bound_ok = true;
    std::optional<std::vector<int>> independent_cut;
    std::optional<int> triangle_free_vertex;
    std::optional<std::vector<Edge>> connecting_edge_cut;
    int max_cut_size = kDefaultMaxCutSize;  // bound used by the cut search
};

StructureReport build_structure_report(const Graph& g, int max_cut_size = kDefaultMaxCutSize);

}  // namespace nacrig
