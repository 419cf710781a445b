#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nacrig {

// Undirected edge, stored with u < v. Vertices are dense 0-based indices;
// parsers own any mapping from external names.
struct Edge {
    int u = 0;
    int v = 0;
    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    auto operator<=>(const Edge&) const = default;
};

// Immutable simple undirected graph. Construction rejects self-loops and
// out-of-range endpoints and collapses duplicate edges.
class Graph {
public:
    static constexpr int kMaxVertices = 62;  // graph6 short form bound

    Graph() = default;
    Graph(int vertex_count, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[index]; }
    int edge_index(Edge e) const;  // -1 if absent
    bool has_edge(int u, int v) const;
    std::uint64_t adjacency(int v) const { return adj_[v]; }
    int degree(int v) const;
    bool connected() const;

    // Relabels vertex i to perm[i].
    Graph permuted(const std::vector<int>& perm) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;         // sorted, unique
    std::vector<std::uint64_t> adj_;  // adjacency bitmasks
};

// Disjoint vertex blocks covering 0..n-1. Each block is sorted and blocks
// are ordered by their minimum element.
struct VertexPartition {
    std::vector<std::vector<int>> blocks;
    int block_of(int v) const;
};

// Isomorphism-class identifier: the graph6 string of the canonical
// relabeling. Equal codes iff isomorphic (for graphs within the cap).
struct CanonicalCode {
    std::string bytes;
    auto operator<=>(const CanonicalCode&) const = default;
};

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> names;  // vertex index -> name from the input
};

// graph6, short form (n <= 62). Accepts an optional ">>graph6<<" prefix and
// trailing newline; anything else after the edge bytes is an error.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// One "u v" pair per line; '#' starts a comment; duplicate lines collapse.
// Names map to indices in first-appearance order.
ParsedGraph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);
std::string to_edge_list(const Graph& g, const std::vector<std::string>& names);

VertexPartition connected_components(const Graph& g);

// Components of the subgraph (V, edges); isolated vertices form singletons.
VertexPartition components_of_edges(int vertex_count, const std::vector<Edge>& edges);

// All 3-cliques as sorted triples, in lexicographic order.
std::vector<std::array<int, 3>> triangles(const Graph& g);

inline constexpr int kDefaultCanonicalCap = 10;

// Exhaustive-with-pruning canonicalization: vertices are grouped by an
// iterated degree-partition refinement, then the adjacency bit-string is
// minimized over all refinement-respecting orderings.
CanonicalCode canonical_form(const Graph& g, int max_vertices = kDefaultCanonicalCap);

}  // namespace nacrig
