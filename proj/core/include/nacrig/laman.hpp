#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nacrig/graph.hpp"

namespace nacrig {

// Vertex-addition move. Type I attaches the new vertex to u, u1; type II
// attaches it to u, u1, u2 and removes the edge u1u2. The sub-kind encodes
// the adjacency pattern required of the host graph.
struct HennebergMove {
    enum class Kind { Ia, Ib, IIa, IIb, IIc };
    Kind kind;
    int new_vertex;
    int u;
    int u1;
    int u2 = -1;  // type II only
};

// (2,3)-tight test via the pebble game: every edge insertion must gather
// four pebbles, and the total count must come out to 2|V|-3.
bool is_laman(const Graph& g);

// Applies the move after checking its kind-specific preconditions.
Graph apply_henneberg(const Graph& g, const HennebergMove& move);

// All moves applicable to g that add vertex g.vertex_count().
std::vector<HennebergMove> henneberg_moves(const Graph& g);

inline constexpr int kDefaultLamanCap = 8;

// All isomorphism classes of Laman graphs on n vertices, by breadth-first
// Henneberg expansion with canonical-form dedup at each level.
std::vector<CanonicalCode> enumerate_laman(int n, int cap = kDefaultLamanCap);
std::vector<Graph> enumerate_laman_graphs(int n, int cap = kDefaultLamanCap);

// Laman graph with min degree 3 where every degree-3 vertex has exactly one
// adjacent neighbor pair whose two vertices both have degree >= 4, and
// every vertex lies in a triangle.
bool is_problematic(const Graph& g);

// Degree-3 vertex with two or more adjacent neighbor pairs, if any; such
// graphs get flagged in reports instead of being classified silently.
std::optional<int> problematic_ambiguity(const Graph& g);

struct ConjectureLevel {
    int n = 0;
    std::uint64_t total = 0;
    std::uint64_t tri_connected = 0;
    std::uint64_t with_nac = 0;
    std::uint64_t problematic = 0;
};

struct ConjectureReport {
    int max_n = 0;
    int cap = kDefaultLamanCap;
    std::vector<ConjectureLevel> per_n;                 // n = 3 .. max_n
    std::vector<CanonicalCode> counterexamples;         // expected empty
    std::vector<CanonicalCode> ambiguous_problematic;
    std::optional<int> resumed_from;
};

// Sweeps every Laman graph with 3 <= n <= max_n: a graph that is not
// triangle-connected must have a NAC-coloring, else it is recorded as a
// counterexample. With a checkpoint path, completed levels are reloaded
// (hash-validated against the re-derived enumeration) and new levels are
// appended after each n.
ConjectureReport verify_conjecture(int max_n, const std::optional<std::string>& checkpoint_path,
                                   int cap = kDefaultLamanCap);

}  // namespace nacrig
