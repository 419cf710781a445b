#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nacrig/graph.hpp"

namespace nacrig {

enum class Color : std::uint8_t { red, blue };

inline Color swapped(Color c) { return c == Color::red ? Color::blue : Color::red; }

// Total red/blue assignment over a graph's edge set.
struct EdgeColoring {
    std::vector<std::pair<Edge, Color>> entries;  // sorted by edge, unique

    static EdgeColoring make(std::vector<std::pair<Edge, Color>> entries);
    Color at(Edge e) const;                  // throws ContractError if absent
    std::optional<Color> find(Edge e) const;
    bool same_domain(const Graph& g) const;
    EdgeColoring swapped() const;
    std::vector<Edge> edges_of(Color c) const;

    bool operator==(const EdgeColoring&) const = default;
};

// Cycle with exactly one edge of the minority color.
struct AlmostCycle {
    Color majority;            // color of every cycle edge except off_edge
    std::vector<int> cycle;    // vertex sequence, off_edge joins front/back
    Edge off_edge;
};

struct NacVerdict {
    enum class Fail { none, not_surjective, almost_cycle };
    bool ok = false;
    Fail fail = Fail::none;
    std::optional<AlmostCycle> witness;
};

// An EdgeColoring validated as a NAC-coloring, with the component
// partitions of the red and blue subgraphs.
struct NacColoring {
    EdgeColoring coloring;
    VertexPartition red_components;
    VertexPartition blue_components;

    // Validates and computes the partitions; throws ContractError when the
    // coloring is not NAC.
    static NacColoring create(const Graph& g, const EdgeColoring& coloring);
};

// Decides whether the coloring is surjective and every red/blue component
// is an induced subgraph; on failure carries a concrete witness. O(V+E).
NacVerdict is_nac(const Graph& g, const EdgeColoring& coloring);

// Complete duplicate-free list of NAC-colorings, ordered by the red-class
// bitmask over triangle-connectedness classes (classes sorted by smallest
// edge). With up_to_swap, one representative per {c, swapped(c)} pair.
std::vector<NacColoring> enumerate_nac(const Graph& g, bool up_to_swap = false);

// True iff enumerate_nac would be non-empty; exits early on the first hit.
// A graph with two or more edge-bearing components short-circuits to true.
bool has_nac(const Graph& g);

// Text format: one "u v r|b" line per edge, names resolved against the
// graph's name table.
EdgeColoring parse_coloring(std::string_view text, const Graph& g,
                            const std::vector<std::string>& names);
std::string to_coloring_text(const Graph& g, const EdgeColoring& coloring,
                             const std::vector<std::string>& names);

}  // namespace nacrig
