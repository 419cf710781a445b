#include "nacrig/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "nacrig/errors.hpp"

namespace nacrig {

namespace {

// Number of connected components after deleting the given vertices (as a
// bitmask) and/or edges.
int component_count(const Graph& g, std::uint64_t removed_vertices,
                    const std::set<Edge>& removed_edges) {
    const int n = g.vertex_count();
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Edge& e : g.edges()) {
        if ((removed_vertices >> e.u) & 1 || (removed_vertices >> e.v) & 1) continue;
        if (removed_edges.contains(e)) continue;
        int a = find(e.u), b = find(e.v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    int count = 0;
    for (int v = 0; v < n; ++v)
        if (!((removed_vertices >> v) & 1) && find(v) == v) ++count;
    return count;
}

bool separates_vertices(const Graph& g, std::uint64_t cut_mask) {
    return component_count(g, cut_mask, {}) >= 2;
}

bool separates_edges(const Graph& g, const std::set<Edge>& cut) {
    return component_count(g, 0, cut) >= 2;
}

bool is_independent(const Graph& g, const std::vector<int>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j])) return false;
    return true;
}

// Any simple path with `length` edges inside the subgraph spanned by the
// given edge set?
bool has_path_of_length(const std::vector<Edge>& edges, int length) {
    std::set<int> vertex_set;
    for (const Edge& e : edges) {
        vertex_set.insert(e.u);
        vertex_set.insert(e.v);
    }
    std::map<int, std::vector<int>> adj;
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::set<int> visited;
    auto dfs = [&](auto&& self, int at, int remaining) -> bool {
        if (remaining == 0) return true;
        for (int next : adj[at]) {
            if (visited.contains(next)) continue;
            visited.insert(next);
            if (self(self, next, remaining - 1)) return true;
            visited.erase(next);
        }
        return false;
    };
    for (int start : vertex_set) {
        visited = {start};
        if (dfs(dfs, start, length)) return true;
    }
    return false;
}

}  // namespace

bool DeltaClassPartition::is_connecting(const Graph& g, Edge e) const {
    const int idx = g.edge_index(e);
    if (idx < 0) throw ContractError("is_connecting: not an edge of the graph");
    const Class& cls = classes[class_of_edge[idx]];
    if (cls.edges.size() != 1) return false;
    // A singleton class cannot lie in a triangle, but check the definition
    // directly anyway.
    return (g.adjacency(e.u) & g.adjacency(e.v)) == 0;
}

std::vector<Edge> DeltaClassPartition::connecting_edges(const Graph& g) const {
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (is_connecting(g, e)) out.push_back(e);
    return out;
}

DeltaClassPartition delta_classes(const Graph& g) {
    const int m = g.edge_count();
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (const auto& [u, v, w] : triangles(g)) {
        const int e1 = g.edge_index(Edge(u, v));
        const int e2 = g.edge_index(Edge(u, w));
        const int e3 = g.edge_index(Edge(v, w));
        unite(e1, e2);
        unite(e1, e3);
    }

    // Roots are the minimal edge index of each class, so ordering groups by
    // root yields classes sorted by smallest edge.
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < m; ++i) groups[find(i)].push_back(i);

    DeltaClassPartition out;
    out.class_of_edge.assign(m, -1);
    for (const auto& [root, members] : groups) {
        DeltaClassPartition::Class cls;
        std::set<int> support;
        for (int i : members) {
            out.class_of_edge[i] = static_cast<int>(out.classes.size());
            cls.edges.push_back(g.edge(i));
            support.insert(g.edge(i).u);
            support.insert(g.edge(i).v);
        }
        cls.support.assign(support.begin(), support.end());
        out.classes.push_back(std::move(cls));
    }
    return out;
}

std::optional<int> spanning_delta_check(const Graph& g) {
    return spanning_delta_check(g, delta_classes(g));
}

std::optional<int> spanning_delta_check(const Graph& g, const DeltaClassPartition& delta) {
    for (std::size_t k = 0; k < delta.classes.size(); ++k)
        if (static_cast<int>(delta.classes[k].support.size()) == g.vertex_count())
            return static_cast<int>(k);
    return std::nullopt;
}

bool edge_bound_check(const Graph& g) {
    const long long n = g.vertex_count();
    return g.edge_count() <= n * (n - 1) / 2 - (n - 2);
}

std::optional<std::vector<int>> find_independent_cut(const Graph& g, int max_size) {
    if (!g.connected()) throw ContractError("find_independent_cut: graph must be connected");
    const int n = g.vertex_count();

    std::vector<int> pick;
    auto search = [&](auto&& self, int first, int remaining) -> bool {
        if (remaining == 0) {
            std::uint64_t mask = 0;
            for (int v : pick) mask |= std::uint64_t{1} << v;
            return separates_vertices(g, mask);
        }
        for (int v = first; v < n; ++v) {
            bool clash = false;
            for (int p : pick)
                if (g.has_edge(p, v)) clash = true;
            if (clash) continue;
            pick.push_back(v);
            if (self(self, v + 1, remaining - 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    for (int size = 1; size <= std::min(max_size, n - 2); ++size) {
        pick.clear();
        if (search(search, 0, size)) return pick;
    }
    return std::nullopt;
}

NacColoring coloring_from_independent_cut(const Graph& g, const std::vector<int>& cut) {
    if (!g.connected()) throw ContractError("coloring_from_independent_cut: graph must be connected");
    if (cut.empty()) throw ContractError("independent cut must be non-empty");
    std::uint64_t mask = 0;
    for (int v : cut) {
        if (v < 0 || v >= g.vertex_count())
            throw ContractError("cut vertex out of range: " + std::to_string(v));
        mask |= std::uint64_t{1} << v;
    }
    if (!is_independent(g, cut)) throw ContractError("cut is not an independent set");
    if (!separates_vertices(g, mask)) throw ContractError("cut does not separate the graph");

    // M = component of g - cut holding the smallest remaining vertex.
    std::vector<Edge> remaining;
    for (const Edge& e : g.edges())
        if (!((mask >> e.u) & 1) && !((mask >> e.v) & 1)) remaining.push_back(e);
    const VertexPartition comps = components_of_edges(g.vertex_count(), remaining);
    std::uint64_t m_mask = 0;
    for (const auto& block : comps.blocks) {
        if ((mask >> block[0]) & 1) continue;  // block of a cut vertex itself
        for (int v : block) m_mask |= std::uint64_t{1} << v;
        break;
    }

    std::vector<std::pair<Edge, Color>> entries;
    for (const Edge& e : g.edges()) {
        const bool touches_m = ((m_mask >> e.u) & 1) || ((m_mask >> e.v) & 1);
        entries.emplace_back(e, touches_m ? Color::red : Color::blue);
    }
    return NacColoring::create(g, EdgeColoring::make(std::move(entries)));
}

std::optional<int> vertex_without_triangle(const Graph& g) {
    if (g.edge_count() < 2 || !g.connected())
        throw ContractError("vertex_without_triangle: needs a connected graph with >= 2 edges");
    std::uint64_t in_triangle = 0;
    for (const auto& [u, v, w] : triangles(g))
        in_triangle |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v) | (std::uint64_t{1} << w);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!((in_triangle >> v) & 1)) return v;
    return std::nullopt;
}

std::vector<int> cut_from_triangle_free_vertex(const Graph& g, int v) {
    std::vector<int> neighborhood;
    for (std::uint64_t m = g.adjacency(v); m != 0; m &= m - 1)
        neighborhood.push_back(std::countr_zero(m));
    std::uint64_t mask = 0;
    for (int w : neighborhood) mask |= std::uint64_t{1} << w;
    if (separates_vertices(g, mask)) return neighborhood;
    // Otherwise the graph is a star centered at v; the center separates.
    return {v};
}

std::optional<std::vector<Edge>> find_connecting_edge_cut(const Graph& g) {
    if (g.edge_count() < 2 || !g.connected())
        throw ContractError("find_connecting_edge_cut: needs a connected graph with >= 2 edges");
    const DeltaClassPartition delta = delta_classes(g);
    std::vector<Edge> connecting = delta.connecting_edges(g);
    if (connecting.empty()) return std::nullopt;

    std::set<Edge> cut(connecting.begin(), connecting.end());
    if (!separates_edges(g, cut)) return std::nullopt;

    // Greedy minimization in edge order.
    for (const Edge& e : connecting) {
        cut.erase(e);
        if (!separates_edges(g, cut)) cut.insert(e);
    }
    std::vector<Edge> result(cut.begin(), cut.end());
    if (has_path_of_length(result, 4)) return std::nullopt;
    return result;
}

NacColoring coloring_from_edge_cut(const Graph& g, const std::vector<Edge>& cut) {
    if (!g.connected()) throw ContractError("coloring_from_edge_cut: graph must be connected");
    if (cut.empty()) throw ContractError("edge cut must be non-empty");
    const DeltaClassPartition delta = delta_classes(g);
    std::set<Edge> cut_set;
    for (const Edge& e : cut) {
        if (g.edge_index(e) < 0) throw ContractError("cut edge is not an edge of the graph");
        if (!delta.is_connecting(g, e))
            throw ContractError("cut edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                " is not a connecting edge");
        cut_set.insert(e);
    }
    if (!separates_edges(g, cut_set)) throw ContractError("edge cut does not separate the graph");
    for (const Edge& e : cut) {
        std::set<Edge> smaller = cut_set;
        smaller.erase(e);
        if (!smaller.empty() && separates_edges(g, smaller))
            throw ContractError("edge cut is not inclusion-minimal");
    }
    std::vector<Edge> as_vector(cut_set.begin(), cut_set.end());
    if (has_path_of_length(as_vector, 4))
        throw ContractError("edge cut spans a path of four edges");

    std::vector<std::pair<Edge, Color>> entries;
    for (const Edge& e : g.edges())
        entries.emplace_back(e, cut_set.contains(e) ? Color::red : Color::blue);
    return NacColoring::create(g, EdgeColoring::make(std::move(entries)));
}

StructureReport build_structure_report(const Graph& g, int max_cut_size) {
    StructureReport report;
    report.max_cut_size = max_cut_size;
    report.delta_classes = delta_classes(g);
    report.spanned_by = spanning_delta_check(g, report.delta_classes);
    report.edge_bound_ok = edge_bound_check(g);
    if (g.connected() && g.vertex_count() >= 2) {
        report.independent_cut = find_independent_cut(g, max_cut_size);
        if (g.edge_count() >= 2) {
            report.triangle_free_vertex = vertex_without_triangle(g);
            report.connecting_edge_cut = find_connecting_edge_cut(g);
        }
    }
    return report;
}

}  // namespace nacrig
