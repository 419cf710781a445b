#include "nacrig/nac.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <queue>
#include <sstream>

#include "nacrig/errors.hpp"
#include "nacrig/parallel.hpp"
#include "nacrig/structure.hpp"

namespace nacrig {

EdgeColoring EdgeColoring::make(std::vector<std::pair<Edge, Color>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].first == entries[i - 1].first)
            throw ContractError("duplicate edge in coloring");
    return EdgeColoring{std::move(entries)};
}

std::optional<Color> EdgeColoring::find(Edge e) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), e,
                               [](const auto& entry, const Edge& key) { return entry.first < key; });
    if (it == entries.end() || it->first != e) return std::nullopt;
    return it->second;
}

Color EdgeColoring::at(Edge e) const {
    if (auto c = find(e)) return *c;
    throw ContractError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                        " not in coloring domain");
}

bool EdgeColoring::same_domain(const Graph& g) const {
    if (entries.size() != g.edges().size()) return false;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].first != g.edges()[i]) return false;
    return true;
}

EdgeColoring EdgeColoring::swapped() const {
    EdgeColoring out = *this;
    for (auto& [e, c] : out.entries) c = nacrig::swapped(c);
    return out;
}

std::vector<Edge> EdgeColoring::edges_of(Color c) const {
    std::vector<Edge> out;
    for (const auto& [e, color] : entries)
        if (color == c) out.push_back(e);
    return out;
}

namespace {

// Shortest path between u and v using only edges of the given color.
std::vector<int> monochromatic_path(const Graph& g, const EdgeColoring& coloring, Color color,
                                    int from, int to) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (const auto& [e, c] : coloring.entries) {
        if (c != color) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> prev(g.vertex_count(), -1);
    std::queue<int> q;
    q.push(from);
    prev[from] = from;
    while (!q.empty()) {
        int at = q.front();
        q.pop();
        if (at == to) break;
        for (int next : adj[at])
            if (prev[next] < 0) {
                prev[next] = at;
                q.push(next);
            }
    }
    std::vector<int> path;
    for (int at = to; at != from; at = prev[at]) path.push_back(at);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

NacVerdict is_nac(const Graph& g, const EdgeColoring& coloring) {
    if (!coloring.same_domain(g))
        throw ContractError("coloring domain does not match the graph's edge set");

    int reds = 0, blues = 0;
    for (const auto& [e, c] : coloring.entries) (c == Color::red ? reds : blues)++;
    if (reds == 0 || blues == 0)
        return NacVerdict{false, NacVerdict::Fail::not_surjective, std::nullopt};

    // Lemma-style check: a component of one color containing an edge of the
    // other color is exactly an almost-monochromatic cycle.
    for (Color color : {Color::red, Color::blue}) {
        UnionFind uf(g.vertex_count());
        for (const auto& [e, c] : coloring.entries)
            if (c == color) uf.unite(e.u, e.v);
        for (const auto& [e, c] : coloring.entries) {
            if (c == color) continue;
            if (uf.find(e.u) == uf.find(e.v)) {
                AlmostCycle witness;
                witness.majority = color;
                witness.off_edge = e;
                witness.cycle = monochromatic_path(g, coloring, color, e.u, e.v);
                return NacVerdict{false, NacVerdict::Fail::almost_cycle, std::move(witness)};
            }
        }
    }
    return NacVerdict{true, NacVerdict::Fail::none, std::nullopt};
}

NacColoring NacColoring::create(const Graph& g, const EdgeColoring& coloring) {
    NacVerdict verdict = is_nac(g, coloring);
    if (!verdict.ok)
        throw ContractError(verdict.fail == NacVerdict::Fail::not_surjective
                                ? "coloring is not a NAC-coloring: not surjective"
                                : "coloring is not a NAC-coloring: almost-monochromatic cycle");
    NacColoring out;
    out.coloring = coloring;
    out.red_components = components_of_edges(g.vertex_count(), coloring.edges_of(Color::red));
    out.blue_components = components_of_edges(g.vertex_count(), coloring.edges_of(Color::blue));
    return out;
}

namespace {

// Shared precomputation for the class-mask search: every NAC-coloring is
// constant on each triangle-connectedness class, so candidates are
// assignments of red/blue to classes rather than to single edges.
struct ClassSearch {
    const Graph& g;
    std::vector<std::vector<Edge>> class_edges;
    std::vector<int> class_of_edge;

    explicit ClassSearch(const Graph& graph, const DeltaClassPartition& delta) : g(graph) {
        class_edges.reserve(delta.classes.size());
        for (const auto& cls : delta.classes) class_edges.push_back(cls.edges);
        class_of_edge = delta.class_of_edge;
    }

    std::size_t class_count() const { return class_edges.size(); }

    bool valid(std::uint64_t red_mask) const {
        const int n = g.vertex_count();
        UnionFind red(n), blue(n);
        for (std::size_t k = 0; k < class_edges.size(); ++k) {
            UnionFind& uf = ((red_mask >> k) & 1) ? red : blue;
            for (const Edge& e : class_edges[k]) uf.unite(e.u, e.v);
        }
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            const Edge& e = g.edges()[i];
            const bool is_red = (red_mask >> class_of_edge[i]) & 1;
            UnionFind& other = is_red ? blue : red;
            if (other.find(e.u) == other.find(e.v)) return false;
        }
        return true;
    }

    EdgeColoring materialize(std::uint64_t red_mask) const {
        std::vector<std::pair<Edge, Color>> entries;
        entries.reserve(g.edges().size());
        for (std::size_t i = 0; i < g.edges().size(); ++i)
            entries.emplace_back(g.edges()[i],
                                 ((red_mask >> class_of_edge[i]) & 1) ? Color::red : Color::blue);
        return EdgeColoring{std::move(entries)};
    }
};

constexpr std::size_t kMaskWidthCap = 62;

}  // namespace

std::vector<NacColoring> enumerate_nac(const Graph& g, bool up_to_swap) {
    if (g.edge_count() < 2) return {};  // surjectivity needs two edges
    const DeltaClassPartition delta = delta_classes(g);
    const ClassSearch search(g, delta);
    const std::size_t k = search.class_count();
    if (k > kMaskWidthCap)
        throw CapacityError("enumerate_nac: " + std::to_string(k) +
                            " triangle classes exceed the searchable width");
    if (k < 2) return {};  // one class means every coloring is monochromatic

    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    const std::size_t candidates = full - 1;  // masks 1 .. full-1

    std::vector<std::vector<std::uint64_t>> hits(thread_count());
    std::atomic<std::size_t> next_slot{0};
    parallel_chunks(candidates, [&](std::size_t begin, std::size_t end) {
        const std::size_t slot = next_slot.fetch_add(1);
        auto& local = hits[slot];
        for (std::size_t i = begin; i < end; ++i) {
            const std::uint64_t mask = i + 1;
            if (up_to_swap && mask > (full ^ mask)) continue;
            if (search.valid(mask)) local.push_back(mask);
        }
    });
    std::vector<std::uint64_t> masks;
    for (auto& local : hits) masks.insert(masks.end(), local.begin(), local.end());
    std::sort(masks.begin(), masks.end());

    std::vector<NacColoring> out(masks.size());
    parallel_chunks(masks.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            out[i] = NacColoring::create(g, search.materialize(masks[i]));
    });
    return out;
}

bool has_nac(const Graph& g) {
    if (g.edge_count() < 2) return false;

    // Two edge-bearing components make any component-splitting coloring NAC.
    const VertexPartition comps = connected_components(g);
    int edge_bearing = 0;
    for (const auto& block : comps.blocks)
        for (int v : block)
            if (g.degree(v) > 0) {
                ++edge_bearing;
                break;
            }
    if (edge_bearing >= 2) return true;

    const DeltaClassPartition delta = delta_classes(g);
    const ClassSearch search(g, delta);
    const std::size_t k = search.class_count();
    if (k > kMaskWidthCap)
        throw CapacityError("has_nac: " + std::to_string(k) +
                            " triangle classes exceed the searchable width");
    if (k < 2) return false;

    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    if (k <= 16) {
        for (std::uint64_t mask = 1; mask < full; ++mask)
            if (search.valid(mask)) return true;
        return false;
    }
    std::atomic<bool> found{false};
    parallel_chunks(full - 1, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end && !found.load(std::memory_order_relaxed); ++i)
            if (search.valid(i + 1)) {
                found.store(true, std::memory_order_relaxed);
                return;
            }
    });
    return found.load();
}

EdgeColoring parse_coloring(std::string_view text, const Graph& g,
                            const std::vector<std::string>& names) {
    std::map<std::string, int, std::less<>> index_of;
    for (std::size_t i = 0; i < names.size(); ++i) index_of.emplace(names[i], static_cast<int>(i));

    std::vector<std::pair<Edge, Color>> entries;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > start) tokens.push_back(line.substr(start, i - start));
        }
        if (tokens.empty()) continue;
        if (tokens.size() != 3)
            throw ParseError("coloring line " + std::to_string(line_no) +
                             ": expected 'u v r|b'");
        auto iu = index_of.find(tokens[0]);
        auto iv = index_of.find(tokens[1]);
        if (iu == index_of.end() || iv == index_of.end())
            throw ParseError("coloring line " + std::to_string(line_no) + ": unknown vertex name");
        Color color;
        if (tokens[2] == "r" || tokens[2] == "red")
            color = Color::red;
        else if (tokens[2] == "b" || tokens[2] == "blue")
            color = Color::blue;
        else
            throw ParseError("coloring line " + std::to_string(line_no) + ": color must be r or b");
        const Edge e(iu->second, iv->second);
        if (!g.has_edge(e.u, e.v))
            throw ParseError("coloring line " + std::to_string(line_no) + ": not an edge");
        entries.emplace_back(e, color);
    }
    EdgeColoring coloring = EdgeColoring::make(std::move(entries));
    if (!coloring.same_domain(g)) throw ParseError("coloring does not cover every edge");
    return coloring;
}

std::string to_coloring_text(const Graph& g, const EdgeColoring& coloring,
                             const std::vector<std::string>& names) {
    std::ostringstream out;
    for (const Edge& e : g.edges())
        out << names[e.u] << ' ' << names[e.v] << ' '
            << (coloring.at(e) == Color::red ? 'r' : 'b') << '\n';
    return out.str();
}

}  // namespace nacrig
