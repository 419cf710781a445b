#include "nacrig/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>

#include "nacrig/errors.hpp"

namespace nacrig {

Graph::Graph(int vertex_count, const std::vector<Edge>& edges) : n_(vertex_count) {
    if (n_ < 0) throw ContractError("vertex count must be non-negative");
    if (n_ > kMaxVertices)
        throw CapacityError("graph has " + std::to_string(n_) + " vertices, cap is " +
                            std::to_string(kMaxVertices));
    edges_ = edges;
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw ContractError("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n_)
            throw ContractError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                std::to_string(e.v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
        adj_[e.u] |= std::uint64_t{1} << e.v;
        adj_[e.v] |= std::uint64_t{1} << e.u;
    }
}

int Graph::edge_index(Edge e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return (adj_[u] >> v) & 1;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1)
            next |= adj_[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == n_;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw ContractError("permutation size mismatch");
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(perm[e.u], perm[e.v]);
    return Graph(n_, out);
}

int VertexPartition::block_of(int v) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (std::binary_search(blocks[i].begin(), blocks[i].end(), v)) return static_cast<int>(i);
    return -1;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

int edge_byte_count(int n) { return (n * (n - 1) / 2 + 5) / 6; }

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kGraph6Prefix.size()) == kGraph6Prefix) {
        base = kGraph6Prefix.size();
        text.remove_prefix(base);
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input");

    const unsigned char header = static_cast<unsigned char>(text[0]);
    if (header < 63 || header > 125)
        throw ParseError("graph6: malformed header byte " + std::to_string(header) +
                         " at offset " + std::to_string(base) +
                         (header == 126 ? " (long form not supported)" : ""));
    const int n = header - 63;
    const int need = edge_byte_count(n);
    const int bit_count = n * (n - 1) / 2;

    if (static_cast<int>(text.size()) - 1 < need)
        throw ParseError("graph6: truncated input, expected " + std::to_string(need) +
                         " edge bytes, got " + std::to_string(text.size() - 1));
    if (static_cast<int>(text.size()) - 1 > need)
        throw ParseError("graph6: trailing garbage at offset " + std::to_string(base + 1 + need));

    std::vector<Edge> edges;
    int bit = 0;
    for (int k = 0; k < need; ++k) {
        const unsigned char c = static_cast<unsigned char>(text[1 + k]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: out-of-range byte " + std::to_string(c) + " at offset " +
                             std::to_string(base + 1 + k));
        const int value = c - 63;
        for (int s = 5; s >= 0; --s, ++bit) {
            const int b = (value >> s) & 1;
            if (bit >= bit_count) {
                if (b != 0)
                    throw ParseError("graph6: non-zero padding bit at offset " +
                                     std::to_string(base + 1 + k));
                continue;
            }
            if (b) {
                // bit index runs column-wise: (0,1), (0,2), (1,2), (0,3), ...
                int j = 1, before = 0;
                while (before + j <= bit) before += j++;
                edges.emplace_back(bit - before, j);
            }
        }
    }
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

// ---------------------------------------------------------------------------
// edge lists

ParsedGraph parse_edge_list(std::string_view text) {
    std::vector<std::string> names;
    std::map<std::string, int, std::less<>> index_of;
    auto intern = [&](std::string_view name) {
        auto it = index_of.find(name);
        if (it != index_of.end()) return it->second;
        const int idx = static_cast<int>(names.size());
        names.emplace_back(name);
        index_of.emplace(std::string(name), idx);
        return idx;
    };

    std::vector<Edge> edges;
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
        if (tokens.size() != 2)
            throw ParseError("edge list line " + std::to_string(line_no) + ": expected 2 tokens, got " +
                             std::to_string(tokens.size()));
        if (tokens[0] == tokens[1])
            throw ParseError("edge list line " + std::to_string(line_no) + ": self-loop '" +
                             std::string(tokens[0]) + "'");
        const int u = intern(tokens[0]);
        const int v = intern(tokens[1]);
        edges.emplace_back(u, v);
    }
    return ParsedGraph{Graph(static_cast<int>(names.size()), edges), std::move(names)};
}

std::string to_edge_list(const Graph& g) {
    std::vector<std::string> names;
    names.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) names.push_back(std::to_string(v));
    return to_edge_list(g, names);
}

std::string to_edge_list(const Graph& g, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != g.vertex_count())
        throw ContractError("name table size mismatch");
    std::ostringstream out;
    for (const Edge& e : g.edges()) out << names[e.u] << ' ' << names[e.v] << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// structure queries

VertexPartition components_of_edges(int vertex_count, const std::vector<Edge>& edges) {
    std::vector<int> parent(vertex_count);
    for (int v = 0; v < vertex_count; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Edge& e : edges) {
        int a = find(e.u), b = find(e.v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < vertex_count; ++v) groups[find(v)].push_back(v);
    VertexPartition part;
    for (auto& [root, block] : groups) part.blocks.push_back(std::move(block));
    return part;  // roots are block minima, so map order is the required order
}

VertexPartition connected_components(const Graph& g) {
    return components_of_edges(g.vertex_count(), g.edges());
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (const Edge& e : g.edges()) {
        std::uint64_t common = g.adjacency(e.u) & g.adjacency(e.v);
        common &= ~((std::uint64_t{2} << e.v) - 1);  // keep w > v only
        for (std::uint64_t m = common; m != 0; m &= m - 1)
            out.push_back({e.u, e.v, std::countr_zero(m)});
    }
    return out;  // edge order is lexicographic, so triples already are
}

// ---------------------------------------------------------------------------
// canonical form

namespace {

// Iterated refinement of the degree partition. Returns a color per vertex;
// the color ids are isomorphism-invariant because they are assigned from the
// sorted signature list.
std::vector<int> refined_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    for (;;) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> around;
            for (std::uint64_t m = g.adjacency(v); m != 0; m &= m - 1)
                around.push_back(color[std::countr_zero(m)]);
            std::sort(around.begin(), around.end());
            sig[v].insert(sig[v].end(), around.begin(), around.end());
        }
        std::vector<std::vector<int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        if (next == color) return color;
        color = std::move(next);
    }
}

struct CanonicalSearch {
    const Graph& g;
    std::vector<std::vector<int>> cells;  // candidate vertices per position range
    std::vector<int> cell_start;          // position where each cell begins
    std::vector<int> placed;              // position -> original vertex
    std::vector<std::uint64_t> placed_mask_by_cell;
    std::vector<char> bits;       // current partial adjacency bit-string
    std::vector<char> best;       // best (minimal) complete bit-string
    bool have_best = false;

    explicit CanonicalSearch(const Graph& graph) : g(graph) {}

    // cmp: -1 current prefix strictly smaller than best, 0 equal so far.
    void place(int pos, int cmp) {
        const int n = g.vertex_count();
        if (pos == n) {
            if (!have_best || cmp < 0) {
                best = bits;
                have_best = true;
            }
            return;
        }
        const int cell = static_cast<int>(
            std::upper_bound(cell_start.begin(), cell_start.end(), pos) - cell_start.begin() - 1);
        for (std::size_t ci = 0; ci < cells[cell].size(); ++ci) {
            const int w = cells[cell][ci];
            if ((placed_mask_by_cell[cell] >> ci) & 1) continue;
            const std::size_t mark = bits.size();
            int next_cmp = cmp;
            bool prune = false;
            for (int p = 0; p < pos; ++p) {
                const char b = g.has_edge(placed[p], w) ? 1 : 0;
                bits.push_back(b);
                if (next_cmp == 0 && have_best) {
                    const char bb = best[bits.size() - 1];
                    if (b > bb) {
                        prune = true;
                        break;
                    }
                    if (b < bb) next_cmp = -1;
                }
            }
            if (!prune) {
                placed[pos] = w;
                placed_mask_by_cell[cell] |= std::uint64_t{1} << ci;
                place(pos + 1, next_cmp);
                placed_mask_by_cell[cell] &= ~(std::uint64_t{1} << ci);
                // A smaller-prefix subtree always installs a new best that
                // extends this node's prefix, so later siblings compare
                // from the equal state again.
                if (cmp < 0) cmp = 0;
            }
            bits.resize(mark);
        }
    }
};

}  // namespace

CanonicalCode canonical_form(const Graph& g, int max_vertices) {
    const int n = g.vertex_count();
    if (n > max_vertices)
        throw CapacityError("canonical_form: " + std::to_string(n) + " vertices exceeds cap " +
                            std::to_string(max_vertices));
    if (n <= 1) return CanonicalCode{to_graph6(g)};

    const std::vector<int> color = refined_colors(g);
    const int num_colors = *std::max_element(color.begin(), color.end()) + 1;

    CanonicalSearch search(g);
    search.cells.resize(num_colors);
    for (int v = 0; v < n; ++v) search.cells[color[v]].push_back(v);
    search.cells.erase(
        std::remove_if(search.cells.begin(), search.cells.end(),
                       [](const std::vector<int>& c) { return c.empty(); }),
        search.cells.end());
    int at = 0;
    for (const auto& c : search.cells) {
        search.cell_start.push_back(at);
        at += static_cast<int>(c.size());
    }
    search.placed.assign(n, -1);
    search.placed_mask_by_cell.assign(search.cells.size(), 0);
    search.place(0, 0);

    // Rebuild the winning relabeling as a graph and emit its graph6 bytes.
    std::vector<Edge> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (search.best[bit]) edges.emplace_back(i, j);
    return CanonicalCode{to_graph6(Graph(n, edges))};
}

}  // namespace nacrig
