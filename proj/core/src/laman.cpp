#include "nacrig/laman.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "nacrig/errors.hpp"
#include "nacrig/nac.hpp"
#include "nacrig/parallel.hpp"
#include "nacrig/structure.hpp"

namespace nacrig {

namespace {

// Directed pebble game state for the (2,3) sparsity test.
struct PebbleGame {
    std::vector<std::vector<int>> out;
    std::vector<int> pebbles;

    explicit PebbleGame(int n) : out(n), pebbles(n, 2) {}

    // DFS from `start` for a vertex outside {u, v} holding a pebble; on
    // success the path is reversed and the pebble moves to `start`.
    bool pull_pebble(int start, int u, int v) {
        std::vector<int> parent(out.size(), -1);
        std::vector<int> stack{start};
        parent[start] = start;
        int found = -1;
        while (!stack.empty() && found < 0) {
            const int at = stack.back();
            stack.pop_back();
            for (int next : out[at]) {
                if (parent[next] >= 0) continue;
                parent[next] = at;
                if (next != u && next != v && pebbles[next] > 0) {
                    found = next;
                    break;
                }
                stack.push_back(next);
            }
        }
        if (found < 0) return false;
        --pebbles[found];
        ++pebbles[start];
        for (int at = found; at != start;) {
            const int from = parent[at];
            out[from].erase(std::find(out[from].begin(), out[from].end(), at));
            out[at].push_back(from);
            at = from;
        }
        return true;
    }

    bool insert_edge(int u, int v) {
        while (pebbles[u] + pebbles[v] < 4) {
            if (!pull_pebble(u, u, v) && !pull_pebble(v, u, v)) return false;
        }
        --pebbles[u];
        out[u].push_back(v);
        return true;
    }
};

bool is_laman_quiet(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) return false;
    if (g.edge_count() != 2 * n - 3) return false;
    PebbleGame game(n);
    for (const Edge& e : g.edges())
        if (!game.insert_edge(e.u, e.v)) return false;
    return true;
}

}  // namespace

bool is_laman(const Graph& g) {
    if (g.vertex_count() < 2) throw ContractError("is_laman: needs at least two vertices");
    return is_laman_quiet(g);
}

Graph apply_henneberg(const Graph& g, const HennebergMove& move) {
    const int n = g.vertex_count();
    if (move.new_vertex != n)
        throw ContractError("apply_henneberg: new vertex must be the next dense index");
    auto check_vertex = [&](int v) {
        if (v < 0 || v >= n) throw ContractError("apply_henneberg: attach vertex out of range");
    };

    std::vector<Edge> edges = g.edges();
    switch (move.kind) {
        case HennebergMove::Kind::Ia:
        case HennebergMove::Kind::Ib: {
            check_vertex(move.u);
            check_vertex(move.u1);
            if (move.u == move.u1) throw ContractError("apply_henneberg: attach vertices equal");
            const bool adjacent = g.has_edge(move.u, move.u1);
            if (move.kind == HennebergMove::Kind::Ia && !adjacent)
                throw ContractError("apply_henneberg: Ia requires the attach pair to be an edge");
            if (move.kind == HennebergMove::Kind::Ib && adjacent)
                throw ContractError("apply_henneberg: Ib requires the attach pair to be a non-edge");
            edges.emplace_back(move.u, n);
            edges.emplace_back(move.u1, n);
            break;
        }
        case HennebergMove::Kind::IIa:
        case HennebergMove::Kind::IIb:
        case HennebergMove::Kind::IIc: {
            check_vertex(move.u);
            check_vertex(move.u1);
            check_vertex(move.u2);
            if (move.u == move.u1 || move.u == move.u2 || move.u1 == move.u2)
                throw ContractError("apply_henneberg: attach vertices must be distinct");
            if (!g.has_edge(move.u1, move.u2))
                throw ContractError("apply_henneberg: type II requires edge u1u2");
            const int incident = (g.has_edge(move.u, move.u1) ? 1 : 0) +
                                 (g.has_edge(move.u, move.u2) ? 1 : 0);
            const int wanted = move.kind == HennebergMove::Kind::IIa   ? 0
                               : move.kind == HennebergMove::Kind::IIb ? 1
                                                                       : 2;
            if (incident != wanted)
                throw ContractError("apply_henneberg: move sub-kind does not match adjacency");
            edges.erase(std::find(edges.begin(), edges.end(), Edge(move.u1, move.u2)));
            edges.emplace_back(move.u, n);
            edges.emplace_back(move.u1, n);
            edges.emplace_back(move.u2, n);
            break;
        }
    }
    Graph result(n + 1, edges);
    assert(!is_laman_quiet(g) || is_laman_quiet(result));
    return result;
}

std::vector<HennebergMove> henneberg_moves(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<HennebergMove> moves;
    for (int u = 0; u < n; ++u)
        for (int u1 = u + 1; u1 < n; ++u1)
            moves.push_back({g.has_edge(u, u1) ? HennebergMove::Kind::Ia : HennebergMove::Kind::Ib,
                             n, u, u1});
    for (const Edge& e : g.edges())
        for (int u = 0; u < n; ++u) {
            if (u == e.u || u == e.v) continue;
            const int incident = (g.has_edge(u, e.u) ? 1 : 0) + (g.has_edge(u, e.v) ? 1 : 0);
            const auto kind = incident == 0   ? HennebergMove::Kind::IIa
                              : incident == 1 ? HennebergMove::Kind::IIb
                                              : HennebergMove::Kind::IIc;
            moves.push_back({kind, n, u, e.u, e.v});
        }
    return moves;
}

namespace {

std::vector<Graph> expand_level(const std::vector<Graph>& level) {
    std::vector<std::vector<std::pair<CanonicalCode, Graph>>> found(level.size());
    parallel_chunks(level.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            for (const HennebergMove& move : henneberg_moves(level[i])) {
                Graph child = apply_henneberg(level[i], move);
                found[i].emplace_back(canonical_form(child), std::move(child));
            }
    });
    std::map<CanonicalCode, Graph> dedup;
    for (auto& batch : found)
        for (auto& [code, graph] : batch) dedup.emplace(std::move(code), std::move(graph));
    std::vector<Graph> next;
    next.reserve(dedup.size());
    for (auto& [code, graph] : dedup) next.push_back(std::move(graph));
    return next;  // map order makes the level deterministic
}

std::vector<std::vector<Graph>> enumerate_levels(int n, int cap) {
    if (n < 2) throw ContractError("enumerate_laman: n must be at least 2");
    if (n > cap)
        throw CapacityError("enumerate_laman: n = " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
    std::vector<std::vector<Graph>> levels;
    levels.push_back({Graph(2, {{0, 1}})});
    while (static_cast<int>(levels.size()) < n - 1)
        levels.push_back(expand_level(levels.back()));
    return levels;  // levels[i] holds the graphs on i + 2 vertices
}

}  // namespace

std::vector<Graph> enumerate_laman_graphs(int n, int cap) {
    return enumerate_levels(n, cap).back();
}

std::vector<CanonicalCode> enumerate_laman(int n, int cap) {
    std::vector<CanonicalCode> codes;
    for (const Graph& g : enumerate_laman_graphs(n, cap)) codes.push_back(canonical_form(g));
    return codes;
}

namespace {

// Adjacent pairs among the neighbors of v.
std::vector<Edge> adjacent_neighbor_pairs(const Graph& g, int v) {
    std::vector<int> around;
    for (std::uint64_t m = g.adjacency(v); m != 0; m &= m - 1)
        around.push_back(std::countr_zero(m));
    std::vector<Edge> pairs;
    for (std::size_t i = 0; i < around.size(); ++i)
        for (std::size_t j = i + 1; j < around.size(); ++j)
            if (g.has_edge(around[i], around[j])) pairs.emplace_back(around[i], around[j]);
    return pairs;
}

struct ProblematicCheck {
    bool strict = true;   // exactly one adjacent pair at every degree-3 vertex
    bool lenient = true;  // multi-pair degree-3 vertices get a pass
    std::optional<int> multi_pair_vertex;
};

ProblematicCheck problematic_check(const Graph& g) {
    ProblematicCheck out;
    std::uint64_t in_triangle = 0;
    for (const auto& [u, v, w] : triangles(g))
        in_triangle |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v) | (std::uint64_t{1} << w);

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 3 || !((in_triangle >> v) & 1)) {
            out.strict = out.lenient = false;
            return out;
        }
        if (g.degree(v) != 3) continue;
        const std::vector<Edge> pairs = adjacent_neighbor_pairs(g, v);
        if (pairs.empty()) {
            out.strict = out.lenient = false;
            return out;
        }
        if (pairs.size() == 1) {
            if (g.degree(pairs[0].u) < 4 || g.degree(pairs[0].v) < 4) {
                out.strict = out.lenient = false;
                return out;
            }
        } else {
            out.strict = false;
            if (!out.multi_pair_vertex) out.multi_pair_vertex = v;
        }
    }
    return out;
}

}  // namespace

bool is_problematic(const Graph& g) {
    if (!is_laman(g)) throw ContractError("is_problematic: input must be a Laman graph");
    return problematic_check(g).strict;
}

// A graph is flagged when its problematic-status hinges on how "exactly two
// neighbors of v are connected" is read for a degree-3 vertex with several
// adjacent neighbor pairs.
std::optional<int> problematic_ambiguity(const Graph& g) {
    const ProblematicCheck check = problematic_check(g);
    if (!check.strict && check.lenient) return check.multi_pair_vertex;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// conjecture sweep with checkpointing

namespace {

std::uint64_t fnv1a(const std::vector<CanonicalCode>& codes) {
    std::uint64_t h = 1469598103934665603ull;
    for (const CanonicalCode& code : codes)
        for (unsigned char c : code.bytes) {
            h ^= c;
            h *= 1099511628211ull;
        }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

struct CheckpointLevel {
    ConjectureLevel counts;
    std::uint64_t hash = 0;
};

struct Checkpoint {
    std::vector<CheckpointLevel> levels;  // consecutive from n = 3
    std::vector<std::pair<int, std::string>> counterexamples;
    std::vector<std::pair<int, std::string>> ambiguous;
};

constexpr std::string_view kCheckpointHeader = "nacrig-checkpoint 1";

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("checkpoint: cannot open " + path);
    Checkpoint cp;
    std::string line;
    int line_no = 0;
    auto corrupt = [&](const std::string& why) {
        throw ParseError("checkpoint " + path + " line " + std::to_string(line_no) +
                         ": corrupt (" + why + ")");
    };
    if (!std::getline(in, line) || line != kCheckpointHeader) {
        line_no = 1;
        corrupt("bad header");
    }
    line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line.rfind("n=", 0) == 0) {
            CheckpointLevel lvl;
            unsigned long long total, tri, nac, prob;
            char hash[32];
            if (std::sscanf(line.c_str(), "n=%d total=%llu tri=%llu nac=%llu problematic=%llu hash=%31s",
                            &lvl.counts.n, &total, &tri, &nac, &prob, hash) != 6)
                corrupt("unparseable level line");
            lvl.counts.total = total;
            lvl.counts.tri_connected = tri;
            lvl.counts.with_nac = nac;
            lvl.counts.problematic = prob;
            if (std::string_view(hash).size() != 16) corrupt("bad hash width");
            lvl.hash = std::strtoull(hash, nullptr, 16);
            const int expected = cp.levels.empty() ? 3 : cp.levels.back().counts.n + 1;
            if (lvl.counts.n != expected) corrupt("levels not consecutive");
            cp.levels.push_back(lvl);
        } else if (line.rfind("counterexample ", 0) == 0 || line.rfind("ambiguous ", 0) == 0) {
            int n;
            char code[128];
            const bool is_counter = line.rfind("counterexample ", 0) == 0;
            const char* fmt = is_counter ? "counterexample n=%d code=%127s" : "ambiguous n=%d code=%127s";
            if (std::sscanf(line.c_str(), fmt, &n, code) != 2) corrupt("unparseable witness line");
            (is_counter ? cp.counterexamples : cp.ambiguous).emplace_back(n, code);
        } else {
            corrupt("unknown record");
        }
    }
    return cp;
}

void save_checkpoint(const std::string& path, const Checkpoint& cp) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << kCheckpointHeader << '\n';
        for (const CheckpointLevel& lvl : cp.levels)
            out << "n=" << lvl.counts.n << " total=" << lvl.counts.total
                << " tri=" << lvl.counts.tri_connected << " nac=" << lvl.counts.with_nac
                << " problematic=" << lvl.counts.problematic << " hash=" << hex64(lvl.hash) << '\n';
        for (const auto& [n, code] : cp.counterexamples)
            out << "counterexample n=" << n << " code=" << code << '\n';
        for (const auto& [n, code] : cp.ambiguous)
            out << "ambiguous n=" << n << " code=" << code << '\n';
    }
    std::filesystem::rename(tmp, path);
}

struct LevelScan {
    ConjectureLevel counts;
    std::vector<CanonicalCode> counterexamples;
    std::vector<CanonicalCode> ambiguous;
};

LevelScan scan_level(int n, const std::vector<Graph>& graphs,
                     const std::vector<CanonicalCode>& codes) {
    LevelScan scan;
    scan.counts.n = n;
    scan.counts.total = graphs.size();
    struct PerGraph {
        bool tri = false, nac = false, prob = false, ambiguous = false;
    };
    std::vector<PerGraph> results(graphs.size());
    parallel_chunks(graphs.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const Graph& g = graphs[i];
            results[i].tri = delta_classes(g).classes.size() == 1;
            results[i].nac = has_nac(g);
            results[i].prob = is_problematic(g);
            results[i].ambiguous = problematic_ambiguity(g).has_value();
        }
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (results[i].tri) ++scan.counts.tri_connected;
        if (results[i].nac) ++scan.counts.with_nac;
        if (results[i].prob) ++scan.counts.problematic;
        if (!results[i].tri && !results[i].nac) scan.counterexamples.push_back(codes[i]);
        if (results[i].ambiguous) scan.ambiguous.push_back(codes[i]);
    }
    return scan;
}

}  // namespace

ConjectureReport verify_conjecture(int max_n, const std::optional<std::string>& checkpoint_path,
                                   int cap) {
    if (max_n < 3) throw ContractError("verify_conjecture: max_n must be at least 3");
    if (max_n > cap)
        throw CapacityError("verify_conjecture: max_n = " + std::to_string(max_n) +
                            " exceeds cap " + std::to_string(cap));

    Checkpoint cp;
    bool resumed = false;
    if (checkpoint_path && std::filesystem::exists(*checkpoint_path)) {
        cp = load_checkpoint(*checkpoint_path);
        resumed = !cp.levels.empty();
    }

    ConjectureReport report;
    report.max_n = max_n;
    report.cap = cap;
    if (resumed) report.resumed_from = cp.levels.back().counts.n;

    std::vector<Graph> level = {Graph(2, {{0, 1}})};
    for (int n = 3; n <= max_n; ++n) {
        level = expand_level(level);
        std::vector<CanonicalCode> codes;
        codes.reserve(level.size());
        for (const Graph& g : level) codes.push_back(canonical_form(g));
        const std::uint64_t level_hash = fnv1a(codes);

        const int done = static_cast<int>(cp.levels.size());
        if (n - 3 < done) {
            const CheckpointLevel& stored = cp.levels[n - 3];
            if (stored.hash != level_hash)
                throw ParseError("checkpoint " + *checkpoint_path + ": level n=" +
                                 std::to_string(n) + " hash mismatch with the enumeration");
            report.per_n.push_back(stored.counts);
        } else {
            LevelScan scan = scan_level(n, level, codes);
            report.per_n.push_back(scan.counts);
            cp.levels.push_back({scan.counts, level_hash});
            for (const CanonicalCode& c : scan.counterexamples)
                cp.counterexamples.emplace_back(n, c.bytes);
            for (const CanonicalCode& c : scan.ambiguous) cp.ambiguous.emplace_back(n, c.bytes);
            if (checkpoint_path) save_checkpoint(*checkpoint_path, cp);
        }
    }
    for (const auto& [n, code] : cp.counterexamples)
        if (n <= max_n) report.counterexamples.push_back(CanonicalCode{code});
    for (const auto& [n, code] : cp.ambiguous)
        if (n <= max_n) report.ambiguous_problematic.push_back(CanonicalCode{code});
    return report;
}

}  // namespace nacrig
