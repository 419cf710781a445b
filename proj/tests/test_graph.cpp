#include <doctest.h>

#include <random>
#include <set>

#include "nacrig/errors.hpp"
#include "nacrig/fixtures.hpp"
#include "nacrig/graph.hpp"
#include "oracles.hpp"

using namespace nacrig;

TEST_CASE("graph construction invariants") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), ContractError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), ContractError);
    CHECK_THROWS_AS(Graph(63, {}), CapacityError);
    Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);  // duplicates collapse
    CHECK(g.degree(1) == 2);
}

TEST_CASE("graph6 parse: known strings") {
    Graph k4 = parse_graph6("C~");
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);

    Graph single = parse_graph6("@");
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    // Hand-decoded 'Cr' (0b110011 over pairs 01,02,12,03,13,23), confirmed
    // against a second decoder: a 4-cycle through 0-1-3-2.
    Graph cr = parse_graph6("Cr");
    CHECK(cr.vertex_count() == 4);
    CHECK(cr.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});

    // C4 with edges {01,12,23,03} encodes to "Cl".
    CHECK(to_graph6(fixtures::c4()) == "Cl");
    CHECK(parse_graph6(">>graph6<<Cl\n") == fixtures::c4());
}

TEST_CASE("graph6 parse errors name the byte offset") {
    CHECK_THROWS_WITH_AS(parse_graph6(""), doctest::Contains("empty"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph6("~~~"), doctest::Contains("offset 0"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph6(std::string("C") + char(31)),
                         doctest::Contains("out-of-range"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph6("C~~"), doctest::Contains("trailing garbage"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph6("C"), doctest::Contains("truncated"), ParseError);
    // 1-vertex graph has zero adjacency bits, so any edge byte is garbage.
    CHECK_THROWS_AS(parse_graph6("@?"), ParseError);
}

TEST_CASE("graph6 round-trip on random graphs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> nd(0, 12);
        const int n = nd(rng);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g(n, edges);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
    // A large sparse one near the cap.
    std::vector<Edge> edges;
    for (int v = 1; v < 62; ++v) edges.emplace_back(v - 1, v);
    Graph path(62, edges);
    CHECK(parse_graph6(to_graph6(path)) == path);
}

TEST_CASE("edge list parsing") {
    ParsedGraph tri = parse_edge_list("a b\nb c\nc a");
    CHECK(tri.graph.vertex_count() == 3);
    CHECK(tri.graph.edge_count() == 3);
    CHECK(tri.names == std::vector<std::string>{"a", "b", "c"});

    ParsedGraph dedup = parse_edge_list("1 2\n2 1");
    CHECK(dedup.graph.edge_count() == 1);

    ParsedGraph fig9 = parse_edge_list(
        "a b\nb c\na c\nd e\nd f\ne f\na d\nc f\nb e\nb g\ng e\n");
    CHECK(fig9.graph.vertex_count() == 7);
    CHECK(fig9.graph.edge_count() == 11);

    CHECK_THROWS_AS(parse_edge_list("a a"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("a b c"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("lonely"), ParseError);
    CHECK(parse_edge_list("# only comments\n\n").graph.vertex_count() == 0);
}

TEST_CASE("edge list round-trip via the name table") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracles::random_connected_graph(rng, 9, 14);
        ParsedGraph back = parse_edge_list(to_edge_list(g));
        REQUIRE(back.graph.vertex_count() == g.vertex_count());
        std::set<Edge> original(g.edges().begin(), g.edges().end());
        std::set<Edge> recovered;
        for (const Edge& e : back.graph.edges())
            recovered.insert(Edge(std::stoi(back.names[e.u]), std::stoi(back.names[e.v])));
        CHECK(original == recovered);
    }
}

TEST_CASE("connected components") {
    ParsedGraph path = parse_edge_list("a b\nb c");
    CHECK(connected_components(path.graph).blocks == std::vector<std::vector<int>>{{0, 1, 2}});

    Graph isolated(3, {});
    CHECK(connected_components(isolated).blocks ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});

    Graph two(4, {{0, 1}, {2, 3}});
    CHECK(connected_components(two).blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
}

TEST_CASE("triangles on fixtures and against the brute scan") {
    CHECK(triangles(fixtures::k4()).size() == 4);
    CHECK(triangles(fixtures::c4()).empty());
    CHECK(triangles(fixtures::prism()) ==
          std::vector<std::array<int, 3>>{{0, 1, 2}, {3, 4, 5}});

    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = oracles::random_connected_graph(rng, 8, 16);
        CHECK(triangles(g) == oracles::brute_triangles(g));
    }
}

TEST_CASE("canonical form is permutation invariant") {
    // Exhaustive over all permutations for every graph on up to 4 vertices.
    for (int n = 2; n <= 4; ++n) {
        oracles::for_each_graph(n, [&](const Graph& g) {
            const CanonicalCode code = canonical_form(g);
            for (const auto& perm : oracles::all_permutations(n))
                CHECK(canonical_form(g.permuted(perm)) == code);
        });
    }
    // All permutations for selected 5- and 6-vertex graphs.
    for (const Graph& g : {fixtures::k23(), fixtures::prism(), fixtures::k33(),
                           fixtures::fig2_left(), fixtures::fig2_right()}) {
        const CanonicalCode code = canonical_form(g);
        for (const auto& perm : oracles::all_permutations(g.vertex_count()))
            CHECK(canonical_form(g.permuted(perm)) == code);
    }
    // 100 random permutations for 7..10 vertices.
    std::mt19937 rng(4242);
    for (int n = 7; n <= 10; ++n) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3) edges.emplace_back(u, v);
        Graph g(n, edges);
        const CanonicalCode code = canonical_form(g);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 100; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(g.permuted(perm)) == code);
        }
    }
}

TEST_CASE("canonical form separates isomorphism classes") {
    CHECK(canonical_form(fixtures::c4()) !=
          canonical_form(Graph(4, {{0, 1}, {1, 2}, {2, 3}})));  // C4 vs P4

    // The two 12-edge counterexample graphs are non-isomorphic; the brute
    // oracle scans all 7! permutations.
    CHECK_FALSE(oracles::brute_isomorphic(fixtures::fig8_left(), fixtures::fig8_right()));
    CHECK(canonical_form(fixtures::fig8_left()) != canonical_form(fixtures::fig8_right()));

    // Agreement with the all-permutations key on every pair drawn from a
    // pool of random 6-vertex graphs.
    std::mt19937 rng(55);
    std::vector<Graph> pool;
    for (int trial = 0; trial < 25; ++trial) pool.push_back(oracles::random_connected_graph(rng, 6, 11));
    for (const Graph& a : pool)
        for (const Graph& b : pool) {
            if (a.vertex_count() != b.vertex_count()) continue;
            const bool same_code = canonical_form(a) == canonical_form(b);
            const bool same_key =
                oracles::brute_canonical_key(a) == oracles::brute_canonical_key(b);
            CHECK(same_code == same_key);
        }
}

TEST_CASE("canonical form is stable on symmetric graphs") {
    // Graphs whose degree refinement leaves coarse cells stress the
    // pruned ordering search; relabelings must not change the code.
    std::mt19937 rng(1861);
    std::vector<Graph> pool = {fixtures::k33(), fixtures::prism(), fixtures::fig12()};
    for (int trial = 0; trial < 10; ++trial) {
        // Random 3-regular-ish circulant on 8 vertices.
        std::vector<Edge> edges;
        const int step = 2 + static_cast<int>(rng() % 2);
        for (int v = 0; v < 8; ++v) {
            edges.emplace_back(v, (v + 1) % 8);
            edges.emplace_back(v, (v + step) % 8);
        }
        pool.emplace_back(8, edges);
    }
    for (const Graph& g : pool) {
        const CanonicalCode code = canonical_form(g, 12);
        std::vector<int> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 60; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(g.permuted(perm), 12) == code);
        }
    }
}

TEST_CASE("canonical form capacity") {
    CHECK_THROWS_AS(canonical_form(Graph(11, {})), CapacityError);
    CHECK_NOTHROW(canonical_form(Graph(11, {}), 12));
}
