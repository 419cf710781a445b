#include <doctest.h>

#include <random>
#include <set>

#include "nacrig/errors.hpp"
#include "nacrig/fixtures.hpp"
#include "nacrig/nac.hpp"
#include "nacrig/structure.hpp"
#include "oracles.hpp"

using namespace nacrig;

namespace {

EdgeColoring make_coloring(const Graph& g, const std::set<Edge>& red) {
    std::vector<std::pair<Edge, Color>> entries;
    for (const Edge& e : g.edges())
        entries.emplace_back(e, red.contains(e) ? Color::red : Color::blue);
    return EdgeColoring::make(std::move(entries));
}

std::set<std::vector<std::pair<Edge, Color>>> as_set(const std::vector<EdgeColoring>& list) {
    std::set<std::vector<std::pair<Edge, Color>>> out;
    for (const EdgeColoring& c : list) out.insert(c.entries);
    return out;
}

std::set<std::vector<std::pair<Edge, Color>>> as_set(const std::vector<NacColoring>& list) {
    std::set<std::vector<std::pair<Edge, Color>>> out;
    for (const NacColoring& c : list) out.insert(c.coloring.entries);
    return out;
}

}  // namespace

TEST_CASE("is_nac on the quadrilateral colorings") {
    const Graph c4 = fixtures::c4();
    // delta2: 01, 12 blue; 23, 03 red.
    const EdgeColoring delta2 = make_coloring(c4, {{2, 3}, {0, 3}});
    CHECK(is_nac(c4, delta2).ok);
    // delta1: 01, 23 blue; 12, 03 red.
    const EdgeColoring delta1 = make_coloring(c4, {{1, 2}, {0, 3}});
    CHECK(is_nac(c4, delta1).ok);

    const EdgeColoring all_red = make_coloring(c4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    NacVerdict verdict = is_nac(c4, all_red);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.fail == NacVerdict::Fail::not_surjective);
}

TEST_CASE("is_nac witness on a triangle with one blue edge") {
    const Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    const EdgeColoring c = make_coloring(tri, {{0, 1}, {1, 2}});  // 02 blue
    NacVerdict verdict = is_nac(tri, c);
    REQUIRE_FALSE(verdict.ok);
    CHECK(verdict.fail == NacVerdict::Fail::almost_cycle);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->off_edge == Edge(0, 2));
    CHECK(verdict.witness->majority == Color::red);
    // The witness cycle (path + off edge) carries exactly one off-color edge.
    const auto& cycle = verdict.witness->cycle;
    REQUIRE(cycle.size() == 3);
    int off_count = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Edge e(cycle[i], cycle[(i + 1) % cycle.size()]);
        if (c.at(e) != verdict.witness->majority) ++off_count;
    }
    CHECK(off_count == 1);
}

TEST_CASE("is_nac rejects a domain mismatch") {
    const Graph c4 = fixtures::c4();
    EdgeColoring partial = EdgeColoring::make({{Edge(0, 1), Color::red}});
    CHECK_THROWS_AS(is_nac(c4, partial), ContractError);
}

TEST_CASE("is_nac agrees with the cycle-definition oracle") {
    std::mt19937 rng(1312);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracles::random_connected_graph(rng, 6, 9);
        const std::uint64_t total = std::uint64_t{1} << g.edge_count();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const EdgeColoring c = oracles::coloring_from_mask(g, mask);
            CHECK(is_nac(g, c).ok == oracles::is_nac_by_cycles(g, c));
        }
    }
}

TEST_CASE("enumerate_nac on the fixtures") {
    const std::vector<NacColoring> c4_all = enumerate_nac(fixtures::c4());
    CHECK(c4_all.size() == 6);
    CHECK(enumerate_nac(fixtures::c4(), true).size() == 3);
    CHECK(as_set(c4_all) == as_set(oracles::brute_nac_filter(fixtures::c4())));

    CHECK(enumerate_nac(fixtures::k4()).empty());
    CHECK(enumerate_nac(fixtures::fig8_left()).empty());
    CHECK(enumerate_nac(fixtures::fig8_right()).empty());

    // The prism coloring with both triangles red and the connectors blue.
    const Graph prism = fixtures::prism();
    const EdgeColoring both_triangles_red =
        make_coloring(prism, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    bool found = false;
    for (const NacColoring& c : enumerate_nac(prism)) found |= c.coloring == both_triangles_red;
    CHECK(found);
}

TEST_CASE("enumerate_nac equals the brute filter on small graphs") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracles::random_connected_graph(rng, 7, 10);
        CHECK(as_set(enumerate_nac(g)) == as_set(oracles::brute_nac_filter(g)));
    }
}

TEST_CASE("enumerate_nac output contracts") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = oracles::random_connected_graph(rng, 7, 11);
        const DeltaClassPartition delta = delta_classes(g);
        const std::vector<NacColoring> list = enumerate_nac(g);

        // Deterministic order: ascending red-class bitmask.
        std::uint64_t last_mask = 0;
        for (const NacColoring& c : list) {
            std::uint64_t mask = 0;
            for (std::size_t k = 0; k < delta.classes.size(); ++k)
                if (c.coloring.at(delta.classes[k].edges.front()) == Color::red)
                    mask |= std::uint64_t{1} << k;
            CHECK(mask > last_mask);
            last_mask = mask;

            // Returned witnesses re-validate.
            CHECK(is_nac(g, c.coloring).ok);
            // Classes are monochromatic in every returned coloring.
            for (const auto& cls : delta.classes) {
                const Color first = c.coloring.at(cls.edges.front());
                for (const Edge& e : cls.edges) CHECK(c.coloring.at(e) == first);
            }
            // Swap symmetry.
            CHECK(is_nac(g, c.coloring.swapped()).ok);
        }

        // up_to_swap keeps exactly one of each pair.
        const std::vector<NacColoring> half = enumerate_nac(g, true);
        CHECK(half.size() * 2 == list.size());
        auto full_set = as_set(list);
        for (const NacColoring& c : half) {
            CHECK(full_set.contains(c.coloring.entries));
            CHECK(full_set.contains(c.coloring.swapped().entries));
        }
    }
}

TEST_CASE("has_nac and disconnected handling") {
    CHECK(has_nac(fixtures::prism()));
    CHECK_FALSE(has_nac(fixtures::k4()));
    CHECK(has_nac(fixtures::fig12()));

    // Two edge-bearing components short-circuit to true.
    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(has_nac(two_triangles));
    // A single edge cannot be surjective.
    CHECK_FALSE(has_nac(Graph(2, {{0, 1}})));
    // Isolated vertices do not change the answer.
    Graph k4_isolated(6, fixtures::k4().edges());
    CHECK_FALSE(has_nac(k4_isolated));

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracles::random_connected_graph(rng, 7, 10);
        CHECK(has_nac(g) == !enumerate_nac(g).empty());
    }
}

TEST_CASE("enumerate_nac handles disconnected graphs") {
    // Two triangles plus an isolated vertex: the class search still yields
    // the complete list, and any component split shows up in it.
    const Graph g(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const std::vector<NacColoring> list = enumerate_nac(g);
    CHECK(list.size() == 2);
    CHECK(as_set(list) == as_set(oracles::brute_nac_filter(g)));
    CHECK(has_nac(g));

    // Random disjoint unions (plus an isolated vertex) against the filter.
    std::mt19937 rng(451);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph a = oracles::random_connected_graph(rng, 4, 5);
        const Graph b = oracles::random_connected_graph(rng, 4, 5);
        std::vector<Edge> edges = a.edges();
        for (const Edge& e : b.edges())
            edges.emplace_back(e.u + a.vertex_count(), e.v + a.vertex_count());
        const Graph both(a.vertex_count() + b.vertex_count() + 1, edges);
        CHECK(as_set(enumerate_nac(both)) == as_set(oracles::brute_nac_filter(both)));
        CHECK(has_nac(both) == !oracles::brute_nac_filter(both).empty());
    }
}

TEST_CASE("NacColoring::create validates and partitions") {
    const Graph c4 = fixtures::c4();
    const NacColoring nac = NacColoring::create(c4, make_coloring(c4, {{2, 3}, {0, 3}}));
    CHECK(nac.red_components.blocks == std::vector<std::vector<int>>{{0, 2, 3}, {1}});
    CHECK(nac.blue_components.blocks == std::vector<std::vector<int>>{{0, 1, 2}, {3}});

    CHECK_THROWS_AS(NacColoring::create(c4, make_coloring(c4, {})), ContractError);
    CHECK_THROWS_AS(
        NacColoring::create(fixtures::k4(), make_coloring(fixtures::k4(), {{0, 1}})),
        ContractError);
}

TEST_CASE("coloring text format round-trip and errors") {
    const Graph prism = fixtures::prism();
    std::vector<std::string> names = {"a", "b", "c", "d", "e", "f"};
    const EdgeColoring c =
        make_coloring(prism, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const std::string text = to_coloring_text(prism, c, names);
    CHECK(parse_coloring(text, prism, names) == c);

    CHECK_THROWS_AS(parse_coloring("a b purple\n", prism, names), ParseError);
    CHECK_THROWS_AS(parse_coloring("a e r\n", prism, names), ParseError);   // not an edge
    CHECK_THROWS_AS(parse_coloring("a b r\n", prism, names), ParseError);   // incomplete
    CHECK_THROWS_AS(parse_coloring(text + "a b r\n", prism, names), ContractError);  // duplicate
}
