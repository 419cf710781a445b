#include "nacrig/fixtures.hpp"

namespace nacrig::fixtures {

namespace {

Graph complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

}  // namespace

Graph c4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

Graph k4() { return complete(4); }

Graph k5() { return complete(5); }

Graph k23() { return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

Graph k33() {
    return Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

Graph prism() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph fig2_left() {
    std::vector<Edge> e;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) e.emplace_back(u, v);
    e.emplace_back(2, 5);  // cf
    return Graph(6, e);
}

Graph fig2_right() {
    // ab ac ad ae bc bd be ce de df cf
    return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4},
                     {3, 5}, {2, 5}});
}

Graph fig8_left() {
    // ab ad ae bc be cd ce cf df ef ga gd
    return Graph(7, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 5},
                     {4, 5}, {6, 0}, {6, 3}});
}

Graph fig8_right() {
    // ad ae bc be cd ce cf df ef ga gb gd
    return Graph(7, {{0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5},
                     {6, 0}, {6, 1}, {6, 3}});
}

Graph fig9() {
    // ab bc ac de df ef ad cf be bg ge
    return Graph(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {2, 5}, {1, 4},
                     {1, 6}, {6, 4}});
}

Graph fig12() {
    return Graph(12, {{0, 1},  {1, 2},  {2, 3},  {3, 4},  {0, 10}, {10, 1}, {1, 11},
                      {11, 2}, {2, 6},  {6, 3},  {3, 7},  {7, 4},  {7, 10}, {4, 5},
                      {5, 0},  {4, 8},  {8, 5},  {5, 9},  {9, 0},  {8, 11}, {9, 6}});
}

Graph rotating_triangles() {
    // Paper-figure vertices 1..9 shifted to 0..8: inner triangle 0,1,2 and
    // outer triangles (0,3,4), (2,5,6), (1,7,8) hinged by 8-3, 4-5, 6-7.
    return Graph(9, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}, {2, 5}, {5, 6}, {2, 6},
                     {1, 7}, {7, 8}, {1, 8}, {8, 3}, {4, 5}, {6, 7}});
}

}  // namespace nacrig::fixtures
