#pragma once

#include "nacrig/graph.hpp"

// Small graphs used throughout the test suites and docs. Vertex letters map
// to indices in alphabetical order (a=0, b=1, ...).
namespace nacrig::fixtures {

Graph c4();     // 4-cycle {01,12,23,03}
Graph k4();
Graph k5();
Graph k23();    // complete bipartite {x1,x2} x {y1,y2,y3}; x=0..1, y=2..4
Graph k33();
Graph prism();  // 3-prism: triangles abc, def plus ad, be, cf

// Two 6-vertex graphs with 11 edges (the maximum admitting a flexible
// labeling): K5 plus a pendant edge cf, and K5 minus cd with f joined to
// c and d.
Graph fig2_left();
Graph fig2_right();

// 7-vertex graphs that are not spanned by one triangle-connected class yet
// have no NAC-coloring.
Graph fig8_left();
Graph fig8_right();

// 7-vertex graph with a NAC-coloring but no independent separating vertex
// set and no separating set of connecting edges.
Graph fig9();

// 12-vertex problematic Laman graph (outer hexagon a1..a6 = 0..5, inner
// hexagon i1..i6 = 6..11).
Graph fig12();

// 9-vertex graph of three outer triangles hinged on an inner triangle;
// its third NAC-coloring drives the rotating-triangles motion.
Graph rotating_triangles();

}  // namespace nacrig::fixtures
