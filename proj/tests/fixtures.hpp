#pragma once

#include "raag/graph.hpp"

namespace raag::fixtures {

// Star K_{1,3}: center c, leaves l1, l2, l3.
inline SimplicialGraph gamma1() { return parse_graph("c l1\nc l2\nc l3\n"); }

// Triangles abc and def joined by the edge cd.
inline SimplicialGraph gamma2() { return parse_graph("a b\nb c\na c\nc d\nd e\ne f\nd f\n"); }

inline SimplicialGraph triangle() { return parse_graph("a b\nb c\na c\n"); }
inline SimplicialGraph path3() { return parse_graph("a b\nb c\n"); }
inline SimplicialGraph path4() { return parse_graph("a b\nb c\nc d\n"); }
inline SimplicialGraph square() { return parse_graph("a b\nb c\nc d\nd a\n"); }
inline SimplicialGraph k2() { return parse_graph("a b\n"); }
inline SimplicialGraph k4() { return parse_graph("a b\na c\na d\nb c\nb d\nc d\n"); }

}  // namespace raag::fixtures
