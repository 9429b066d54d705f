#pragma once

#include "tvw/graph.hpp"

namespace tvw {

enum class MinorPattern { K4, K23 };

// Exact minor test for the two fixed small targets, by exhaustive search over
// connected disjoint branch sets with incremental adjacency pruning. Kept as
// an independent oracle for is_2winding.
bool has_minor(const Graph& g, MinorPattern h);

// Standard characterization: g is outerplanar iff g plus an apex vertex
// adjacent to every vertex is planar (decided deterministically).
bool is_outerplanar(const Graph& g);

// A graph is 2-winding iff it is not outerplanar (equivalently, iff it has a
// K4 or K_{2,3} minor; the minor route is cross-checked in tests).
bool is_2winding(const Graph& g);

} // namespace tvw
