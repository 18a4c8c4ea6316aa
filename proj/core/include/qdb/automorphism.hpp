#pragma once

#include <vector>

#include "qdb/graph.hpp"

namespace qdb {

// Full automorphism group as explicit vertex permutations, sorted
// lexicographically. Backtracking with color-refinement pruning;
// order capped at kAutomorphismMaxOrder.
std::vector<std::vector<int>> automorphisms(const Graph& g);

// True iff the automorphism group acts transitively on edges
// (as unordered pairs). Edgeless graphs count as transitive.
bool is_edge_transitive(const Graph& g);

// Number of edge orbits under the automorphism group.
int edge_orbit_count(const Graph& g);

}  // namespace qdb
