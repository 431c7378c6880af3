#pragma once

#include "stab/graph.hpp"

namespace stab {

// Boolean square B(g): u ~ v iff u != v and they share a neighbor in g.
Graph boolean_square(const Graph& g);

// Dispensability of a B(g)-edge {u,v} with respect to g: some w satisfies
// both strict-subset disjunctions of the definition. Requires {u,v} to be an
// edge of B(g).
bool dispensable(const Graph& g, int u, int v);

// Cartesian skeleton S(g): B(g) minus dispensable edges.
Graph cartesian_skeleton(const Graph& g);

} // namespace stab
