#include "stab/skeleton.hpp"

#include "stab/error.hpp"

namespace stab {

Graph boolean_square(const Graph& g) {
    const int n = g.order();
    Graph b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.neighbors(u).intersects(g.neighbors(v))) b.add_edge(u, v);
    return b;
}

namespace {

bool strict_subset(const VertexSet& a, const VertexSet& b) {
    return a.is_subset_of(b) && a != b;
}

// One side of the dispensability definition for the ordered pair (u,v):
// N(u) n N(v) < N(u) n N(w)   or   N(u) < N(w) < N(v).
bool side_holds(const Graph& g, int u, int v, int w) {
    VertexSet uv = g.neighbors(u) & g.neighbors(v);
    VertexSet uw = g.neighbors(u) & g.neighbors(w);
    if (strict_subset(uv, uw)) return true;
    return strict_subset(g.neighbors(u), g.neighbors(w)) &&
           strict_subset(g.neighbors(w), g.neighbors(v));
}

} // namespace

bool dispensable(const Graph& g, int u, int v) {
    if (u == v || !g.neighbors(u).intersects(g.neighbors(v)))
        fail(Errc::not_a_boolean_square_edge,
             "dispensable() needs an edge of the Boolean square");
    for (int w = 0; w < g.order(); ++w)
        if (side_holds(g, u, v, w) && side_holds(g, v, u, w)) return true;
    return false;
}

Graph cartesian_skeleton(const Graph& g) {
    Graph b = boolean_square(g);
    Graph s(g.order());
    for (auto [u, v] : b.edges())
        if (!dispensable(g, u, v)) s.add_edge(u, v);
    return s;
}

} // namespace stab
