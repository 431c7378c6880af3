#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stab/error.hpp"
#include "stab/products.hpp"

using namespace stab;

namespace {

// Random graph corpus without isolated vertices, orders 2..max_order.
std::vector<Graph> corpus(int count, int max_order, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Graph> out;
    while (static_cast<int>(out.size()) < count) {
        int n = 2 + static_cast<int>(rng() % (max_order - 1));
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        bool isolated = false;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 0) isolated = true;
        if (!isolated) out.push_back(std::move(g));
    }
    return out;
}

Graph relabel(const Graph& g, const Permutation& p) {
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(p.of(u), p.of(v));
    return h;
}

} // namespace

TEST_CASE("two-vertex building blocks") {
    Graph k2 = complete_graph(2);
    CHECK(isomorphism(product(k2, k2, ProductKind::Cartesian).graph, cycle_graph(4)).has_value());
    CHECK(product(k2, k2, ProductKind::Strong).graph == complete_graph(4));
    CHECK(isomorphism(product(k2, k2, ProductKind::SemiStrong).graph, cycle_graph(4)).has_value());
    CHECK(isomorphism(product(k2, complement(k2), ProductKind::Lexicographic).graph,
                      cycle_graph(4))
              .has_value());
}

TEST_CASE("direct product of K3 and C5 is a circulant") {
    ProductGraph p = product(complete_graph(3), cycle_graph(5), ProductKind::Direct);
    auto iso = isomorphism(p.graph, circulant(CirculantSpec::make(15, {1, 4})));
    REQUIRE(iso.has_value());
}

TEST_CASE("product indexing convention") {
    ProductGraph p = product(complete_graph(3), cycle_graph(5), ProductKind::Direct);
    CHECK(p.left_order == 3);
    CHECK(p.right_order == 5);
    CHECK(p.index(2, 3) == 13);
    CHECK(p.unindex(13) == std::make_pair(2, 3));
    // (0,0) ~ (1,1): K3 edge 0-1 and C5 edge 0-1.
    CHECK(p.graph.adjacent(p.index(0, 0), p.index(1, 1)));
    CHECK_FALSE(p.graph.adjacent(p.index(0, 0), p.index(1, 0)));
}

TEST_CASE("identity bundle equals the direct product") {
    Graph g = cycle_graph(5), h = complete_graph(3);
    BundleMap p = BundleMap::constant(5, Permutation::identity(3));
    CHECK(direct_bundle(g, h, p).graph == product(g, h, ProductKind::Direct).graph);
}

TEST_CASE("bundle validation") {
    Graph h = cycle_graph(4);
    // x -> x+1 on Z4 is not an involution, so a constant bundle violates
    // p(a,b) = p(b,a)^-1.
    CHECK_THROWS_AS(BundleMap::constant(3, Permutation::from_cycles(4, {{0, 1, 2, 3}})), Error);
    // A transposition of adjacent C4 vertices is an involution but not an
    // automorphism of C4.
    BundleMap bad = BundleMap::constant(3, Permutation::from_cycles(4, {{0, 1}}));
    CHECK_THROWS_AS(direct_bundle(complete_graph(3), h, bad), Error);
    BundleMap good = BundleMap::constant(3, Permutation::from_cycles(4, {{0, 2}}));
    CHECK(direct_bundle(complete_graph(3), h, good).graph.order() == 12);
}

TEST_CASE("cpc2-style bundle on K4") {
    // C3 x^p K4 with the constant half-turn shift; 12 vertices, 3-regular
    // right-factor action.
    Graph g = cycle_graph(3), h = complete_graph(4);
    std::vector<int> img{2, 3, 0, 1};
    BundleMap p = BundleMap::constant(3, Permutation(img));
    ProductGraph b = direct_bundle(g, h, p);
    CHECK(b.graph.order() == 12);
    for (int v = 0; v < 12; ++v) CHECK(b.graph.degree(v) == 6);
}

TEST_CASE("products commute with relabeling") {
    std::mt19937 rng(99);
    auto graphs = corpus(8, 5, 1234);
    for (ProductKind kind : {ProductKind::Direct, ProductKind::Cartesian, ProductKind::Strong,
                             ProductKind::SemiStrong, ProductKind::Lexicographic}) {
        for (int trial = 0; trial < 4; ++trial) {
            const Graph& g = graphs[rng() % graphs.size()];
            const Graph& h = graphs[rng() % graphs.size()];
            std::vector<int> img(g.order());
            std::iota(img.begin(), img.end(), 0);
            std::shuffle(img.begin(), img.end(), rng);
            Permutation p{img};
            Graph lhs = product(relabel(g, p), h, kind).graph;
            Graph rhs = product(g, h, kind).graph;
            auto iso = isomorphism(lhs, rhs);
            CHECK(iso.has_value());
        }
    }
}

TEST_CASE("section 3 lemma invariants on a random corpus") {
    auto graphs = corpus(24, 6, 4321);
    std::mt19937 rng(5);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const Graph& g = graphs[rng() % graphs.size()];
        const Graph& h = graphs[rng() % graphs.size()];
        BasicProfile pg = classify_basic(g), ph = classify_basic(h);

        BasicProfile direct = classify_basic(product(g, h, ProductKind::Direct).graph);
        CHECK(direct.connected ==
              (pg.connected && ph.connected && (!pg.bipartite() || !ph.bipartite())));
        CHECK(!direct.bipartite() == (!pg.bipartite() && !ph.bipartite()));
        CHECK(direct.r_thin() == (pg.r_thin() && ph.r_thin()));

        // Cartesian: R-thick iff some component is a 4-cycle.
        Graph cart = product(g, h, ProductKind::Cartesian).graph;
        BasicProfile pc = classify_basic(cart);
        bool has_c4_component = false;
        {
            std::vector<int> comp(cart.order(), -1);
            int nc = 0;
            for (int s = 0; s < cart.order(); ++s) {
                if (comp[s] != -1) continue;
                std::vector<int> stack{s}, members;
                comp[s] = nc;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    members.push_back(v);
                    const VertexSet& nb = cart.neighbors(v);
                    for (auto w = nb.find_first(); w != VertexSet::npos; w = nb.find_next(w))
                        if (comp[w] == -1) {
                            comp[w] = nc;
                            stack.push_back(static_cast<int>(w));
                        }
                }
                if (members.size() == 4) {
                    Graph sub = induced(cart, members);
                    if (isomorphism(sub, cycle_graph(4)).has_value()) has_c4_component = true;
                }
                ++nc;
            }
        }
        CHECK(!pc.r_thin() == has_c4_component);

        BasicProfile ps = classify_basic(product(g, h, ProductKind::Strong).graph);
        CHECK_FALSE(ps.bipartite());
        CHECK(ps.r_thin());

        // Semi-strong: R-thin iff right factor R-thin and left closed
        // neighborhoods pairwise distinct.
        BasicProfile pss = classify_basic(product(g, h, ProductKind::SemiStrong).graph);
        bool closed_distinct = true;
        for (int a = 0; a < g.order() && closed_distinct; ++a)
            for (int b = a + 1; b < g.order(); ++b) {
                VertexSet ca = g.neighbors(a);
                ca.set(a);
                VertexSet cb = g.neighbors(b);
                cb.set(b);
                if (ca == cb) {
                    closed_distinct = false;
                    break;
                }
            }
        CHECK(pss.r_thin() == (ph.r_thin() && closed_distinct));

        BasicProfile pl = classify_basic(product(g, h, ProductKind::Lexicographic).graph);
        CHECK(pl.r_thin() == ph.r_thin());
        ++checked;
    }
    CHECK(checked == 60);
}
