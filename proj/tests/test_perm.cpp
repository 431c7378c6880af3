#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stab/autsearch.hpp"
#include "stab/error.hpp"
#include "stab/perm.hpp"

using namespace stab;

TEST_CASE("permutation basics") {
    Permutation id = Permutation::identity(4);
    CHECK(id.is_identity());
    Permutation c = Permutation::from_cycles(4, {{0, 1, 2, 3}});
    CHECK(c.of(3) == 0);
    CHECK(compose(c, c.inverse()).is_identity());
    CHECK(c.is_derangement());
    CHECK_FALSE(Permutation::from_cycles(4, {{0, 1}}).is_derangement());
    CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
}

TEST_CASE("compose applies left then right") {
    Permutation a = Permutation::from_cycles(3, {{0, 1}});
    Permutation b = Permutation::from_cycles(3, {{1, 2}});
    // 0 -> 1 under a, then 1 -> 2 under b.
    CHECK(compose(a, b).of(0) == 2);
}

TEST_CASE("group_order examples") {
    CHECK(group_order(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})}) == 5);
    CHECK(group_order(4, {}) == 1);
    CHECK(group_order(3, {Permutation::from_cycles(3, {{0, 1}}),
                          Permutation::from_cycles(3, {{0, 1, 2}})}) == 6);
    CHECK_THROWS_AS(group_order(3, {Permutation::identity(4)}), Error);
}

TEST_CASE("group_order invariant under generator list shuffling") {
    Permutation a = Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}});
    Permutation b = Permutation::from_cycles(6, {{1, 5}, {2, 4}});
    BigInt expect = group_order(6, {a, b}); // dihedral, order 12
    CHECK(expect == 12);
    CHECK(group_order(6, {b, a}) == expect);
    CHECK(group_order(6, {a, b, a, b, a}) == expect);
}

TEST_CASE("stabilizer chain membership") {
    Permutation a = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
    auto chain = StabilizerChain::build(5, {a});
    CHECK(chain.contains(compose(a, a)));
    CHECK_FALSE(chain.contains(Permutation::from_cycles(5, {{0, 1}})));
}

TEST_CASE("symmetric group order via natural base") {
    std::vector<Permutation> gens{Permutation::from_cycles(6, {{0, 1}}),
                                  Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})};
    auto chain = StabilizerChain::build_natural_base(6, gens);
    CHECK(chain.order() == 720);
}

TEST_CASE("dfs_lex visits the identity first") {
    std::vector<Permutation> gens{Permutation::from_cycles(4, {{0, 1}}),
                                  Permutation::from_cycles(4, {{0, 1, 2, 3}})};
    auto chain = StabilizerChain::build_natural_base(4, gens);
    std::vector<Permutation> seen;
    chain.dfs_lex(
        [&](const Permutation& p) {
            seen.push_back(p);
            return seen.size() >= 3;
        },
        [](int, const Permutation&) { return true; }, 1u << 20);
    REQUIRE(seen.size() == 3);
    CHECK(seen[0].is_identity());
    // Lex order on image vectors: [0,1,2,3] then [0,1,3,2] then [0,2,...].
    CHECK(seen[1].images() == std::vector<int>{0, 1, 3, 2});
    CHECK(seen[1] < seen[2]);
}

TEST_CASE("automorphism groups match brute force on all graphs up to order 5") {
    Budget budget(default_node_budget());
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : oracle::all_graphs(n)) {
            PermGroup grp = automorphism_group(g, budget);
            CHECK(grp.order == oracle::brute_aut_count(g));
            for (const Permutation& p : grp.generators)
                CHECK(oracle::preserves_adjacency(g, p.images()));
        }
}

TEST_CASE("automorphism groups match brute force on sampled graphs of order 6 and 7") {
    Budget budget(default_node_budget());
    std::mt19937 rng(20240817);
    for (int n = 6; n <= 7; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() & 1) g.add_edge(u, v);
            CHECK(automorphism_group(g, budget).order == oracle::brute_aut_count(g));
        }
    }
}

TEST_CASE("automorphism group with colored cells computes the stabilizer") {
    // Stabilizer of vertex 0 in C5 has order 2 (the reflection).
    Graph c5 = cycle_graph(5);
    Budget budget(default_node_budget());
    PermGroup stab0 = automorphism_group(c5, {{0}, {1, 2, 3, 4}}, budget);
    CHECK(stab0.order == 2);
    for (const Permutation& p : stab0.generators) CHECK(p.of(0) == 0);
}

TEST_CASE("search budget is enforced") {
    Graph big = complete_graph(40);
    Budget tiny(10);
    CHECK_THROWS_AS(automorphism_group(big, tiny), Error);
}
